#include "lk/corpus.hpp"

#include <cstdlib>
#include <fstream>

namespace lk {

namespace {

ScalarField qfield() { return ScalarField::parse("Q"); }

json make_abelian_line() {
    // a single line in degree 1: the closed-2-form model
    return linf_to_json(abelian_algebra({{1, 1}}), qfield());
}

json make_abelian_plane_deg0() { return linf_to_json(abelian_algebra({{0, 2}}), qfield()); }

json make_contractible() { return linf_to_json(contractible_algebra(1, 1), qfield()); }

json make_su2() { return linf_to_json(su2_algebra(), qfield()); }

json make_h3() { return linf_to_json(heisenberg_algebra(), qfield()); }

json make_str() { return linf_to_json(string_su2(), qfield()); }

json make_end() {
    return linf_to_json(end_example(Scalar(1), Scalar::sqrt_of(2)),
                        ScalarField::parse("Q(sqrt2)"));
}

json make_jacobiator_counterexample() {
    LInftyAlgebra bad;
    bad.space.dims[0] = 3;
    auto unit = [](int i) {
        std::vector<Scalar> v(3);
        v[i] = Scalar(1);
        return v;
    };
    bad.brackets[2][{{0, 0}, {0, 1}}] = unit(2);
    bad.brackets[2][{{0, 1}, {0, 2}}] = unit(0);
    bad.brackets[2][{{0, 0}, {0, 2}}] = unit(0);
    return linf_to_json(bad, qfield());
}

json make_kz2() { return simpset_to_json(k_g_1(cyclic_group(2), 4)); }

json make_delta1() { return simpset_to_json(standard_simplex(1, 3)); }

json make_point() { return simpset_to_json(point_complex(3)); }

json make_two_group_cocycle() {
    auto z2 = cyclic_group(2);
    std::vector<std::vector<std::vector<int>>> omega(
        2, std::vector<std::vector<int>>(2, std::vector<int>(2, 0)));
    omega[1][1][1] = 1;
    return two_group_to_json(cocycle_2group(z2, z2, omega));
}

json make_two_group_crossed() {
    return two_group_to_json(
        crossed_module_2group(cyclic_group(1), cyclic_group(2), {0, 0}, {{0, 1}}));
}

json make_horn21() { return subcomplex_to_json(SubComplex::horn(2, 1)); }

json make_bnd2() { return subcomplex_to_json(SubComplex::boundary(2)); }

json make_mc_abelian() {
    // a closed 2-form on the triangle for the degree-1 line
    auto L = abelian_algebra({{1, 1}});
    MCElement x = mc_zero(L, 2);
    x.forms[0] = PolyForm::monomial(2, {1, 0}, {0, 1}, Scalar(3, 2));
    return mc_to_json(x, qfield());
}

json make_mc_h3() {
    // flat heisenberg-valued 1-form on the triangle
    auto L = heisenberg_algebra();
    MCElement x = mc_zero(L, 2);
    x.forms[0] = PolyForm::differential(2, 0);
    x.forms[1] = PolyForm::differential(2, 1);
    x.forms[2] = PolyForm::monomial(2, {1, 0}, {1}, Scalar(1));
    return mc_to_json(x, qfield());
}

json make_horn_h3() {
    auto doc = mc_from_json(make_mc_h3());
    MCHorn h = MCHorn::restriction(doc.element, 1);
    return horn_to_json(h, qfield());
}

json make_pi_g_string() { return boundary_to_json(string_boundary_data(), qfield()); }

json make_pi_g_end() {
    return boundary_to_json(end_boundary_data(Scalar(1), Scalar::sqrt_of(2)),
                            ScalarField::parse("Q(sqrt2)"));
}

json make_cocycle_datum() {
    return json{{"schema", 1},
                {"type", "cocycle"},
                {"filling", "degree1"},
                {"b", {1.0, 0.0, 0.0, 0.0}}};
}

struct Entry {
    const char* name;
    json (*make)();
};

const Entry kEntries[] = {
    {"abelian-line-deg1", make_abelian_line},
    {"abelian-plane-deg0", make_abelian_plane_deg0},
    {"contractible", make_contractible},
    {"su2", make_su2},
    {"heisenberg", make_h3},
    {"str-su2", make_str},
    {"end-1-sqrt2", make_end},
    {"jacobiator-counterexample", make_jacobiator_counterexample},
    {"kz2", make_kz2},
    {"delta1", make_delta1},
    {"point", make_point},
    {"two-group-z2-cocycle", make_two_group_cocycle},
    {"two-group-z2-crossed", make_two_group_crossed},
    {"horn-2-1", make_horn21},
    {"boundary-2", make_bnd2},
    {"mc-abelian-closed", make_mc_abelian},
    {"mc-heisenberg", make_mc_h3},
    {"horn-heisenberg", make_horn_h3},
    {"pi-g-string", make_pi_g_string},
    {"pi-g-end", make_pi_g_end},
    {"cocycle-degree1", make_cocycle_datum},
};

}  // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (auto& e : kEntries) out.push_back(e.name);
    return out;
}

json corpus_document(const std::string& name) {
    if (const char* dir = std::getenv("LINFTYKAN_CORPUS_DIR")) {
        std::ifstream in(std::string(dir) + "/" + name + ".json");
        if (!in) throw DocumentError("corpus: cannot open override for '" + name + "'");
        json j;
        in >> j;
        return j;
    }
    for (auto& e : kEntries)
        if (name == e.name) return e.make();
    throw DocumentError("corpus: unknown document '" + name + "'");
}

json load_document(const std::string& path) {
    if (path.rfind("corpus:", 0) == 0) return corpus_document(path.substr(7));
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DocumentError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return j;
}

}  // namespace lk
