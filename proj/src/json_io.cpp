#include "lk/json_io.hpp"

namespace lk {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw DocumentError("document: " + what);
}

ScalarField field_of(const json& j) {
    std::string name = j.value("scalars", "Q");
    try {
        return ScalarField::parse(name);
    } catch (const std::exception& e) {
        throw DocumentError(std::string("document: bad scalar field: ") + e.what());
    }
}

void check_schema(const json& j, const char* type) {
    require(j.is_object(), "expected an object");
    require(j.value("schema", 0) == 1, "unsupported schema version");
    if (j.contains("type")) require(j["type"] == type, std::string("expected type ") + type);
}

}  // namespace

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, const ScalarField& field) {
    require(j.is_string() || j.is_number_integer(), "scalar must be a string or integer");
    Scalar s;
    if (j.is_number_integer()) {
        s = Scalar((long)j.get<long long>());
    } else {
        try {
            s = Scalar::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw DocumentError(std::string("document: bad scalar: ") + e.what());
        }
    }
    require(field.contains(s), "scalar '" + s.str() + "' outside the declared field " +
                                   field.str());
    return s;
}

json polyform_to_json(const PolyForm& f) {
    json terms = json::array();
    for (auto& [k, c] : f.terms()) {
        json dts = json::array();
        for (int v : k.dts) dts.push_back(v + 1);  // 1-based in documents
        terms.push_back({{"t", k.exps}, {"dt", dts}, {"c", scalar_to_json(c)}});
    }
    return {{"m", f.vars()}, {"terms", terms}};
}

PolyForm polyform_from_json(const json& j, const ScalarField& field) {
    require(j.is_object() && j.contains("m") && j.contains("terms"), "polyform shape");
    int m = j["m"].get<int>();
    require(m >= 0 && m <= 16, "polyform dimension out of range");
    PolyForm f(m);
    for (auto& t : j["terms"]) {
        std::vector<int> exps = t.value("t", std::vector<int>(m, 0));
        require((int)exps.size() == m, "polyform exponent vector length");
        std::vector<int> dts;
        for (auto& v : t.value("dt", std::vector<int>{})) {
            int idx = (int)v;
            require(idx >= 1 && idx <= m, "polyform dt index");
            dts.push_back(idx - 1);
        }
        f.add_term(exps, dts, scalar_from_json(t.at("c"), field));
    }
    return f;
}

json linf_to_json(const LInftyAlgebra& L, const ScalarField& field) {
    json dims = json::object();
    for (auto& [d, n] : L.space.dims) dims[std::to_string(d)] = n;
    json brackets = json::array();
    for (auto& [k, table] : L.brackets)
        for (auto& [tuple, out] : table) {
            json inputs = json::array();
            for (auto& e : tuple) inputs.push_back({e.first, e.second});
            int total = 0;
            for (auto& e : tuple) total += e.first;
            json outj = json::array();
            for (auto& c : out) outj.push_back(scalar_to_json(c));
            brackets.push_back({{"arity", k},
                                {"inputs", inputs},
                                {"output", {{std::to_string(total + k - 2), outj}}}});
        }
    return {{"schema", 1},
            {"type", "linf"},
            {"scalars", field.str()},
            {"dims", dims},
            {"brackets", brackets}};
}

std::pair<LInftyAlgebra, ScalarField> linf_from_json(const json& j) {
    check_schema(j, "linf");
    ScalarField field = field_of(j);
    LInftyAlgebra L;
    require(j.contains("dims"), "missing dims");
    for (auto& [key, val] : j["dims"].items()) {
        int deg = std::stoi(key);
        int n = val.get<int>();
        require(deg >= 0 && n >= 0, "bad dimension entry");
        if (n > 0) L.space.dims[deg] = n;
    }
    for (auto& b : j.value("brackets", json::array())) {
        int arity = b.at("arity").get<int>();
        require(arity >= 1, "bracket arity");
        std::vector<ElemId> tuple;
        for (auto& in : b.at("inputs")) {
            require(in.is_array() && in.size() == 2, "bracket input shape");
            tuple.push_back({in[0].get<int>(), in[1].get<int>()});
        }
        require((int)tuple.size() == arity, "bracket arity mismatch");
        int total = 0;
        for (auto& e : tuple) total += e.first;
        int outdeg = total + arity - 2;
        auto& outobj = b.at("output");
        require(outobj.is_object() && outobj.size() == 1, "bracket output shape");
        auto it = outobj.items().begin();
        require(std::stoi(it.key()) == outdeg, "bracket output degree mismatch");
        std::vector<Scalar> out;
        for (auto& c : it.value()) out.push_back(scalar_from_json(c, field));
        L.brackets[arity][tuple] = std::move(out);
    }
    try {
        L.validate();
    } catch (const std::exception& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
    return {std::move(L), field};
}

namespace {

std::string gen_key(ElemId e) {
    return std::to_string(e.first) + ":" + std::to_string(e.second);
}

ElemId gen_from_key(const std::string& s) {
    auto pos = s.find(':');
    require(pos != std::string::npos, "generator key must be deg:idx");
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
}

json forms_to_json(const MCElement& x, const ScalarField& field) {
    (void)field;
    json forms = json::object();
    for (auto& [h, f] : x.forms)
        if (!f.is_zero()) forms[gen_key(x.L->basis()[h])] = polyform_to_json(f);
    return forms;
}

MCElement forms_from_json(const json& j, const LInftyAlgebra& L, int m,
                          const ScalarField& field) {
    MCElement x = mc_zero(L, m);
    for (auto& [key, val] : j.items()) {
        ElemId e = gen_from_key(key);
        int h;
        try {
            h = L.handle_of(e);
        } catch (const std::exception&) {
            throw DocumentError("document: unknown generator " + key);
        }
        PolyForm f = polyform_from_json(val, field);
        require(f.vars() == m || f.is_zero(), "form dimension mismatch");
        if (!f.is_zero()) x.forms[h] = std::move(f);
    }
    return x;
}

}  // namespace

json mc_to_json(const MCElement& x, const ScalarField& field) {
    return {{"schema", 1},
            {"type", "mc"},
            {"m", x.m},
            {"algebra", linf_to_json(*x.L, field)},
            {"forms", forms_to_json(x, field)}};
}

MCDocument mc_from_json(const json& j) {
    check_schema(j, "mc");
    MCDocument out;
    auto [L, field] = linf_from_json(j.at("algebra"));
    out.algebra = std::make_shared<LInftyAlgebra>(std::move(L));
    out.field = field;
    int m = j.at("m").get<int>();
    require(m >= 0 && m <= 12, "simplex dimension out of range");
    out.element = forms_from_json(j.value("forms", json::object()), *out.algebra, m, field);
    return out;
}

json horn_to_json(const MCHorn& h, const ScalarField& field) {
    json facets = json::object();
    for (auto& [i, x] : h.facets) facets[std::to_string(i)] = forms_to_json(x, field);
    return {{"schema", 1},
            {"type", "horn"},
            {"m", h.m},
            {"j", h.j},
            {"algebra", linf_to_json(*h.L, field)},
            {"facets", facets}};
}

HornDocument horn_from_json(const json& j) {
    check_schema(j, "horn");
    HornDocument out;
    auto [L, field] = linf_from_json(j.at("algebra"));
    out.algebra = std::make_shared<LInftyAlgebra>(std::move(L));
    out.field = field;
    out.horn.L = out.algebra.get();
    out.horn.m = j.at("m").get<int>();
    out.horn.j = j.at("j").get<int>();
    require(out.horn.m >= 1 && out.horn.m <= 12, "horn dimension out of range");
    require(out.horn.j >= 0 && out.horn.j <= out.horn.m, "horn vertex out of range");
    for (auto& [key, val] : j.at("facets").items()) {
        int i = std::stoi(key);
        require(i >= 0 && i <= out.horn.m && i != out.horn.j, "facet index");
        out.horn.facets[i] =
            forms_from_json(val, *out.algebra, out.horn.m - 1, field);
    }
    return out;
}

json simpset_to_json(const FinSimplicialSet& X) {
    json faces = json::array();
    for (int m = 1; m <= X.N; ++m) faces.push_back(X.face[m]);
    json degens = json::array();
    for (int m = 0; m < X.N; ++m) degens.push_back(X.degen[m]);
    return {{"schema", 1},
            {"type", "simpset"},
            {"N", X.N},
            {"coskeletal", X.coskeletal},
            {"sizes", X.size},
            {"faces", faces},
            {"degens", degens}};
}

FinSimplicialSet simpset_from_json(const json& j) {
    check_schema(j, "simpset");
    FinSimplicialSet X;
    X.N = j.at("N").get<int>();
    require(X.N >= 0 && X.N <= 10, "truncation out of range");
    X.size = j.at("sizes").get<std::vector<int>>();
    X.coskeletal = j.value("coskeletal", false);
    X.face.assign(X.N + 1, {});
    X.degen.assign(std::max(X.N, 0), {});
    auto& faces = j.at("faces");
    require((int)faces.size() == X.N, "face table count");
    for (int m = 1; m <= X.N; ++m)
        X.face[m] = faces[m - 1].get<std::vector<std::vector<int>>>();
    auto& degens = j.at("degens");
    require((int)degens.size() == X.N, "degeneracy table count");
    for (int m = 0; m < X.N; ++m)
        X.degen[m] = degens[m].get<std::vector<std::vector<int>>>();
    try {
        X.validate();
    } catch (const std::exception& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
    return X;
}

json group_to_json(const FiniteGroup& g) {
    return {{"order", g.order}, {"unit", g.unit}, {"mul", g.mul}};
}

FiniteGroup group_from_json(const json& j) {
    FiniteGroup g;
    g.order = j.at("order").get<int>();
    g.unit = j.value("unit", 0);
    g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    try {
        g.validate();
    } catch (const std::exception& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
    return g;
}

json two_group_to_json(const CoherentTwoGroup& T) {
    return {{"schema", 1},    {"type", "two_group"}, {"nobj", T.nobj},
            {"unit", T.unit_obj}, {"src", T.src},    {"tgt", T.tgt},
            {"id", T.id_arrow},   {"comp", T.comp},  {"mul_obj", T.mul_obj},
            {"mul_arr", T.mul_arr}, {"assoc", T.assoc}};
}

CoherentTwoGroup two_group_from_json(const json& j) {
    check_schema(j, "two_group");
    CoherentTwoGroup T;
    T.nobj = j.at("nobj").get<int>();
    T.unit_obj = j.value("unit", 0);
    T.src = j.at("src").get<std::vector<int>>();
    T.tgt = j.at("tgt").get<std::vector<int>>();
    T.id_arrow = j.at("id").get<std::vector<int>>();
    T.comp = j.at("comp").get<std::vector<std::vector<int>>>();
    T.mul_obj = j.at("mul_obj").get<std::vector<std::vector<int>>>();
    T.mul_arr = j.at("mul_arr").get<std::vector<std::vector<int>>>();
    T.assoc = j.at("assoc").get<std::vector<std::vector<std::vector<int>>>>();
    try {
        T.validate();
    } catch (const std::exception& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
    return T;
}

json boundary_to_json(const BoundaryData& B, const ScalarField& field) {
    json pis = json::object();
    for (auto& [n, g] : B.pi_g)
        pis[std::to_string(n)] = {{"rank", g.rank}, {"torsion", g.torsion}};
    json bnds = json::object();
    for (auto& [n, M] : B.boundary) {
        json rows = json::array();
        for (size_t r = 0; r < M.rows(); ++r) {
            json row = json::array();
            for (size_t c = 0; c < M.cols(); ++c) row.push_back(scalar_to_json(M.at(r, c)));
            rows.push_back(row);
        }
        bnds[std::to_string(n)] = rows;
    }
    return {{"schema", 1},
            {"type", "boundary"},
            {"scalars", field.str()},
            {"group", B.group_token},
            {"pi", pis},
            {"boundary", bnds}};
}

BoundaryData boundary_from_json(const json& j) {
    check_schema(j, "boundary");
    ScalarField field = field_of(j);
    BoundaryData B;
    B.group_token = j.value("group", "G");
    json pis = j.value("pi", json::object());
    for (auto& [key, val] : pis.items()) {
        FGAbGroup g;
        g.rank = val.at("rank").get<int>();
        for (auto& t : val.value("torsion", std::vector<long>{})) {
            require(t >= 2, "torsion invariant must be >= 2");
            g.torsion.push_back(t);
        }
        for (size_t i = 1; i < g.torsion.size(); ++i)
            require(g.torsion[i] % g.torsion[i - 1] == 0, "torsion not in divisibility order");
        B.pi_g[std::stoi(key)] = std::move(g);
    }
    json bnds = j.value("boundary", json::object());
    for (auto& [key, val] : bnds.items()) {
        int n = std::stoi(key);
        require(val.is_array(), "boundary matrix shape");
        size_t rows = val.size();
        size_t cols = rows ? val[0].size() : 0;
        Mat M(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            require(val[r].size() == cols, "ragged boundary matrix");
            for (size_t c = 0; c < cols; ++c)
                M.at(r, c) = scalar_from_json(val[r][c], field);
        }
        B.boundary[n] = std::move(M);
    }
    return B;
}

json subcomplex_to_json(const SubComplex& S) {
    json faces = json::array();
    for (auto& f : S.faces) faces.push_back(f);
    return {{"schema", 1}, {"type", "subcomplex"}, {"n", S.n}, {"faces", faces}};
}

SubComplex subcomplex_from_json(const json& j) {
    check_schema(j, "subcomplex");
    SubComplex S;
    S.n = j.at("n").get<int>();
    require(S.n >= 0 && S.n <= 10, "subcomplex ambient dimension");
    for (auto& f : j.at("faces")) S.faces.insert(f.get<std::vector<int>>());
    try {
        S.validate();
    } catch (const std::exception& e) {
        throw DocumentError(std::string("document: ") + e.what());
    }
    return S;
}

}  // namespace lk
