#include "lk/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "CLI11.hpp"
#include "lk/corpus.hpp"
#include "lk/string_su2.hpp"

namespace lk {

namespace {

class Verdict : public std::exception {
public:
    explicit Verdict(int code) : code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

struct Report {
    std::ostream& out;
    const RunConfig& cfg;
    json lines = json::array();

    void exact(const std::string& key, const std::string& value) {
        if (cfg.format == "json")
            lines.push_back({{"key", key}, {"value", value}, {"provenance", "exact"}});
        else
            out << key << ": " << value << "  [exact]\n";
    }
    void quadrature(const std::string& key, double value, int order) {
        if (cfg.format == "json")
            lines.push_back({{"key", key},
                             {"value", value},
                             {"provenance", "quadrature(order=" + std::to_string(order) + ")"}});
        else {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", value);
            out << key << ": " << buf << "  [quadrature(order=" << order << ")]\n";
        }
    }
    void flush() {
        if (cfg.format == "json") out << lines.dump(2) << "\n";
    }
};

void write_or_print(const json& j, const std::string& outfile, std::ostream& out) {
    if (outfile.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(outfile);
    if (!f) throw DocumentError("cannot write '" + outfile + "'");
    f << j.dump(2) << "\n";
}

// polyform documents carry their own scalar declaration
PolyForm polyform_doc(const json& j, ScalarField* field_out = nullptr) {
    ScalarField f = ScalarField::parse(j.value("scalars", "Q"));
    if (field_out) *field_out = f;
    return polyform_from_json(j, f);
}

json polyform_doc_json(const PolyForm& f, const ScalarField& field) {
    json j = polyform_to_json(f);
    j["schema"] = 1;
    j["type"] = "polyform";
    j["scalars"] = field.str();
    return j;
}

SU2Map su2_map_from_name(const std::string& name) {
    if (name.rfind("@", 0) != 0) return builtin_su2_map(name);
    // mesh-sampled table file: grid values on the Duffy cube, interpolated
    json j = load_document(name.substr(1));
    if (j.value("type", "") != "su2map") throw DocumentError("expected an su2map table");
    int n = j.at("grid").get<int>();
    auto vals = j.at("values").get<std::vector<std::vector<double>>>();
    if ((int)vals.size() != (n + 1) * (n + 1) * (n + 1))
        throw DocumentError("su2map: value count mismatch");
    SU2Map f;
    f.m = 3;
    f.name = "table";
    f.eval = [n, vals](const std::vector<double>& t) {
        // invert the Duffy map; clamp at the collapsed edges
        double u1 = t[0];
        double r1 = 1 - u1;
        double u2 = r1 > 1e-12 ? t[1] / r1 : 0;
        double r2 = 1 - u2;
        double u3 = (r1 > 1e-12 && r2 > 1e-12) ? t[2] / (r1 * r2) : 0;
        auto clamp = [](double v) { return v < 0 ? 0.0 : (v > 1 ? 1.0 : v); };
        double us[3] = {clamp(u1), clamp(u2), clamp(u3)};
        int i0[3];
        double fr[3];
        for (int q = 0; q < 3; ++q) {
            double scaled = us[q] * n;
            i0[q] = std::min((int)scaled, n - 1);
            fr[q] = scaled - i0[q];
        }
        Quat acc{0, 0, 0, 0};
        for (int da = 0; da <= 1; ++da)
            for (int db = 0; db <= 1; ++db)
                for (int dc = 0; dc <= 1; ++dc) {
                    double w = (da ? fr[0] : 1 - fr[0]) * (db ? fr[1] : 1 - fr[1]) *
                               (dc ? fr[2] : 1 - fr[2]);
                    int idx = ((i0[0] + da) * (n + 1) + (i0[1] + db)) * (n + 1) +
                              (i0[2] + dc);
                    const auto& v = vals[idx];
                    acc = acc + Quat{v[0], v[1], v[2], v[3]}.scaled(w);
                }
        return acc.normalized();
    };
    return f;
}

std::map<int, int> homology_from_doc(const json& j) {
    auto [L, field] = linf_from_json(j);
    (void)field;
    return homology_dims(L);
}

// ---------------- subcommand bodies ----------------

int cmd_linf_check(const std::string& file, Report& rep) {
    auto [L, field] = linf_from_json(load_document(file));
    (void)field;
    auto r = ce_square_zero(L);
    rep.exact("delta-squared", r.ok ? "PASS" : "FAIL");
    if (!r.ok) {
        CEAlgebra ce = ce_differential(L);
        auto& v = r.violations.front();
        rep.exact("first-violation", "delta^2(" + ce.generator_name(v.generator) +
                                         ") has monomial " +
                                         ce.poly_str(CEPoly{{v.monomial, v.coefficient}}));
        return 1;
    }
    return 0;
}

int cmd_linf_homology(const std::string& file, Report& rep) {
    auto h = homology_from_doc(load_document(file));
    for (auto& [deg, dim] : h)
        rep.exact("H_" + std::to_string(deg), std::to_string(dim));
    if (h.empty()) rep.exact("H_*", "0");
    return 0;
}

int cmd_linf_nilpotent(const std::string& file, Report& rep) {
    auto [L, field] = linf_from_json(load_document(file));
    (void)field;
    auto r = is_nilpotent(L);
    rep.exact("nilpotent", r.nilpotent ? "true" : "false");
    if (r.nilpotent) rep.exact("class", std::to_string(r.nilpotency_class));
    return r.nilpotent ? 0 : 1;
}

int cmd_linf_truncate(const std::string& file, int n, const std::string& mode,
                      const std::string& outfile, Report& rep, std::ostream& out) {
    auto [L, field] = linf_from_json(load_document(file));
    auto t = truncate_linf(L, n, mode == "le" ? TruncMode::LE : TruncMode::LT);
    rep.exact("truncated-dims", [&] {
        std::string s;
        for (auto& [d, k] : t.algebra.space.dims)
            s += (s.empty() ? "" : ", ") + std::to_string(d) + ":" + std::to_string(k);
        return s.empty() ? std::string("(zero)") : s;
    }());
    write_or_print(linf_to_json(t.algebra, field), outfile, out);
    return 0;
}

int cmd_intl_validate(const std::string& file, Report& rep) {
    auto doc = mc_from_json(load_document(file));
    CEAlgebra ce = ce_differential(*doc.algebra);
    auto v = validate_mc(ce, doc.element);
    rep.exact("maurer-cartan", v.ok ? "PASS" : "FAIL");
    if (!v.ok) {
        rep.exact("first-failure",
                  v.error.empty() ? ("generator " + ce.generator_name(v.generator) +
                                     ", residual " + v.residual.str())
                                  : v.error);
        return 1;
    }
    return 0;
}

int cmd_intl_face(const std::string& file, int i, const std::string& outfile, Report& rep,
                  std::ostream& out) {
    auto doc = mc_from_json(load_document(file));
    MCElement f = mc_face(doc.element, i);
    rep.exact("face", "d_" + std::to_string(i) + " of an m=" +
                          std::to_string(doc.element.m) + " element");
    write_or_print(mc_to_json(f, doc.field), outfile, out);
    return 0;
}

int cmd_intl_fill(const std::string& file, const std::string& pinfile,
                  const std::string& outfile, int expect_m, int expect_j, Report& rep,
                  std::ostream& out) {
    auto doc = horn_from_json(load_document(file));
    if (expect_m >= 0 && doc.horn.m != expect_m)
        throw DocumentError("horn has m = " + std::to_string(doc.horn.m) +
                            ", not the requested " + std::to_string(expect_m));
    if (expect_j >= 0 && doc.horn.j != expect_j)
        throw DocumentError("horn has j = " + std::to_string(doc.horn.j) +
                            ", not the requested " + std::to_string(expect_j));
    std::optional<MCPin> pin;
    std::shared_ptr<LInftyAlgebra> keep_alive;
    if (!pinfile.empty()) {
        auto pdoc = mc_from_json(load_document(pinfile));
        keep_alive = pdoc.algebra;
        MCHorn ph = MCHorn::restriction(pdoc.element, doc.horn.j);
        pin = MCPin{std::move(ph), pdoc.element};
    }
    MCElement filled = fill_horn(*doc.algebra, doc.horn, pin);
    rep.exact("fill-horn", "validated filler on Delta^" + std::to_string(doc.horn.m));
    write_or_print(mc_to_json(filled, doc.field), outfile, out);
    return 0;
}

int cmd_intl_period(const std::string& file, Report& rep) {
    auto doc = mc_from_json(load_document(file));
    auto cls = period_class(*doc.algebra, doc.element);
    std::string s;
    for (auto& c : cls) s += (s.empty() ? "" : ", ") + c.str();
    rep.exact("period-class", "(" + s + ")");
    return 0;
}

int cmd_homot_les(const std::string& algfile, const std::string& pifile, int upto,
                  Report& rep) {
    auto H = homology_from_doc(load_document(algfile));
    auto B = boundary_from_json(load_document(pifile));
    auto pres = les_assemble(H, B, upto);
    for (auto& p : pres) {
        rep.exact("pi_" + std::to_string(p.degree) + "^spl",
                  p.is_group_token ? B.group_token : p.str());
        if (!p.is_group_token)
            rep.exact("lie-algebra-dim(pi_" + std::to_string(p.degree) + ")",
                      std::to_string(p.lie_algebra_dim()));
    }
    return 0;
}

int cmd_homot_tvf(const std::string& algfile, const std::string& pifile, int n,
                  Report& rep) {
    auto H = homology_from_doc(load_document(algfile));
    auto B = boundary_from_json(load_document(pifile));
    bool ok = tvf_integrability(H, B, n);
    rep.exact("boundary-image-discrete", ok ? "true" : "false");
    rep.exact("truncated-levels-are-manifolds", ok ? "yes" : "no (image not discrete)");
    return ok ? 0 : 1;
}

int cmd_simpset_kan(const std::string& file, int upto, Report& rep) {
    auto X = simpset_from_json(load_document(file));
    int limit = upto > 0 ? upto : X.N;
    auto r = is_kan(X, limit);
    rep.exact("kan-up-to-" + std::to_string(limit), r.kan ? "PASS" : "FAIL");
    if (!r.kan) {
        rep.exact("counterexample-horn", r.counterexample->str());
        return 1;
    }
    return 0;
}

int cmd_simpset_unique(const std::string& file, int n, Report& rep) {
    auto X = simpset_from_json(load_document(file));
    bool u = unique_fillers_above(X, n);
    rep.exact("unique-fillers-above-" + std::to_string(n), u ? "true" : "false");
    return u ? 0 : 1;
}

int cmd_simpset_pi(const std::string& file, int n, Report& rep) {
    auto X = simpset_from_json(load_document(file));
    auto g = pi_n(X, n);
    rep.exact("pi_" + std::to_string(n), g.str());
    std::string ords;
    for (int o : g.element_orders()) ords += (ords.empty() ? "" : ",") + std::to_string(o);
    rep.exact("element-orders", "[" + ords + "]");
    return 0;
}

int cmd_simpset_truncate(const std::string& file, int n, const std::string& mode,
                         const std::string& outfile, Report& rep, std::ostream& out) {
    auto X = simpset_from_json(load_document(file));
    auto Y = truncate_simpset(X, n, mode == "le" ? SimpTruncMode::LE : SimpTruncMode::LT);
    std::string sizes;
    for (int s : Y.size) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    rep.exact("truncated-sizes", "[" + sizes + "]");
    write_or_print(simpset_to_json(Y), outfile, out);
    return 0;
}

int cmd_simpset_collapse(const std::string& file, Report& rep) {
    auto S = subcomplex_from_json(load_document(file));
    auto cert = find_collapse(S);
    rep.exact("collapsible", cert ? "true" : "false");
    if (cert) {
        for (auto& step : *cert) {
            std::string s = "fill {";
            for (size_t i = 0; i < step.simplex.size(); ++i)
                s += (i ? "," : "") + std::to_string(step.simplex[i]);
            s += "} at free face " + std::to_string(step.missing_index);
            rep.exact("step", s);
        }
        return 0;
    }
    return 1;
}

int cmd_simpset_nerve2(const std::string& file, int upto, const std::string& outfile,
                       Report& rep, std::ostream& out) {
    auto T = two_group_from_json(load_document(file));
    auto NG = nerve_2group(T, upto);
    std::string sizes;
    for (int s : NG.size) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    rep.exact("nerve-sizes", "[" + sizes + "]");
    write_or_print(simpset_to_json(NG), outfile, out);
    return 0;
}

int cmd_simpset_fromkan(const std::string& file, const std::string& outfile, Report& rep,
                        std::ostream& out) {
    auto X = simpset_from_json(load_document(file));
    auto T = two_group_from_kan(X);
    rep.exact("objects", std::to_string(T.nobj));
    rep.exact("arrows", std::to_string(T.narr()));
    rep.exact("pentagon", T.pentagon_holds() ? "PASS" : "FAIL");
    write_or_print(two_group_to_json(T), outfile, out);
    return 0;
}

int cmd_string_calibrate(const RunConfig& cfg, Report& rep) {
    double v = calibration_integral(cfg.order);
    rep.quadrature("integral-of-eta-over-SU2", v, cfg.order);
    rep.exact("calibrated-scale", "-1/(4*pi^2)");
    return std::fabs(v - 1.0) < cfg.tolerance ? 0 : 1;
}

int cmd_string_period(const std::string& mapname, const RunConfig& cfg, Report& rep) {
    SU2Map f = su2_map_from_name(mapname);
    double p = cartan_period(f, cfg.order);
    rep.quadrature("cartan-period(" + f.name + ")", p, cfg.order);
    return 0;
}

int cmd_string_cocycle(const std::string& file, const RunConfig& cfg, Report& rep) {
    json j = load_document(file);
    if (j.value("type", "") != "cocycle") throw DocumentError("expected a cocycle datum");
    BundleTetra tetra;
    tetra.filling = su2_map_from_name(j.at("filling").get<std::string>());
    auto bs = j.at("b").get<std::vector<double>>();
    if (bs.size() != 4) throw DocumentError("cocycle: need four fiber coordinates");
    for (int i = 0; i <= 3; ++i) tetra.faces[i] = bundle_face(tetra.filling, i, bs[i]);
    double defect = cocycle_check(tetra, cfg.order);
    rep.quadrature("cocycle-defect", defect, cfg.order);
    bool ok = defect < cfg.tolerance;
    rep.exact("valid-3-simplex", ok ? "yes" : "no");
    return ok ? 0 : 1;
}

int cmd_corpus_list(Report& rep) {
    for (auto& n : corpus_names()) rep.exact("document", n);
    return 0;
}

int cmd_corpus_cat(const std::string& name, std::ostream& out) {
    out << corpus_document(name).dump(2) << "\n";
    return 0;
}

int cmd_corpus_write(const std::string& dir, Report& rep) {
    std::filesystem::create_directories(dir);
    for (auto& n : corpus_names()) {
        std::ofstream f(dir + "/" + n + ".json");
        if (!f) throw DocumentError("cannot write corpus into '" + dir + "'");
        f << corpus_document(n).dump(2) << "\n";
    }
    rep.exact("written", dir);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"linftykan: exact integration engine for finite-dimensional "
                 "L-infinity algebras and finite Kan complexes"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    app.add_option("--seed", cfg.seed, "seed for randomized property drivers");
    app.add_option("--tolerance", cfg.tolerance, "numeric tolerance (string module only)");
    app.add_option("--order", cfg.order, "quadrature order (string module only)");
    app.add_option("--format", cfg.format, "report format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    int rc = 0;
    Report rep{out, cfg};
    std::string file, file2, pinfile, outfile, mode = "le", mapname = "degree1";
    int n = 0, upto = 0, upto_kan = 0, upto_nerve = 4, faceidx = 0;
    int horn_m = -1, horn_j = -1;

    auto* linf = app.add_subcommand("linf", "L-infinity algebra operations");
    auto* lc = linf->add_subcommand("check", "verify delta^2 = 0");
    lc->add_option("file", file)->required();
    lc->callback([&] { rc = cmd_linf_check(file, rep); });
    auto* lh = linf->add_subcommand("homology", "homology dimensions");
    lh->add_option("file", file)->required();
    lh->callback([&] { rc = cmd_linf_homology(file, rep); });
    auto* ln = linf->add_subcommand("nilpotent", "lower central series");
    ln->add_option("file", file)->required();
    ln->callback([&] { rc = cmd_linf_nilpotent(file, rep); });
    auto* lt = linf->add_subcommand("truncate", "Postnikov truncation");
    lt->add_option("file", file)->required();
    lt->add_option("--n", n)->required();
    lt->add_option("--mode", mode)->check(CLI::IsMember({"le", "lt"}));
    lt->add_option("--out", outfile);
    lt->callback([&] { rc = cmd_linf_truncate(file, n, mode, outfile, rep, out); });

    auto* forms = app.add_subcommand("forms", "polynomial de Rham forms");
    auto* fd = forms->add_subcommand("d", "exterior differential");
    fd->add_option("file", file)->required();
    fd->add_option("--out", outfile);
    fd->callback([&] {
        ScalarField fld;
        PolyForm f = polyform_doc(load_document(file), &fld);
        write_or_print(polyform_doc_json(d(f), fld), outfile, out);
    });
    auto* fw = forms->add_subcommand("wedge", "wedge product");
    fw->add_option("a", file)->required();
    fw->add_option("b", file2)->required();
    fw->add_option("--out", outfile);
    fw->callback([&] {
        ScalarField fld;
        PolyForm a = polyform_doc(load_document(file), &fld);
        PolyForm b = polyform_doc(load_document(file2), &fld);
        write_or_print(polyform_doc_json(wedge(a, b), fld), outfile, out);
    });
    auto* fp = forms->add_subcommand("period", "exact simplex period");
    fp->add_option("file", file)->required();
    fp->callback([&] {
        PolyForm f = polyform_doc(load_document(file));
        rep.exact("simplex-period", simplex_period(f).str());
    });

    auto* intl = app.add_subcommand("intl", "Maurer-Cartan simplices");
    auto* iv = intl->add_subcommand("validate", "check the flatness system");
    iv->add_option("file", file)->required();
    iv->callback([&] { rc = cmd_intl_validate(file, rep); });
    auto* ifc = intl->add_subcommand("face", "simplicial face");
    ifc->add_option("file", file)->required();
    ifc->add_option("--i", faceidx)->required();
    ifc->add_option("--out", outfile);
    ifc->callback([&] { rc = cmd_intl_face(file, faceidx, outfile, rep, out); });
    auto* ifh = intl->add_subcommand("fill-horn", "constructive Kan filler");
    ifh->add_option("file", file)->required();
    ifh->add_option("--m", horn_m, "expected horn dimension (validated)");
    ifh->add_option("--j", horn_j, "expected horn vertex (validated)");
    ifh->add_option("--pin", pinfile);
    ifh->add_option("--out", outfile);
    ifh->callback(
        [&] { rc = cmd_intl_fill(file, pinfile, outfile, horn_m, horn_j, rep, out); });
    auto* ip = intl->add_subcommand("period", "abelian period class");
    ip->add_option("file", file)->required();
    ip->callback([&] { rc = cmd_intl_period(file, rep); });

    auto* homot = app.add_subcommand("homot", "homotopy group assembly");
    auto* hl = homot->add_subcommand("les", "long exact sequence");
    hl->add_option("--algebra", file)->required();
    hl->add_option("--pi-g", file2)->required();
    hl->add_option("--up-to", upto)->required();
    hl->callback([&] { rc = cmd_homot_les(file, file2, upto, rep); });
    auto* ht = homot->add_subcommand("tvf", "integrability criterion");
    ht->add_option("--algebra", file)->required();
    ht->add_option("--pi-g", file2)->required();
    ht->add_option("--n", n)->required();
    ht->callback([&] { rc = cmd_homot_tvf(file, file2, n, rep); });

    auto* ss = app.add_subcommand("simpset", "finite simplicial sets");
    auto* sk = ss->add_subcommand("kan", "exhaustive Kan check");
    sk->add_option("file", file)->required();
    sk->add_option("--up-to", upto_kan);
    sk->callback([&] { rc = cmd_simpset_kan(file, upto_kan, rep); });
    auto* su = ss->add_subcommand("unique-fillers", "Lie n-group condition");
    su->add_option("file", file)->required();
    su->add_option("--n", n)->required();
    su->callback([&] { rc = cmd_simpset_unique(file, n, rep); });
    auto* sp = ss->add_subcommand("pi", "simplicial homotopy group");
    sp->add_option("file", file)->required();
    sp->add_option("--n", n)->required();
    sp->callback([&] { rc = cmd_simpset_pi(file, n, rep); });
    auto* st = ss->add_subcommand("truncate", "Moore/Duskin truncation");
    st->add_option("file", file)->required();
    st->add_option("--n", n)->required();
    st->add_option("--mode", mode)->check(CLI::IsMember({"le", "lt"}));
    st->add_option("--out", outfile);
    st->callback([&] { rc = cmd_simpset_truncate(file, n, mode, outfile, rep, out); });
    auto* sc = ss->add_subcommand("collapse", "collapsibility certificate");
    sc->add_option("file", file)->required();
    sc->callback([&] { rc = cmd_simpset_collapse(file, rep); });
    auto* sn = ss->add_subcommand("nerve2", "nerve of a coherent 2-group");
    sn->add_option("file", file)->required();
    sn->add_option("--up-to", upto_nerve);
    sn->add_option("--out", outfile);
    sn->callback([&] { rc = cmd_simpset_nerve2(file, upto_nerve, outfile, rep, out); });
    auto* sf = ss->add_subcommand("from-kan", "recover a 2-group from a Kan complex");
    sf->add_option("file", file)->required();
    sf->add_option("--out", outfile);
    sf->callback([&] { rc = cmd_simpset_fromkan(file, outfile, rep, out); });

    auto* str = app.add_subcommand("string", "numeric SU(2) realization");
    auto* sca = str->add_subcommand("calibrate", "total integral of eta over SU(2)");
    sca->callback([&] { rc = cmd_string_calibrate(cfg, rep); });
    auto* spe = str->add_subcommand("period", "Cartan period of a map");
    spe->add_option("--map", mapname);
    spe->callback([&] { rc = cmd_string_period(mapname, cfg, rep); });
    auto* sco = str->add_subcommand("cocycle", "cocycle defect of a tetrahedron datum");
    sco->add_option("file", file)->required();
    sco->callback([&] { rc = cmd_string_cocycle(file, cfg, rep); });

    auto* corpus = app.add_subcommand("corpus", "bundled example documents");
    auto* cl = corpus->add_subcommand("list", "list bundled names");
    cl->callback([&] { rc = cmd_corpus_list(rep); });
    auto* cc = corpus->add_subcommand("cat", "print a bundled document");
    cc->add_option("name", file)->required();
    cc->callback([&] { rc = cmd_corpus_cat(file, out); });
    auto* cw = corpus->add_subcommand("write", "dump the corpus into a directory");
    cw->add_option("dir", file)->required();
    cw->callback([&] { rc = cmd_corpus_write(file, rep); });

    // CLI11's vector overload expects reversed arguments
    std::vector<std::string> argv(args.rbegin(), args.rend());
    if (argv.empty()) argv = {"--help"};
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DocumentError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    rep.flush();
    return rc;
}

}  // namespace lk
