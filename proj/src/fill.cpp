#include "lk/fill.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lk {

namespace {

// Basis of L adapted to the flags im(d_{k+1}) <= ker(d_k) <= L_k in every
// degree; within a degree the new basis lists the im-part, then homology
// representatives, then a complement of the kernel.
struct AdaptedBasis {
    LInftyAlgebra prime;
    std::map<int, Mat> P;     // old coords = P * new coords
    std::map<int, Mat> Pinv;
    std::map<int, int> n_im, n_H, n_co;
};

void enumerate_canonical(const std::vector<ElemId>& basis, int k, size_t start,
                         std::vector<ElemId>& cur,
                         const std::function<void(const std::vector<ElemId>&)>& fn) {
    if (k == 0) {
        fn(cur);
        return;
    }
    for (size_t i = start; i < basis.size(); ++i) {
        cur.push_back(basis[i]);
        size_t next = (basis[i].first & 1) ? i : i + 1;
        enumerate_canonical(basis, k - 1, next, cur, fn);
        cur.pop_back();
    }
}

AdaptedBasis adapt(const LInftyAlgebra& L) {
    AdaptedBasis A;
    A.prime.space = L.space;
    for (auto& [deg, dim] : L.space.dims) {
        Mat din = L.boundary_matrix(deg + 1);
        Mat dout = L.boundary_matrix(deg);

        std::vector<std::vector<Scalar>> im_cols;
        {
            auto pivots = din.column_pivots();
            for (size_t p : pivots) im_cols.push_back(din.col(p));
        }
        std::vector<std::vector<Scalar>> ker_cols;
        if (dout.rows() == 0) {
            for (int i = 0; i < dim; ++i) {
                std::vector<Scalar> e(dim);
                e[i] = Scalar(1);
                ker_cols.push_back(std::move(e));
            }
        } else {
            ker_cols = dout.kernel_basis();
        }
        // homology reps: kernel columns that extend the image columns
        std::vector<std::vector<Scalar>> stacked = im_cols;
        for (auto& kcol : ker_cols) stacked.push_back(kcol);
        std::vector<std::vector<Scalar>> H_cols;
        {
            Mat s = Mat::from_cols(stacked);
            for (size_t p : s.column_pivots())
                if (p >= im_cols.size()) H_cols.push_back(stacked[p]);
        }
        // complement of the kernel: standard vectors extending im+H
        std::vector<std::vector<Scalar>> full = im_cols;
        for (auto& h : H_cols) full.push_back(h);
        size_t kerdim = full.size();
        for (int i = 0; i < dim; ++i) {
            std::vector<Scalar> e(dim);
            e[i] = Scalar(1);
            full.push_back(std::move(e));
        }
        std::vector<std::vector<Scalar>> co_cols;
        {
            Mat s = Mat::from_cols(full);
            for (size_t p : s.column_pivots())
                if (p >= kerdim) co_cols.push_back(full[p]);
        }

        A.n_im[deg] = (int)im_cols.size();
        A.n_H[deg] = (int)H_cols.size();
        A.n_co[deg] = (int)co_cols.size();
        std::vector<std::vector<Scalar>> cols = im_cols;
        for (auto& c : H_cols) cols.push_back(c);
        for (auto& c : co_cols) cols.push_back(c);
        if ((int)cols.size() != dim)
            throw std::logic_error("adapt: basis count mismatch");
        Mat P = Mat::from_cols(cols);
        A.Pinv[deg] = P.inverse();
        A.P[deg] = std::move(P);
    }

    // transported structure constants
    std::vector<ElemId> basis = L.basis();
    for (auto& [k, table] : L.brackets) {
        std::map<std::vector<ElemId>, std::vector<Scalar>> newtab;
        std::vector<ElemId> cur;
        enumerate_canonical(basis, k, 0, cur, [&](const std::vector<ElemId>& tuple) {
            std::vector<std::pair<int, std::vector<Scalar>>> args;
            for (auto& e : tuple) args.push_back({e.first, A.P.at(e.first).col(e.second)});
            auto [odeg, coords] = L.bracket_linear(args);
            if (is_zero_vec(coords)) return;
            auto out = A.Pinv.at(odeg).apply(coords);
            if (!is_zero_vec(out)) newtab[tuple] = std::move(out);
        });
        if (!newtab.empty()) A.prime.brackets[k] = std::move(newtab);
    }
    A.prime.validate();
    return A;
}

MCElement to_adapted(const AdaptedBasis& A, const LInftyAlgebra& L, const MCElement& x) {
    MCElement y;
    y.L = &A.prime;
    y.m = x.m;
    for (auto& [deg, dim] : L.space.dims) {
        const Mat& Pinv = A.Pinv.at(deg);
        for (int a = 0; a < dim; ++a) {
            PolyForm f(x.m);
            for (int i = 0; i < dim; ++i) {
                const Scalar& c = Pinv.at(a, i);
                if (c.is_zero()) continue;
                f += x.form(L.handle_of({deg, i})).scaled(c);
            }
            if (!f.is_zero()) y.forms[A.prime.handle_of({deg, a})] = std::move(f);
        }
    }
    return y;
}

MCElement from_adapted(const AdaptedBasis& A, const LInftyAlgebra& L, const MCElement& y) {
    MCElement x;
    x.L = &L;
    x.m = y.m;
    for (auto& [deg, dim] : L.space.dims) {
        const Mat& P = A.P.at(deg);
        for (int i = 0; i < dim; ++i) {
            PolyForm f(y.m);
            for (int a = 0; a < dim; ++a) {
                const Scalar& c = P.at(i, a);
                if (c.is_zero()) continue;
                f += y.form(A.prime.handle_of({deg, a})).scaled(c);
            }
            if (!f.is_zero()) x.forms[L.handle_of({deg, i})] = std::move(f);
        }
    }
    return x;
}

MCHorn horn_to_adapted(const AdaptedBasis& A, const LInftyAlgebra& L, const MCHorn& h) {
    MCHorn out;
    out.L = &A.prime;
    out.m = h.m;
    out.j = h.j;
    for (auto& [i, f] : h.facets) out.facets[i] = to_adapted(A, L, f);
    return out;
}

int vertex_position_in_facet(int vertex, int facet) {
    // position of `vertex` among the vertices of the facet omitting `facet`
    return vertex < facet ? vertex : vertex - 1;
}

// the quotient Lie algebra on the degree-0 homology block of the adapted basis
LInftyAlgebra quotient_lie(const AdaptedBasis& A) {
    int nH = A.n_H.count(0) ? A.n_H.at(0) : 0;
    int nim = A.n_im.count(0) ? A.n_im.at(0) : 0;
    LInftyAlgebra g;
    if (nH == 0) return g;
    g.space.dims[0] = nH;
    auto it = A.prime.brackets.find(2);
    if (it != A.prime.brackets.end()) {
        for (int a = 0; a < nH; ++a)
            for (int b = a + 1; b < nH; ++b) {
                auto val = A.prime.bracket_basis({{0, nim + a}, {0, nim + b}});
                if (!val) continue;
                std::vector<Scalar> out(nH);
                bool nz = false;
                for (int h = 0; h < nH; ++h) {
                    out[h] = val->second[nim + h];
                    nz = nz || !out[h].is_zero();
                }
                if (nz) g.brackets[2][{{0, a}, {0, b}}] = std::move(out);
            }
    }
    return g;
}

struct FillContext {
    const AdaptedBasis& A;
    const CEAlgebra& ce;   // of A.prime
    const MCHorn& horn;    // adapted
    const std::optional<MCPin>& pin_adapted;
    int m, j;
    MCElement work;        // partial assignment, grows stage by stage
    std::set<int> assigned;

    bool is_assigned_monomial(const Monomial& mono) const {
        for (int h : mono)
            if (!assigned.count(h)) return false;
        return true;
    }
};

void assign(FillContext& C, int handle, PolyForm f) {
    if (!f.is_zero()) C.work.forms[handle] = std::move(f);
    C.assigned.insert(handle);
}

// facet family of a single generator across the horn
FormHorn generator_family(const MCHorn& horn, int handle) {
    FormHorn fam;
    fam.m = horn.m;
    fam.j = horn.j;
    for (auto& [i, f] : horn.facets) {
        PolyForm g = f.form(handle);
        if (g.is_zero()) g = PolyForm(horn.m - 1);
        fam.facets[i] = std::move(g);
    }
    return fam;
}

void stage_base_gauge(FillContext& C) {
    const auto& A = C.A;
    int nH = A.n_H.count(0) ? A.n_H.at(0) : 0;
    int nim = A.n_im.count(0) ? A.n_im.at(0) : 0;
    if (nH == 0) return;
    LInftyAlgebra gq = quotient_lie(A);
    {
        auto rep = ce_square_zero(gq);
        if (!rep.ok) throw std::logic_error("fill_horn: quotient bracket is not Lie");
    }

    auto alpha_of = [&](const MCElement& x) {
        VecPoly v;
        for (int h = 0; h < nH; ++h) {
            PolyForm f = x.form(A.prime.handle_of({0, nim + h}));
            if (f.is_zero()) f = PolyForm(x.m);
            v.push_back(f);
        }
        return v;
    };

    // facet gauges pinned at the horn vertex
    std::map<int, VecPoly> u_facets;
    for (auto& [r, xr] : C.horn.facets)
        u_facets[r] =
            integrate_gauge(gq, alpha_of(xr), C.m - 1, vertex_position_in_facet(C.j, r));

    std::optional<VecPoly> u_pin_global;
    std::map<int, VecPoly> u_pin_facets;
    if (C.pin_adapted) {
        u_pin_global = integrate_gauge(gq, alpha_of(C.pin_adapted->filler), C.m, C.j);
        for (auto& [r, xr] : C.pin_adapted->horn.facets)
            u_pin_facets[r] =
                integrate_gauge(gq, alpha_of(xr), C.m - 1, vertex_position_in_facet(C.j, r));
    }

    // inclusion-exclusion extension in log coordinates, componentwise
    VecPoly u_tilde;
    for (int h = 0; h < nH; ++h) {
        FormHorn fam;
        fam.m = C.m;
        fam.j = C.j;
        for (auto& [r, ur] : u_facets) fam.facets[r] = ur[h];
        std::optional<HornExtensionPin> hp;
        if (C.pin_adapted) {
            FormHorn fam0;
            fam0.m = C.m;
            fam0.j = C.j;
            for (auto& [r, ur] : u_pin_facets) fam0.facets[r] = ur[h];
            hp = HornExtensionPin{std::move(fam0), (*u_pin_global)[h]};
        }
        u_tilde.push_back(horn_extend_form(fam, std::nullopt, hp));
    }

    // differentiate back to a flat 1-form
    VecPoly alpha_bar = right_log_derivative(gq, u_tilde);

    for (int h = 0; h < nH; ++h) assign(C, A.prime.handle_of({0, nim + h}), alpha_bar[h]);

    // exact restriction check against the horn
    for (auto& [r, xr] : C.horn.facets)
        for (int h = 0; h < nH; ++h)
            if (!(restrict_to_facet(alpha_bar[h], r) ==
                  xr.form(A.prime.handle_of({0, nim + h}))))
                throw std::logic_error("fill_horn: base gauge does not restrict to the horn");
}

void stage_free(FillContext& C, int k) {
    const auto& A = C.A;
    int nim_low = A.n_im.count(k - 1) ? A.n_im.at(k - 1) : 0;
    int nim_k = A.n_im.count(k) ? A.n_im.at(k) : 0;
    int nH_k = A.n_H.count(k) ? A.n_H.at(k) : 0;
    int nco_k = A.n_co.count(k) ? A.n_co.at(k) : 0;
    if (nim_low == 0 && nco_k == 0) return;
    if (nim_low != nco_k)
        throw std::logic_error("fill_horn: rank bookkeeping broken in the free stage");

    // free extension of the duals of im(d_k) inside degree k-1
    std::vector<int> im_handles, co_handles;
    for (int v = 0; v < nim_low; ++v) im_handles.push_back(A.prime.handle_of({k - 1, v}));
    for (int w = 0; w < nco_k; ++w)
        co_handles.push_back(A.prime.handle_of({k, nim_k + nH_k + w}));

    for (int hv : im_handles) {
        FormHorn fam = generator_family(C.horn, hv);
        std::optional<HornExtensionPin> hp;
        if (C.pin_adapted)
            hp = HornExtensionPin{generator_family(C.pin_adapted->horn, hv),
                                  C.pin_adapted->filler.form(hv)};
        assign(C, hv, horn_extend_form(fam, std::nullopt, hp));
    }

    // forced images of the new top generators: solve the linear part of the
    // flatness equations of the im-duals
    Mat Amat(nim_low, nco_k);
    std::vector<PolyForm> rhs;
    for (int v = 0; v < nim_low; ++v) {
        const CEPoly& dv = C.ce.delta[im_handles[v]];
        CEPoly rest;
        for (auto& [mono, c] : dv) {
            if (mono.size() == 1) {
                auto it = std::find(co_handles.begin(), co_handles.end(), mono[0]);
                if (it != co_handles.end()) {
                    Amat.at(v, it - co_handles.begin()) += c;
                    continue;
                }
                if (!C.assigned.count(mono[0]))
                    throw std::logic_error(
                        "fill_horn: linear term on an unexpected generator");
            }
            if (!C.is_assigned_monomial(mono))
                throw std::logic_error("fill_horn: free stage saw an unassigned factor");
            rest[mono] = c;
        }
        rhs.push_back(d(C.work.form(im_handles[v])) - mc_eval(C.work, rest));
    }
    Mat Ainv = Amat.inverse();
    for (int w = 0; w < nco_k; ++w) {
        PolyForm f(C.m);
        for (int v = 0; v < nim_low; ++v) {
            const Scalar& c = Ainv.at(w, v);
            if (!c.is_zero()) f += rhs[v].scaled(c);
        }
        assign(C, co_handles[w], std::move(f));
    }

    // the forced forms must restrict to the horn facets
    for (auto& [r, xr] : C.horn.facets)
        for (int hw : co_handles)
            if (!(restrict_to_facet(C.work.form(hw), r) == xr.form(hw)))
                throw std::logic_error("fill_horn: forced generator does not restrict");
}

void stage_homology(FillContext& C, int k) {
    const auto& A = C.A;
    int nH = A.n_H.count(k) ? A.n_H.at(k) : 0;
    int nim = A.n_im.count(k) ? A.n_im.at(k) : 0;
    if (nH == 0) return;

    std::vector<int> h_handles;
    for (int h = 0; h < nH; ++h) h_handles.push_back(A.prime.handle_of({k, nim + h}));
    std::set<int> h_set(h_handles.begin(), h_handles.end());

    // split the flatness equations: action terms (degree-0 factor times an
    // unassigned homology generator) against the inhomogeneous remainder
    std::vector<std::vector<PolyForm>> R(nH, std::vector<PolyForm>(nH, PolyForm(C.m)));
    std::vector<PolyForm> gamma;
    for (int h = 0; h < nH; ++h) {
        const CEPoly& dh = C.ce.delta[h_handles[h]];
        CEPoly rest;
        for (auto& [mono, c] : dh) {
            if (mono.size() == 2 && h_set.count(mono[1]) &&
                C.ce.ce_degree[mono[0]] == 1) {
                int hp = (int)(std::find(h_handles.begin(), h_handles.end(), mono[1]) -
                               h_handles.begin());
                if (!C.assigned.count(mono[0]))
                    throw std::logic_error("fill_horn: action factor unassigned");
                R[h][hp] += C.work.form(mono[0]).scaled(c);
                continue;
            }
            if (mono.size() == 2 && h_set.count(mono[0]))
                throw std::logic_error("fill_horn: unexpected monomial order in action");
            if (!C.is_assigned_monomial(mono))
                throw std::logic_error("fill_horn: homology stage saw an unassigned factor");
            rest[mono] = c;
        }
        gamma.push_back(mc_eval(C.work, rest));
    }

    auto M = matrix_transport(R, C.m, C.j);
    auto Minv = unipotent_inverse(M);
    VecPoly gamma_p = matrix_apply(M, gamma);
    for (auto& g : gamma_p)
        if (!d(g).is_zero())
            throw std::logic_error("fill_horn: twisted inhomogeneity is not closed");

    // twist the horn data facetwise
    std::map<int, VecPoly> beta_p;
    for (auto& [r, xr] : C.horn.facets) {
        AffineMap face = AffineMap::face(r, C.m);
        std::vector<std::vector<PolyForm>> Mr(nH, std::vector<PolyForm>(nH));
        for (int a = 0; a < nH; ++a)
            for (int b = 0; b < nH; ++b) Mr[a][b] = pullback(M[a][b], face);
        VecPoly beta;
        for (int h = 0; h < nH; ++h) {
            PolyForm f = xr.form(h_handles[h]);
            if (f.is_zero()) f = PolyForm(C.m - 1);
            beta.push_back(std::move(f));
        }
        VecPoly tw = matrix_apply(Mr, beta);
        for (int h = 0; h < nH; ++h)
            if (!(d(tw[h]) == restrict_to_facet(gamma_p[h], r)))
                throw std::logic_error("fill_horn: twisted horn does not solve d b' = g'");
        beta_p[r] = std::move(tw);
    }

    // pin data, twisted with the current transport
    std::vector<PolyForm> pin_twisted;
    if (C.pin_adapted) {
        VecPoly pf;
        for (int h = 0; h < nH; ++h) {
            PolyForm f = C.pin_adapted->filler.form(h_handles[h]);
            if (f.is_zero()) f = PolyForm(C.m);
            pf.push_back(std::move(f));
        }
        pin_twisted = matrix_apply(M, pf);
    }

    // solve componentwise with the flow-transport extension and untwist
    VecPoly beta_bar_p;
    for (int h = 0; h < nH; ++h) {
        FormHorn fam;
        fam.m = C.m;
        fam.j = C.j;
        for (auto& [r, tw] : beta_p) fam.facets[r] = tw[h];
        std::optional<HornExtensionPin> hp;
        if (C.pin_adapted)
            hp = HornExtensionPin{FormHorn::restriction(pin_twisted[h], C.m, C.j),
                                  pin_twisted[h]};
        beta_bar_p.push_back(horn_extend_form(fam, gamma_p[h], hp));
    }
    VecPoly beta_bar = matrix_apply(Minv, beta_bar_p);
    for (int h = 0; h < nH; ++h) assign(C, h_handles[h], beta_bar[h]);
}

}  // namespace

MCElement fill_horn(const LInftyAlgebra& L, const MCHorn& horn,
                    const std::optional<MCPin>& pin) {
    auto nil = is_nilpotent(L);
    if (!nil.nilpotent)
        throw NonNilpotentError(
            "fill_horn: exact filling requires a nilpotent algebra; for the "
            "compact string case use the numeric string module");
    if (horn.m < 1 || horn.j < 0 || horn.j > horn.m)
        throw std::invalid_argument("fill_horn: bad horn shape");

    CEAlgebra ce = ce_differential(L);
    horn.validate(ce);
    if (pin) {
        if (pin->horn.m != horn.m || pin->horn.j != horn.j)
            throw std::invalid_argument("fill_horn: pin shape mismatch");
        pin->horn.validate(ce);
        auto pv = validate_mc(ce, pin->filler);
        if (!pv.ok) throw std::invalid_argument("fill_horn: pin filler is not flat");
        if (!(MCHorn::restriction(pin->filler, horn.j) == pin->horn))
            throw std::invalid_argument("fill_horn: pin filler does not restrict to pin horn");
    }

    AdaptedBasis A = adapt(L);
    CEAlgebra ce_p = ce_differential(A.prime);
    MCHorn horn_p = horn_to_adapted(A, L, horn);
    std::optional<MCPin> pin_p;
    if (pin)
        pin_p = MCPin{horn_to_adapted(A, L, pin->horn), to_adapted(A, L, pin->filler)};

    FillContext C{A, ce_p, horn_p, pin_p, horn.m, horn.j, mc_zero(A.prime, horn.m), {}};

    stage_base_gauge(C);
    int top = L.top_degree();
    for (int k = 1; k <= top; ++k) {
        stage_free(C, k);
        stage_homology(C, k);
    }

    // every generator must be assigned
    for (int h = 0; h < (int)A.prime.basis().size(); ++h)
        if (!C.assigned.count(h)) throw std::logic_error("fill_horn: unassigned generator");

    auto val = validate_mc(ce_p, C.work);
    if (!val.ok) throw std::logic_error("fill_horn: filler fails the flatness system");

    MCElement out = from_adapted(A, L, C.work);
    auto val2 = validate_mc(ce, out);
    if (!val2.ok) throw std::logic_error("fill_horn: transported filler fails validation");
    if (!(MCHorn::restriction(out, horn.j) == horn))
        throw std::logic_error("fill_horn: filler does not restrict to the horn");
    return out;
}

std::vector<Scalar> period_class(const LInftyAlgebra& L, const MCElement& x) {
    if (!L.brackets.empty())
        throw std::invalid_argument("period_class: algebra must be abelian");
    if (L.space.dims.size() != 1)
        throw std::invalid_argument("period_class: algebra must sit in a single degree");
    int deg = L.space.dims.begin()->first;
    int n = deg + 1;
    if (x.m != n)
        throw std::invalid_argument("period_class: element must live on Delta^{n}");
    for (int i = 0; i <= x.m; ++i) {
        MCElement f = mc_face(x, i);
        for (auto& [h, form] : f.forms)
            if (!form.is_zero())
                throw std::invalid_argument("period_class: boundary faces must vanish");
    }
    std::vector<Scalar> out;
    for (int h = 0; h < (int)L.basis().size(); ++h)
        out.push_back(simplex_period(x.form(h)));
    return out;
}

namespace {

// Closed n-form on Delta^{n+1} with faces (x, y, 0, ..., 0), found by an
// exact linear solve at escalating coefficient degree.
std::optional<PolyForm> closed_form_with_faces(const PolyForm& x, const PolyForm& y,
                                               int n) {
    int m = n + 1;
    int base_deg = 1;
    for (auto& [k, c] : x.terms())
        for (int e : k.exps) base_deg = std::max(base_deg, e + 1);
    for (auto& [k, c] : y.terms())
        for (int e : k.exps) base_deg = std::max(base_deg, e + 1);

    // dt subsets of size n in m variables
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        std::vector<int> s;
        for (int v = 0; v < m; ++v)
            if (mask & (1u << v)) s.push_back(v);
        subsets.push_back(s);
    }

    for (int D = base_deg; D <= base_deg + 6; ++D) {
        // unknown basis
        std::vector<std::pair<std::vector<int>, std::vector<int>>> unknowns;
        std::vector<int> exps(m, 0);
        std::function<void(int, int)> gen = [&](int pos, int left) {
            if (pos == m) {
                for (auto& s : subsets) unknowns.push_back({exps, s});
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[pos] = e;
                gen(pos + 1, left - e);
            }
            exps[pos] = 0;
        };
        gen(0, D);

        // constraint rows: keyed by (constraint id, target term)
        std::map<std::pair<int, PolyForm::Key>, std::vector<Scalar>> rows;
        std::map<std::pair<int, PolyForm::Key>, Scalar> rhs;
        auto add_constraint = [&](int cid, const PolyForm& image, size_t col) {
            for (auto& [k, c] : image.terms()) {
                auto key = std::make_pair(cid, k);
                auto it = rows.find(key);
                if (it == rows.end())
                    it = rows.emplace(key, std::vector<Scalar>(unknowns.size())).first;
                it->second[col] += c;
            }
        };
        auto add_rhs = [&](int cid, const PolyForm& target) {
            for (auto& [k, c] : target.terms()) {
                auto key = std::make_pair(cid, k);
                if (!rows.count(key))
                    rows.emplace(key, std::vector<Scalar>(unknowns.size()));
                rhs[key] += c;
            }
        };

        for (size_t col = 0; col < unknowns.size(); ++col) {
            PolyForm e = PolyForm::monomial(m, unknowns[col].first, unknowns[col].second,
                                            Scalar(1));
            add_constraint(0, d(e), col);
            for (int i = 0; i <= m; ++i) add_constraint(1 + i, restrict_to_facet(e, i), col);
        }
        add_rhs(1, x);
        add_rhs(2, y);

        // assemble and solve
        size_t nrows = rows.size();
        Mat Asys(nrows, unknowns.size());
        std::vector<Scalar> b(nrows);
        size_t r = 0;
        for (auto& [key, coeffs] : rows) {
            for (size_t cidx = 0; cidx < coeffs.size(); ++cidx) Asys.at(r, cidx) = coeffs[cidx];
            auto it = rhs.find(key);
            if (it != rhs.end()) b[r] = it->second;
            ++r;
        }
        auto sol = Asys.solve(b);
        if (!sol) continue;
        PolyForm W(m);
        for (size_t cidx = 0; cidx < unknowns.size(); ++cidx)
            if (!(*sol)[cidx].is_zero())
                W.add_term(unknowns[cidx].first, unknowns[cidx].second, (*sol)[cidx]);
        return W;
    }
    return std::nullopt;
}

}  // namespace

AbelianHomotopy abelian_homotopy(const LInftyAlgebra& L, const MCElement& x,
                                 const MCElement& y) {
    auto px = period_class(L, x);
    auto py = period_class(L, y);
    AbelianHomotopy out;
    bool equal = true;
    for (size_t i = 0; i < px.size(); ++i)
        if (!(px[i] == py[i])) equal = false;
    if (!equal) {
        for (size_t i = 0; i < px.size(); ++i) out.obstruction.push_back(px[i] - py[i]);
        return out;
    }

    int n = x.m;
    MCElement w;
    w.L = &L;
    w.m = n + 1;
    for (int h = 0; h < (int)L.basis().size(); ++h) {
        auto W = closed_form_with_faces(x.form(h), y.form(h), n);
        if (!W)
            throw std::logic_error("abelian_homotopy: witness solve failed at the degree cap");
        if (!W->is_zero()) w.forms[h] = *W;
    }

    // exact witness verification
    CEAlgebra ce = ce_differential(L);
    auto val = validate_mc(ce, w);
    if (!val.ok) throw std::logic_error("abelian_homotopy: witness is not flat");
    if (!(mc_face(w, 0) == x) || !(mc_face(w, 1) == y))
        throw std::logic_error("abelian_homotopy: witness has wrong principal faces");
    for (int i = 2; i <= w.m; ++i) {
        MCElement f = mc_face(w, i);
        for (auto& [h, form] : f.forms)
            if (!form.is_zero())
                throw std::logic_error("abelian_homotopy: witness has nonzero side face");
    }
    out.witness = std::move(w);
    return out;
}

}  // namespace lk
