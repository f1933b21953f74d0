#include "lk/polyform.hpp"

#include <algorithm>
#include <stdexcept>

namespace lk {

namespace {

mpq_class factorial(long n) {
    mpz_class f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return mpq_class(f);
}

// sign of dt_S1 ^ dt_S2 relative to dt_{S1 u S2}; zero overlap assumed checked
int merge_sign(const std::vector<int>& s1, const std::vector<int>& s2) {
    long inv = 0;
    for (int x : s1)
        for (int y : s2)
            if (y < x) ++inv;
    return inv % 2 ? -1 : 1;
}

bool disjoint(const std::vector<int>& s1, const std::vector<int>& s2) {
    for (int x : s1)
        if (std::binary_search(s2.begin(), s2.end(), x)) return false;
    return true;
}

std::vector<int> merged(const std::vector<int>& s1, const std::vector<int>& s2) {
    std::vector<int> out;
    out.reserve(s1.size() + s2.size());
    std::merge(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(out));
    return out;
}

}  // namespace

AffineMap AffineMap::identity(int m) {
    AffineMap a;
    a.sdim = a.tdim = m;
    a.coeff.assign(m, std::vector<Scalar>(m + 1));
    for (int i = 0; i < m; ++i) a.coeff[i][i + 1] = Scalar(1);
    return a;
}

AffineMap AffineMap::from_vertex_images(int sdim, int tdim,
                                        const std::vector<std::vector<Scalar>>& images) {
    if ((int)images.size() != sdim + 1)
        throw std::invalid_argument("AffineMap: need sdim+1 vertex images");
    AffineMap a;
    a.sdim = sdim;
    a.tdim = tdim;
    a.coeff.assign(tdim, std::vector<Scalar>(sdim + 1));
    for (int i = 0; i < tdim; ++i) {
        if ((int)images[0].size() != tdim)
            throw std::invalid_argument("AffineMap: image size mismatch");
        a.coeff[i][0] = images[0][i];
        for (int j = 1; j <= sdim; ++j) a.coeff[i][j] = images[j][i] - images[0][i];
    }
    return a;
}

AffineMap AffineMap::from_vertex_map(int sdim, int tdim, const std::vector<int>& v) {
    std::vector<std::vector<Scalar>> images;
    for (int j = 0; j <= sdim; ++j) {
        std::vector<Scalar> img(tdim);
        if (v[j] < 0 || v[j] > tdim)
            throw std::invalid_argument("AffineMap: vertex out of range");
        if (v[j] > 0) img[v[j] - 1] = Scalar(1);
        images.push_back(std::move(img));
    }
    return from_vertex_images(sdim, tdim, images);
}

AffineMap AffineMap::face(int i, int m) {
    std::vector<int> v(m);
    for (int j = 0; j < m; ++j) v[j] = j < i ? j : j + 1;
    return from_vertex_map(m - 1, m, v);
}

AffineMap AffineMap::degeneracy(int i, int m) {
    std::vector<int> v(m + 2);
    for (int j = 0; j <= m + 1; ++j) v[j] = j <= i ? j : j - 1;
    return from_vertex_map(m + 1, m, v);
}

AffineMap AffineMap::collapse(int m, const std::vector<int>& I, int j) {
    std::vector<int> v(m + 1);
    for (int t = 0; t <= m; ++t)
        v[t] = std::find(I.begin(), I.end(), t) != I.end() ? j : t;
    if (v[j] != j) throw std::invalid_argument("AffineMap::collapse: j must lie in I");
    return from_vertex_map(m, m, v);
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    if (inner.tdim != sdim) throw std::invalid_argument("AffineMap: compose mismatch");
    AffineMap a;
    a.sdim = inner.sdim;
    a.tdim = tdim;
    a.coeff.assign(tdim, std::vector<Scalar>(inner.sdim + 1));
    for (int i = 0; i < tdim; ++i) {
        a.coeff[i][0] = coeff[i][0];
        for (int k = 1; k <= sdim; ++k)
            for (int j = 0; j <= inner.sdim; ++j)
                a.coeff[i][j] += coeff[i][k] * inner.coeff[k - 1][j];
    }
    return a;
}

PolyForm PolyForm::constant(int m, const Scalar& c) {
    PolyForm f(m);
    f.add_term(std::vector<int>(m, 0), {}, c);
    return f;
}

PolyForm PolyForm::coordinate(int m, int var) {
    PolyForm f(m);
    std::vector<int> e(m, 0);
    e.at(var) = 1;
    f.add_term(e, {}, Scalar(1));
    return f;
}

PolyForm PolyForm::differential(int m, int var) {
    PolyForm f(m);
    if (var < 0 || var >= m) throw std::invalid_argument("PolyForm: dt index");
    f.add_term(std::vector<int>(m, 0), {var}, Scalar(1));
    return f;
}

PolyForm PolyForm::monomial(int m, std::vector<int> exps, std::vector<int> dts,
                            const Scalar& c) {
    PolyForm f(m);
    f.add_term(std::move(exps), std::move(dts), c);
    return f;
}

void PolyForm::add_term(std::vector<int> exps, std::vector<int> dts, const Scalar& c) {
    if ((int)exps.size() != m_) throw std::invalid_argument("PolyForm: exps size");
    if (!std::is_sorted(dts.begin(), dts.end()) ||
        std::adjacent_find(dts.begin(), dts.end()) != dts.end())
        throw std::invalid_argument("PolyForm: dts must be strictly sorted");
    for (int v : dts)
        if (v < 0 || v >= m_) throw std::invalid_argument("PolyForm: dt index range");
    if (c.is_zero()) return;
    Key k{std::move(exps), std::move(dts)};
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool PolyForm::homogeneous(int* deg) const {
    int dd = -1;
    for (auto& [k, c] : terms_) {
        int kd = (int)k.dts.size();
        if (dd == -1) dd = kd;
        else if (dd != kd) return false;
    }
    if (deg) *deg = dd == -1 ? 0 : dd;
    return true;
}

int PolyForm::degree() const {
    int deg = 0;
    if (!homogeneous(&deg)) throw std::invalid_argument("PolyForm: inhomogeneous");
    return deg;
}

PolyForm PolyForm::operator-() const {
    PolyForm f(m_);
    for (auto& [k, c] : terms_) f.terms_[k] = -c;
    return f;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    if (o.is_zero()) return *this;
    if (m_ != o.m_) {
        if (is_zero()) m_ = o.m_;
        else throw std::invalid_argument("PolyForm: dimension mismatch in +");
    }
    for (auto& [k, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) { return *this += -o; }

PolyForm PolyForm::scaled(const Scalar& c) const {
    PolyForm f(m_);
    if (c.is_zero()) return f;
    for (auto& [k, v] : terms_) f.terms_[k] = c * v;
    return f;
}

bool PolyForm::operator==(const PolyForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    return m_ == o.m_ && terms_ == o.terms_;
}

Scalar PolyForm::eval0(const std::vector<Scalar>& t) const {
    if ((int)t.size() != m_) throw std::invalid_argument("PolyForm: eval0 point size");
    Scalar out;
    for (auto& [k, c] : terms_) {
        if (!k.dts.empty()) throw std::invalid_argument("PolyForm: eval0 on non-0-form");
        Scalar term = c;
        for (int i = 0; i < m_; ++i)
            for (int e = 0; e < k.exps[i]; ++e) term *= t[i];
        out += term;
    }
    return out;
}

std::string PolyForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (int i = 0; i < m_; ++i)
            if (k.exps[i]) {
                out += "*t" + std::to_string(i + 1);
                if (k.exps[i] > 1) out += "^" + std::to_string(k.exps[i]);
            }
        for (int v : k.dts) out += "*dt" + std::to_string(v + 1);
    }
    return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.is_zero() || b.is_zero()) return PolyForm(std::max(a.m_, b.m_));
    if (a.m_ != b.m_)
        throw std::invalid_argument("PolyForm: dimension mismatch in wedge");
    PolyForm out(a.m_);
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) {
            if (!disjoint(ka.dts, kb.dts)) continue;
            int sg = merge_sign(ka.dts, kb.dts);
            std::vector<int> e(ka.exps);
            for (size_t i = 0; i < e.size(); ++i) e[i] += kb.exps[i];
            Scalar c = ca * cb;
            if (sg < 0) c = -c;
            out.add_term(std::move(e), merged(ka.dts, kb.dts), c);
        }
    return out;
}

PolyForm d(const PolyForm& w) {
    PolyForm out(w.m_);
    for (auto& [k, c] : w.terms_)
        for (int i = 0; i < w.m_; ++i) {
            if (k.exps[i] == 0) continue;
            if (std::binary_search(k.dts.begin(), k.dts.end(), i)) continue;
            std::vector<int> e(k.exps);
            long n = e[i]--;
            long before = std::lower_bound(k.dts.begin(), k.dts.end(), i) - k.dts.begin();
            std::vector<int> dts(k.dts);
            dts.insert(dts.begin() + before, i);
            Scalar coeff = c * Scalar(mpq_class(n));
            if (before % 2) coeff = -coeff;
            out.add_term(std::move(e), std::move(dts), coeff);
        }
    return out;
}

namespace {

PolyForm pow0(const PolyForm& base, int e, int m) {
    PolyForm acc = PolyForm::constant(m, Scalar(1));
    for (int i = 0; i < e; ++i) acc = wedge(acc, base);
    return acc;
}

// shared expansion for pullback and pullback_s: subs0[i] substitutes t_{i+1},
// subs1[i] substitutes dt_{i+1}; target vars of the output = out_m.
PolyForm pullback_impl(const PolyForm& w, const std::vector<PolyForm>& subs0,
                       const std::vector<PolyForm>& subs1, int out_m) {
    PolyForm out(out_m);
    for (auto& [k, c] : w.terms()) {
        PolyForm prod = PolyForm::constant(out_m, c);
        for (size_t i = 0; i < k.exps.size(); ++i)
            if (k.exps[i]) prod = wedge(prod, pow0(subs0[i], k.exps[i], out_m));
        for (int v : k.dts) prod = wedge(prod, subs1[v]);
        out += prod;
    }
    return out;
}

}  // namespace

PolyForm pullback(const PolyForm& w, const AffineMap& phi) {
    if (w.is_zero()) return PolyForm(phi.sdim);
    if (w.vars() != phi.tdim)
        throw std::invalid_argument("PolyForm: pullback dimension mismatch");
    int sm = phi.sdim;
    std::vector<PolyForm> subs0, subs1;
    for (int i = 0; i < phi.tdim; ++i) {
        PolyForm f(sm);
        std::vector<int> z(sm, 0);
        f.add_term(z, {}, phi.coeff[i][0]);
        PolyForm df(sm);
        for (int j = 1; j <= sm; ++j) {
            std::vector<int> e(sm, 0);
            e[j - 1] = 1;
            f.add_term(e, {}, phi.coeff[i][j]);
            df.add_term(z, {j - 1}, phi.coeff[i][j]);
        }
        subs0.push_back(std::move(f));
        subs1.push_back(std::move(df));
    }
    return pullback_impl(w, subs0, subs1, sm);
}

PolyForm pullback_s(const PolyForm& w, const AffineMap& A0, const AffineMap& A1) {
    if (w.vars() != A0.tdim || A0.tdim != A1.tdim || A0.sdim != A1.sdim)
        throw std::invalid_argument("PolyForm: pullback_s dimension mismatch");
    int m = A0.sdim;      // source variables
    int M = m + 1;        // plus the parameter s as the last variable
    std::vector<PolyForm> subs0, subs1;
    for (int i = 0; i < A0.tdim; ++i) {
        PolyForm f(M), df(M);
        std::vector<int> z(M, 0), zs(M, 0);
        zs[m] = 1;
        f.add_term(z, {}, A0.coeff[i][0]);
        f.add_term(zs, {}, A1.coeff[i][0]);
        for (int j = 1; j <= m; ++j) {
            std::vector<int> e(z), es(zs);
            e[j - 1] = 1;
            es[j - 1] += 1;
            f.add_term(e, {}, A0.coeff[i][j]);
            f.add_term(es, {}, A1.coeff[i][j]);
            df.add_term(z, {j - 1}, A0.coeff[i][j]);
            df.add_term(zs, {j - 1}, A1.coeff[i][j]);
        }
        subs0.push_back(std::move(f));
        subs1.push_back(std::move(df));
    }
    return pullback_impl(w, subs0, subs1, M);
}

PolyForm contract(const PolyForm& w, const std::vector<PolyForm>& v) {
    if (w.is_zero()) return PolyForm((int)v.size());
    if ((int)v.size() != w.vars())
        throw std::invalid_argument("PolyForm: contract needs one component per variable");
    PolyForm out(w.vars());
    for (auto& [k, c] : w.terms_) {
        for (size_t pos = 0; pos < k.dts.size(); ++pos) {
            int var = k.dts[pos];
            if (v[var].is_zero()) continue;
            std::vector<int> rest(k.dts);
            rest.erase(rest.begin() + pos);
            Scalar sgn_c = (pos % 2) ? -c : c;
            PolyForm base = PolyForm::monomial(w.vars(), k.exps, rest, sgn_c);
            out += wedge(v[var], base);
        }
    }
    return out;
}

PolyForm s_integral(const PolyForm& w) {
    if (w.vars() == 0) throw std::invalid_argument("PolyForm: s_integral needs a parameter");
    int m = w.vars() - 1;
    PolyForm out(m);
    for (auto& [k, c] : w.terms_) {
        if (!k.dts.empty() && k.dts.back() == m)
            throw std::invalid_argument("PolyForm: parameter variable carries a dt");
        long e = k.exps[m];
        std::vector<int> exps(k.exps.begin(), k.exps.end() - 1);
        out.add_term(std::move(exps), k.dts, c * Scalar(1, e + 1));
    }
    return out;
}

PolyForm antiderivative(const PolyForm& w, int var) {
    PolyForm out(w.vars());
    for (auto& [k, c] : w.terms_) {
        if (std::binary_search(k.dts.begin(), k.dts.end(), var))
            throw std::invalid_argument("PolyForm: antiderivative across a dt variable");
        std::vector<int> e(k.exps);
        long n = ++e[var];
        out.add_term(std::move(e), k.dts, c * Scalar(1, n));
    }
    return out;
}

PolyForm compose0(const PolyForm& f, const std::vector<PolyForm>& gs) {
    if ((int)gs.size() != f.vars())
        throw std::invalid_argument("PolyForm: compose0 needs one g per variable");
    int M = gs.empty() ? 0 : gs[0].vars();
    PolyForm out(M);
    for (auto& [k, c] : f.terms_) {
        if (!k.dts.empty()) throw std::invalid_argument("PolyForm: compose0 on non-0-form");
        PolyForm prod = PolyForm::constant(M, c);
        for (size_t i = 0; i < k.exps.size(); ++i)
            if (k.exps[i]) prod = wedge(prod, pow0(gs[i], k.exps[i], M));
        out += prod;
    }
    return out;
}

Scalar simplex_period(const PolyForm& w) {
    int m = w.vars();
    Scalar out;
    for (auto& [k, c] : w.terms()) {
        if ((int)k.dts.size() != m)
            throw std::invalid_argument("PolyForm: simplex_period needs a top-degree form");
        long total = 0;
        mpq_class num(1);
        for (int e : k.exps) {
            num *= factorial(e);
            total += e;
        }
        out += c * Scalar(num / factorial(total + m));
    }
    return out;
}

PolyForm restrict_to_facet(const PolyForm& w, int i) {
    return pullback(w, AffineMap::face(i, w.vars()));
}

std::vector<PolyForm> collapse_vector_field(int m, const std::vector<int>& I, int j) {
    AffineMap p = AffineMap::collapse(m, I, j);
    std::vector<PolyForm> v;
    for (int i = 0; i < m; ++i) {
        PolyForm comp = PolyForm::coordinate(m, i);
        PolyForm pi(m);
        std::vector<int> z(m, 0);
        pi.add_term(z, {}, p.coeff[i][0]);
        for (int k = 1; k <= m; ++k) {
            std::vector<int> e(m, 0);
            e[k - 1] = 1;
            pi.add_term(e, {}, p.coeff[i][k]);
        }
        v.push_back(comp - pi);
    }
    return v;
}

void FormHorn::validate() const {
    for (int i = 0; i <= m; ++i) {
        if (i == j) {
            if (facets.count(i)) throw std::invalid_argument("FormHorn: facet j present");
            continue;
        }
        auto it = facets.find(i);
        if (it == facets.end()) throw std::invalid_argument("FormHorn: missing facet");
        if (it->second.vars() != m - 1 && !it->second.is_zero())
            throw std::invalid_argument("FormHorn: facet dimension mismatch");
    }
    for (int i = 0; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k) {
            if (i == j || k == j) continue;
            PolyForm a = restrict_to_facet(facets.at(k), i);
            PolyForm b = restrict_to_facet(facets.at(i), k - 1);
            if (!(a == b))
                throw std::invalid_argument("FormHorn: facets disagree on intersection");
        }
}

FormHorn FormHorn::restriction(const PolyForm& w, int m, int j) {
    FormHorn h;
    h.m = m;
    h.j = j;
    for (int i = 0; i <= m; ++i)
        if (i != j) h.facets[i] = restrict_to_facet(w, i);
    return h;
}

bool FormHorn::operator==(const FormHorn& o) const {
    return m == o.m && j == o.j && facets == o.facets;
}

namespace {

// p_I^* applied to a horn family: factor p_I through a facet containing its
// image and pull the facet form back.
PolyForm family_pullback(const FormHorn& alpha, const std::vector<int>& I) {
    int m = alpha.m;
    int r = -1;
    for (int cand : I)
        if (cand != alpha.j) { r = cand; break; }
    if (r < 0) throw std::logic_error("family_pullback: |I| < 2");
    // q: Delta^m -> Delta^{m-1} ~ facet r,  vertex v -> index of (v in I ? j : v)
    std::vector<int> q(m + 1);
    for (int v = 0; v <= m; ++v) {
        int img = std::find(I.begin(), I.end(), v) != I.end() ? alpha.j : v;
        q[v] = img < r ? img : img - 1;  // position within [m] \ {r}
    }
    return pullback(alpha.facets.at(r), AffineMap::from_vertex_map(m, m - 1, q));
}

template <typename Fn>
void for_each_collapse_set(int m, int j, Fn&& fn) {
    // subsets I of [m] with j in I and |I| >= 2, as sorted vertex lists
    for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask) {
        if (!(mask & (1u << j))) continue;
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<int> I;
        for (int v = 0; v <= m; ++v)
            if (mask & (1u << v)) I.push_back(v);
        fn(I);
    }
}

PolyForm swa_sum(const FormHorn& alpha) {
    PolyForm out(alpha.m);
    for_each_collapse_set(alpha.m, alpha.j, [&](const std::vector<int>& I) {
        PolyForm piece = family_pullback(alpha, I);
        out += (I.size() % 2 == 0) ? piece : -piece;
    });
    return out;
}

// (p_I^s)* iota_{v_I} beta vanishes identically at s = 0 (v_I vanishes on the
// image of p_I), so dividing by the parameter is exact polynomial division.
// The division compensates for p_I^s being the flow of v_I only after a time
// reparametrization; without it the extension would satisfy d(ext) != beta.
PolyForm divide_by_param(const PolyForm& w) {
    int M = w.vars();
    PolyForm out(M);
    for (auto& [k, c] : w.terms()) {
        if (k.exps[M - 1] < 1)
            throw std::logic_error("divide_by_param: term not divisible by s");
        std::vector<int> e(k.exps);
        --e[M - 1];
        out.add_term(std::move(e), k.dts, c);
    }
    return out;
}

PolyForm stj_sum(const FormHorn& alpha, const PolyForm& beta) {
    int m = alpha.m;
    PolyForm out(m);
    for_each_collapse_set(m, alpha.j, [&](const std::vector<int>& I) {
        AffineMap pI = AffineMap::collapse(m, I, alpha.j);
        AffineMap id = AffineMap::identity(m);
        // p_I^s = p_I + s*(Id - p_I)
        AffineMap A1 = id;
        for (int i = 0; i < m; ++i)
            for (int k = 0; k <= m; ++k) A1.coeff[i][k] = id.coeff[i][k] - pI.coeff[i][k];
        PolyForm iv = contract(beta, collapse_vector_field(m, I, alpha.j));
        PolyForm transported = s_integral(divide_by_param(pullback_s(iv, pI, A1)));
        PolyForm piece = family_pullback(alpha, I) + transported;
        out += (I.size() % 2 == 0) ? piece : -piece;
    });
    return out;
}

}  // namespace

PolyForm horn_extend_form(const FormHorn& alpha, const std::optional<PolyForm>& beta,
                          const std::optional<HornExtensionPin>& pin) {
    alpha.validate();
    if (beta) {
        if (beta->vars() != alpha.m && !beta->is_zero())
            throw std::invalid_argument("horn_extend_form: beta dimension mismatch");
        if (!d(*beta).is_zero())
            throw std::invalid_argument("horn_extend_form: beta is not closed");
        for (auto& [i, f] : alpha.facets)
            if (!(d(f) == restrict_to_facet(*beta, i)))
                throw std::invalid_argument(
                    "horn_extend_form: d(alpha) != beta on facet " + std::to_string(i));
    }
    PolyForm base = beta ? stj_sum(alpha, *beta) : swa_sum(alpha);
    if (!pin) return base;

    pin->horn0.validate();
    if (pin->horn0.m != alpha.m || pin->horn0.j != alpha.j)
        throw std::invalid_argument("horn_extend_form: pin horn shape mismatch");
    if (!(FormHorn::restriction(pin->filler0, alpha.m, alpha.j) == pin->horn0))
        throw std::invalid_argument("horn_extend_form: pin filler does not restrict to pin horn");
    PolyForm beta0 = d(pin->filler0);
    PolyForm base0 = beta ? stj_sum(pin->horn0, beta0) : swa_sum(pin->horn0);
    return base + (pin->filler0 - base0);
}

}  // namespace lk
