#include "lk/gauge.hpp"

#include <stdexcept>

namespace lk {

namespace {

constexpr int kMaxSeries = 24;  // hard cap on nilpotency depth

mpq_class factorial(long n) {
    mpz_class f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return mpq_class(f);
}

bool all_zero(const VecPoly& v) {
    for (auto& f : v)
        if (!f.is_zero()) return false;
    return true;
}

// barycentric coordinates of a vertex as constants
std::vector<Scalar> vertex_coords(int m, int v) {
    std::vector<Scalar> b(m);
    if (v > 0) b[v - 1] = Scalar(1);
    return b;
}

// substitution polynomials for the straight segment from the base vertex:
// gamma_i(t, tau) = b_i + tau * (t_i - b_i), as 0-forms in m+1 variables
std::vector<PolyForm> segment_substitution(int m, int base_vertex) {
    auto b = vertex_coords(m, base_vertex);
    std::vector<PolyForm> gs;
    int M = m + 1;
    for (int i = 0; i < m; ++i) {
        PolyForm g(M);
        std::vector<int> z(M, 0);
        if (!b[i].is_zero()) g.add_term(z, {}, b[i]);
        std::vector<int> et(z), ett(z);
        et[i] = 1;
        et[M - 1] = 1;
        g.add_term(et, {}, Scalar(1));
        ett[M - 1] = 1;
        if (!b[i].is_zero()) g.add_term(ett, {}, -b[i]);
        gs.push_back(std::move(g));
    }
    return gs;
}

// pair a vector of 1-forms with the segment: a_c(t,tau) =
// sum_i coeff_{c,i}(gamma(t,tau)) * (t_i - b_i), a 0-form in m+1 variables
VecPoly pair_with_segment(const VecPoly& omega, int m, int base_vertex) {
    auto gs = segment_substitution(m, base_vertex);
    auto b = vertex_coords(m, base_vertex);
    int M = m + 1;
    VecPoly out;
    for (const PolyForm& comp : omega) {
        PolyForm acc(M);
        for (auto& [k, c] : comp.terms()) {
            if (k.dts.size() != 1)
                throw std::invalid_argument("pair_with_segment: expects 1-forms");
            int i = k.dts[0];
            // coefficient monomial evaluated along the segment
            PolyForm coef = PolyForm::monomial(m, k.exps, {}, c);
            PolyForm along = compose0(coef, gs);
            // direction component t_i - b_i
            PolyForm dir(M);
            std::vector<int> e(M, 0);
            e[i] = 1;
            dir.add_term(e, {}, Scalar(1));
            if (!b[i].is_zero()) dir.add_term(std::vector<int>(M, 0), {}, -b[i]);
            acc += wedge(along, dir);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

VecPoly substitute_tau_one(const VecPoly& v, int m) {
    std::vector<PolyForm> gs;
    for (int i = 0; i < m; ++i) gs.push_back(PolyForm::coordinate(m, i));
    gs.push_back(PolyForm::constant(m, Scalar(1)));
    VecPoly out;
    for (const PolyForm& f : v) out.push_back(compose0(f, gs));
    return out;
}

}  // namespace

mpq_class bernoulli_plus(int k) {
    // B^-_n by the standard recurrence, then B^+_1 = +1/2
    static std::vector<mpq_class> cache;
    if (cache.empty()) cache.push_back(1);
    while ((int)cache.size() <= k) {
        int n = (int)cache.size();
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        mpq_class s(0);
        mpz_class binom(1);  // C(n+1, 0)
        for (int j = 0; j < n; ++j) {
            s += mpq_class(binom) * cache[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        cache.push_back(-s / mpq_class(binom));
    }
    mpq_class v = cache[k];
    if (k == 1) v = -v;
    return v;
}

VecPoly g_bracket(const LInftyAlgebra& g, const VecPoly& x, const VecPoly& y) {
    int n = g.dim(0);
    if ((int)x.size() != n || (int)y.size() != n)
        throw std::invalid_argument("g_bracket: component count mismatch");
    int M = 0;
    for (auto& f : x)
        if (!f.is_zero()) M = f.vars();
    for (auto& f : y)
        if (!f.is_zero()) M = f.vars();
    VecPoly out(n, PolyForm(M));
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            auto val = g.bracket_basis({{0, i}, {0, j}});
            if (!val) continue;
            PolyForm prod = wedge(x[i], y[j]);
            for (int k = 0; k < n; ++k)
                if (!val->second[k].is_zero()) out[k] += prod.scaled(val->second[k]);
        }
    }
    return out;
}

namespace {

VecPoly log_derivative_series(const LInftyAlgebra& g, const VecPoly& u, bool left) {
    int n = g.dim(0);
    int m = 0;
    for (auto& f : u)
        if (!f.is_zero()) m = f.vars();
    VecPoly du;
    for (auto& f : u) du.push_back(d(f));
    VecPoly out(n, PolyForm(m));
    VecPoly term = du;  // ad_u^k(du)
    for (int k = 0; k <= kMaxSeries; ++k) {
        mpq_class q = mpq_class((left && (k % 2)) ? -1 : 1) / factorial(k + 1);
        Scalar coeff{q};
        bool nz = false;
        for (int i = 0; i < n; ++i) {
            if (term[i].is_zero()) continue;
            out[i] += term[i].scaled(coeff);
            nz = true;
        }
        if (!nz) return out;
        term = g_bracket(g, u, term);
    }
    throw std::domain_error("log_derivative: adjoint action is not nilpotent");
}

}  // namespace

VecPoly left_log_derivative(const LInftyAlgebra& g, const VecPoly& u) {
    return log_derivative_series(g, u, true);
}

VecPoly right_log_derivative(const LInftyAlgebra& g, const VecPoly& u) {
    return log_derivative_series(g, u, false);
}

VecPoly integrate_gauge(const LInftyAlgebra& g, const VecPoly& alpha, int m,
                        int base_vertex) {
    int n = g.dim(0);
    if ((int)alpha.size() != n)
        throw std::invalid_argument("integrate_gauge: component count mismatch");
    // a(t, tau) = alpha_{gamma(tau)}(gamma')
    VecPoly a = pair_with_segment(alpha, m, base_vertex);

    int M = m + 1;
    VecPoly u(n, PolyForm(M));
    bool stable = false;
    for (int iter = 0; iter <= kMaxSeries && !stable; ++iter) {
        // u' = sum_k B_k^+/k! ad_u^k(a), integrated from 0 in tau
        VecPoly rhs(n, PolyForm(M));
        VecPoly term = a;
        for (int k = 0; k <= kMaxSeries; ++k) {
            if (all_zero(term)) break;
            if (k == kMaxSeries)
                throw std::domain_error("integrate_gauge: algebra is not nilpotent");
            mpq_class bk = bernoulli_plus(k) / factorial(k);
            if (k == 1) bk = -bk;  // x/(e^x - 1) carries B_1 = -1/2
            if (bk != 0) {
                Scalar c{bk};
                for (int i = 0; i < n; ++i)
                    if (!term[i].is_zero()) rhs[i] += term[i].scaled(c);
            }
            term = g_bracket(g, u, term);
        }
        VecPoly unew;
        for (auto& f : rhs) unew.push_back(antiderivative(f, M - 1));
        stable = true;
        for (int i = 0; i < n; ++i)
            if (!(unew[i] == u[i])) stable = false;
        u = std::move(unew);
    }
    if (!stable) throw std::domain_error("integrate_gauge: Picard iteration did not stabilize");

    VecPoly result = substitute_tau_one(u, m);
    // exact postcondition: d(exp u) exp(-u) = alpha
    VecPoly check = right_log_derivative(g, result);
    for (int i = 0; i < n; ++i)
        if (!((check[i] - alpha[i]).is_zero()))
            throw std::logic_error("integrate_gauge: transport identity failed");
    return result;
}

std::vector<std::vector<PolyForm>> matrix_mul(
    const std::vector<std::vector<PolyForm>>& A,
    const std::vector<std::vector<PolyForm>>& B) {
    size_t n = A.size(), p = B.empty() ? 0 : B[0].size();
    std::vector<std::vector<PolyForm>> C(n, std::vector<PolyForm>(p));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < B.size(); ++k) {
            if (A[i][k].is_zero()) continue;
            for (size_t j = 0; j < p; ++j) {
                if (B[k][j].is_zero()) continue;
                C[i][j] += wedge(A[i][k], B[k][j]);
            }
        }
    return C;
}

VecPoly matrix_apply(const std::vector<std::vector<PolyForm>>& A, const VecPoly& v) {
    int vars = 0;
    for (auto& row : A)
        for (auto& f : row)
            if (!f.is_zero()) vars = f.vars();
    for (auto& f : v)
        if (!f.is_zero()) vars = f.vars();
    VecPoly out(A.size(), PolyForm(vars));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (A[i][j].is_zero() || v[j].is_zero()) continue;
            out[i] += wedge(A[i][j], v[j]);
        }
    return out;
}

std::vector<std::vector<PolyForm>> matrix_transport(
    const std::vector<std::vector<PolyForm>>& R, int m, int base_vertex) {
    size_t n = R.size();
    int M = m + 1;
    // S(t,tau) = R paired with the segment direction, entrywise 0-forms
    std::vector<std::vector<PolyForm>> S(n, std::vector<PolyForm>(n, PolyForm(M)));
    for (size_t i = 0; i < n; ++i) {
        VecPoly row(R[i]);
        for (auto& f : row)
            if (f.is_zero()) f = PolyForm(m);
        VecPoly paired = pair_with_segment(row, m, base_vertex);
        for (size_t j = 0; j < n; ++j) S[i][j] = paired[j];
    }

    auto Mat0 = [&](int vars) {
        std::vector<std::vector<PolyForm>> I(n, std::vector<PolyForm>(n, PolyForm(vars)));
        for (size_t i = 0; i < n; ++i) I[i][i] = PolyForm::constant(vars, Scalar(1));
        return I;
    };
    auto cur = Mat0(M);
    bool stable = false;
    for (int iter = 0; iter <= kMaxSeries && !stable; ++iter) {
        // M' = -M S, M(0) = Id
        auto prod = matrix_mul(cur, S);
        auto next = Mat0(M);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!prod[i][j].is_zero()) next[i][j] -= antiderivative(prod[i][j], M - 1);
        stable = true;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!(next[i][j] == cur[i][j])) stable = false;
        cur = std::move(next);
    }
    if (!stable) throw std::domain_error("matrix_transport: iteration did not stabilize");

    // substitute tau = 1
    std::vector<PolyForm> gs;
    for (int i = 0; i < m; ++i) gs.push_back(PolyForm::coordinate(m, i));
    gs.push_back(PolyForm::constant(m, Scalar(1)));
    std::vector<std::vector<PolyForm>> out(n, std::vector<PolyForm>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = compose0(cur[i][j], gs);

    // exact postcondition: dM + M ^ R = 0 entrywise
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            PolyForm res = d(out[i][j]);
            for (size_t l = 0; l < n; ++l) {
                if (out[i][l].is_zero() || R[l][j].is_zero()) continue;
                res += wedge(out[i][l], R[l][j]);
            }
            if (!res.is_zero())
                throw std::logic_error("matrix_transport: transport identity failed");
        }
    return out;
}

std::vector<std::vector<PolyForm>> unipotent_inverse(
    const std::vector<std::vector<PolyForm>>& Min) {
    size_t n = Min.size();
    int vars = 0;
    for (auto& row : Min)
        for (auto& f : row)
            if (!f.is_zero()) vars = f.vars();
    std::vector<std::vector<PolyForm>> N(n, std::vector<PolyForm>(n, PolyForm(vars)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            N[i][j] = Min[i][j];
            if (i == j) N[i][j] -= PolyForm::constant(vars, Scalar(1));
        }
    std::vector<std::vector<PolyForm>> acc(n, std::vector<PolyForm>(n, PolyForm(vars)));
    for (size_t i = 0; i < n; ++i) acc[i][i] = PolyForm::constant(vars, Scalar(1));
    std::vector<std::vector<PolyForm>> out = acc;  // Id
    std::vector<std::vector<PolyForm>> pw = acc;
    for (int k = 1; k <= kMaxSeries; ++k) {
        pw = matrix_mul(pw, N);
        bool nz = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!pw[i][j].is_zero()) nz = true;
        if (!nz) {
            // verify
            auto chk = matrix_mul(Min, out);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    PolyForm expect = (i == j) ? PolyForm::constant(vars, Scalar(1))
                                               : PolyForm(vars);
                    if (!(chk[i][j] == expect))
                        throw std::logic_error("unipotent_inverse: verification failed");
                }
            return out;
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (k % 2)
                    out[i][j] -= pw[i][j];
                else
                    out[i][j] += pw[i][j];
            }
    }
    throw std::domain_error("unipotent_inverse: matrix is not unipotent");
}

}  // namespace lk
