#include "lk/gradedlin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lk {

int GradedVectorSpace::total_dim() const {
    int t = 0;
    for (auto& [d, n] : dims) t += n;
    return t;
}

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.c != y.r) throw std::invalid_argument("IntMat: size mismatch");
    IntMat m(x.r, y.c);
    for (size_t i = 0; i < x.r; ++i)
        for (size_t k = 0; k < x.c; ++k) {
            if (x.at(i, k) == 0) continue;
            for (size_t j = 0; j < y.c; ++j) m.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return m;
}

mpz_class IntMat::det() const {
    if (r != c) throw std::invalid_argument("IntMat: det of non-square");
    // Bareiss fraction-free elimination
    IntMat m(*this);
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < m.r; ++k) {
        if (m.at(k, k) == 0) {
            size_t s = k + 1;
            while (s < m.r && m.at(s, k) == 0) ++s;
            if (s == m.r) return 0;
            for (size_t j = 0; j < m.c; ++j) std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < m.r; ++i)
            for (size_t j = k + 1; j < m.c; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_class q = num / prev;
                m.at(i, j) = q;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(m.r - 1, m.c - 1);
}

namespace {

struct SNFWork {
    IntMat M, U, V;

    void swap_rows(size_t a, size_t b) {
        for (size_t j = 0; j < M.c; ++j) std::swap(M.at(a, j), M.at(b, j));
        for (size_t j = 0; j < U.c; ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        for (size_t i = 0; i < M.r; ++i) std::swap(M.at(i, a), M.at(i, b));
        for (size_t i = 0; i < V.r; ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    void add_row(size_t dst, size_t src, const mpz_class& f) {  // row dst += f*src
        for (size_t j = 0; j < M.c; ++j) M.at(dst, j) += f * M.at(src, j);
        for (size_t j = 0; j < U.c; ++j) U.at(dst, j) += f * U.at(src, j);
    }
    void add_col(size_t dst, size_t src, const mpz_class& f) {
        for (size_t i = 0; i < M.r; ++i) M.at(i, dst) += f * M.at(i, src);
        for (size_t i = 0; i < V.r; ++i) V.at(i, dst) += f * V.at(i, src);
    }
    void negate_row(size_t i) {
        for (size_t j = 0; j < M.c; ++j) M.at(i, j) = -M.at(i, j);
        for (size_t j = 0; j < U.c; ++j) U.at(i, j) = -U.at(i, j);
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& Min) {
    SNFWork w{Min, IntMat::identity(Min.r), IntMat::identity(Min.c)};
    IntMat& M = w.M;
    size_t n = std::min(M.r, M.c);

    for (size_t t = 0; t < n; ++t) {
        // find a nonzero entry of minimal absolute value in the region
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < M.r; ++i)
            for (size_t j = t; j < M.c; ++j) {
                if (M.at(i, j) == 0) continue;
                if (!found || cmp(abs(M.at(i, j)), abs(M.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) w.swap_rows(pi, t);
        if (pj != t) w.swap_cols(pj, t);

        // reduce until the pivot divides its row and column, then clear them
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < M.r; ++i) {
                if (M.at(i, t) == 0) continue;
                mpz_class q = M.at(i, t) / M.at(t, t);
                w.add_row(i, t, -q);
                if (M.at(i, t) != 0) {
                    w.swap_rows(i, t);
                    again = true;
                }
            }
            for (size_t j = t + 1; j < M.c; ++j) {
                if (M.at(t, j) == 0) continue;
                mpz_class q = M.at(t, j) / M.at(t, t);
                w.add_col(j, t, -q);
                if (M.at(t, j) != 0) {
                    w.swap_cols(j, t);
                    again = true;
                }
            }
        }
        // the pivot must also divide the remaining block for the invariant
        // factor chain; if not, fold the offending row in and redo
        for (size_t i = t + 1; i < M.r && !again; ++i)
            for (size_t j = t + 1; j < M.c; ++j)
                if (M.at(i, j) % M.at(t, t) != 0) {
                    w.add_row(t, i, 1);
                    again = true;
                    break;
                }
        if (again) {
            --t;
            continue;
        }
        if (M.at(t, t) < 0) w.negate_row(t);
    }

    SNFResult result{w.U, w.M, w.V};
#ifndef NDEBUG
    // re-verify U M V = D and the divisibility chain
    IntMat umv = result.U * Min * result.V;
    if (!(umv == result.D)) throw std::logic_error("smith_normal_form: U M V != D");
    auto f = result.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i + 1] % f[i] != 0)
            throw std::logic_error("smith_normal_form: invariant factors out of order");
#endif
    return result;
}

std::vector<mpz_class> SNFResult::invariant_factors() const {
    std::vector<mpz_class> f;
    for (size_t i = 0; i < std::min(D.r, D.c); ++i)
        if (D.at(i, i) != 0) f.push_back(D.at(i, i));
    return f;
}

std::string FGAbGroup::str() const {
    std::string s;
    auto add = [&](const std::string& p) {
        if (!s.empty()) s += " + ";
        s += p;
    };
    if (rank == 1) add("Z");
    else if (rank > 1) add("Z^" + std::to_string(rank));
    for (long d : torsion) add("Z/" + std::to_string(d));
    if (s.empty()) s = "0";
    return s;
}

TwoTermHomology two_term_homology(const Mat& d_in, const Mat& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("two_term_homology: middle dimensions differ");
    if (d_in.cols() > 0 && d_out.rows() > 0) {
        Mat comp = d_out * d_in;
        if (!comp.is_zero())
            throw std::invalid_argument("two_term_homology: d_out * d_in != 0");
    }
    size_t mid = d_in.rows();

    // kernel of d_out
    std::vector<std::vector<Scalar>> ker;
    if (d_out.rows() == 0) {
        for (size_t j = 0; j < mid; ++j) {
            std::vector<Scalar> e(mid);
            e[j] = Scalar(1);
            ker.push_back(std::move(e));
        }
    } else {
        ker = d_out.kernel_basis();
    }

    // representatives: columns of [ im | ker ] that become pivots in the ker block
    std::vector<std::vector<Scalar>> cols;
    size_t n_im = d_in.cols();
    for (size_t j = 0; j < n_im; ++j) cols.push_back(d_in.col(j));
    for (auto& k : ker) cols.push_back(k);
    Mat stacked = Mat::from_cols(cols);
    auto pivots = stacked.column_pivots();

    TwoTermHomology h;
    size_t rank_in = 0;
    for (size_t p : pivots) {
        if (p < n_im)
            ++rank_in;
        else
            h.basis.push_back(cols[p]);
    }
    h.dimension = h.basis.size();
    // rank-nullity cross-check (exact, cheap)
    if (h.dimension != ker.size() - rank_in)
        throw std::logic_error("two_term_homology: rank bookkeeping mismatch");
    return h;
}

std::vector<std::vector<Scalar>> project_to_quotient(
    const std::vector<std::vector<Scalar>>& vectors,
    const std::vector<std::vector<Scalar>>& subspace_basis) {
    if (vectors.empty()) return {};
    size_t d = vectors[0].size();
    if (subspace_basis.empty()) return vectors;

    Mat W = Mat::from_cols(subspace_basis);
    if (W.rows() != d) throw std::invalid_argument("project_to_quotient: dim mismatch");
    Mat R = W;
    auto pivots = R.rref();  // pivot rows of the transposed picture: use columns of W^T
    // Work with W^T so pivots index coordinates of R^d.
    Mat Wt = W.transpose();
    Mat Rt = Wt;
    auto coord_pivots = Rt.rref();  // pivot coordinates spanned by W

    std::vector<bool> is_pivot(d, false);
    for (size_t p : coord_pivots) is_pivot[p] = true;

    // For x, subtract the unique W-combination matching x on pivot coordinates;
    // the remainder is supported on the complement coordinates.
    Mat Wpiv(coord_pivots.size(), subspace_basis.size());
    for (size_t i = 0; i < coord_pivots.size(); ++i)
        for (size_t j = 0; j < subspace_basis.size(); ++j)
            Wpiv.at(i, j) = subspace_basis[j][coord_pivots[i]];

    std::vector<std::vector<Scalar>> out;
    for (const auto& x : vectors) {
        if (x.size() != d) throw std::invalid_argument("project_to_quotient: dim mismatch");
        std::vector<Scalar> bx(coord_pivots.size());
        for (size_t i = 0; i < coord_pivots.size(); ++i) bx[i] = x[coord_pivots[i]];
        auto a = Wpiv.solve(bx);
        if (!a) throw std::logic_error("project_to_quotient: pivot solve failed");
        std::vector<Scalar> r = x;
        for (size_t j = 0; j < subspace_basis.size(); ++j)
            for (size_t i = 0; i < d; ++i) r[i] -= (*a)[j] * subspace_basis[j][i];
        std::vector<Scalar> compact;
        for (size_t i = 0; i < d; ++i)
            if (!is_pivot[i]) compact.push_back(r[i]);
        out.push_back(std::move(compact));
    }
    return out;
}

size_t zrank(const std::vector<std::vector<Scalar>>& generators) {
    if (generators.empty()) return 0;
    std::set<long> tagset;
    for (const auto& g : generators)
        for (const auto& s : g)
            for (long t : s.tags()) tagset.insert(t);
    std::vector<long> keys{1};
    keys.insert(keys.end(), tagset.begin(), tagset.end());

    size_t d = generators[0].size();
    Mat flat(generators.size(), d * keys.size());
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = 0; j < d; ++j)
            for (const auto& [key, coeff] : generators[i][j].parts()) {
                size_t k = std::find(keys.begin(), keys.end(), key) - keys.begin();
                flat.at(i, j * keys.size() + k) = Scalar(coeff);
            }
    return flat.rank();
}

bool subgroup_is_discrete(const std::vector<std::vector<Scalar>>& generators,
                          const std::vector<std::vector<Scalar>>& quotient_subspace) {
    if (generators.empty()) return true;
    auto imgs = project_to_quotient(generators, quotient_subspace);
    if (imgs.empty() || imgs[0].empty()) return true;
    size_t span_dim = Mat::from_cols(imgs).rank();
    return zrank(imgs) == span_dim;
}

}  // namespace lk
