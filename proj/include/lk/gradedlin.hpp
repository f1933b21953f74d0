#ifndef LK_GRADEDLIN_HPP
#define LK_GRADEDLIN_HPP

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "lk/matrix.hpp"
#include "lk/scalar.hpp"

namespace lk {

/// Finite-dimensional graded vector space, non-negatively graded.
struct GradedVectorSpace {
    std::map<int, int> dims;  // degree -> dimension (only nonzero entries)

    int dim(int deg) const {
        auto it = dims.find(deg);
        return it == dims.end() ? 0 : it->second;
    }
    int top_degree() const { return dims.empty() ? -1 : dims.rbegin()->first; }
    int total_dim() const;
};

/// Integer matrix, row-major.
struct IntMat {
    size_t r = 0, c = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(size_t rows, size_t cols) : r(rows), c(cols), a(rows * cols) {}
    mpz_class& at(size_t i, size_t j) { return a[i * c + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a[i * c + j]; }
    static IntMat identity(size_t n);
    friend IntMat operator*(const IntMat& x, const IntMat& y);
    bool operator==(const IntMat& o) const { return r == o.r && c == o.c && a == o.a; }
    mpz_class det() const;  // Bareiss, for the unimodularity checks
};

/// Smith normal form:  U * M * V = D  with U, V unimodular and D diagonal
/// with d1 | d2 | ... (nonnegative).  Total on all integer matrices.
struct SNFResult {
    IntMat U, D, V;
    std::vector<mpz_class> invariant_factors() const;  // nonzero diagonal
};
SNFResult smith_normal_form(const IntMat& M);

/// Finitely generated abelian group:  Z^rank + Z/d1 + ... (d1 | d2 | ...).
struct FGAbGroup {
    int rank = 0;
    std::vector<long> torsion;  // in divisibility order, each >= 2

    bool operator==(const FGAbGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    std::string str() const;
};

/// Homology of  V_in --d_in--> V --d_out--> V_out  at the middle term.
/// Throws std::invalid_argument unless d_out * d_in = 0.
struct TwoTermHomology {
    size_t dimension;
    std::vector<std::vector<Scalar>> basis;  // representatives in V-coordinates
};
TwoTermHomology two_term_homology(const Mat& d_in, const Mat& d_out);

/// Is the subgroup of R^d / span_R(W) generated by the images of `generators`
/// discrete?  Decided exactly: the Z-rank of the generated group (rank of the
/// coefficient matrix flattened over a Q-basis of the scalar field) must equal
/// the dimension of its R-span (rank over the field).
bool subgroup_is_discrete(const std::vector<std::vector<Scalar>>& generators,
                          const std::vector<std::vector<Scalar>>& quotient_subspace);

/// Images of vectors in R^d / span(W), expressed in the complement coordinates
/// (non-pivot coordinates of W under leftmost-pivot reduction).
std::vector<std::vector<Scalar>> project_to_quotient(
    const std::vector<std::vector<Scalar>>& vectors,
    const std::vector<std::vector<Scalar>>& subspace_basis);

/// Z-rank of the subgroup of R^d generated by the given vectors: the rank of
/// the matrix obtained by flattening each scalar entry over the Q-basis
/// {1, sqrt(d1), ...} of the tags present.
size_t zrank(const std::vector<std::vector<Scalar>>& generators);

}  // namespace lk

#endif
