#ifndef LK_LINF_HPP
#define LK_LINF_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lk/gradedlin.hpp"
#include "lk/matrix.hpp"
#include "lk/scalar.hpp"

namespace lk {

/// Basis element of the underlying graded vector space: (degree, index).
using ElemId = std::pair<int, int>;

/// Finite-dimensional L-infinity algebra with sparse k-ary brackets.
///
/// The k-ary bracket is graded antisymmetric (Koszul rule) and has degree
/// k - 2.  Structure constants are stored on canonical input tuples: sorted
/// ascending by (degree, index), repeated entries permitted only in odd
/// degree (even-degree repeats vanish in the graded exterior power).
class LInftyAlgebra {
public:
    GradedVectorSpace space;
    // arity -> canonical input tuple -> output coefficients (in the forced
    // output degree sum(deg) + arity - 2)
    std::map<int, std::map<std::vector<ElemId>, std::vector<Scalar>>> brackets;

    /// Structural validation; throws std::invalid_argument naming the
    /// offending tuple.
    void validate() const;

    int dim(int deg) const { return space.dim(deg); }
    int top_degree() const { return space.top_degree(); }
    int max_arity() const { return brackets.empty() ? 0 : brackets.rbegin()->first; }

    /// All basis elements, ordered by (degree, index); the position is the
    /// generator handle used by the Chevalley-Eilenberg complex.
    const std::vector<ElemId>& basis() const;
    int handle_of(ElemId e) const;

    /// Bracket on an arbitrary ordered tuple of basis elements (Koszul
    /// antisymmetrization of the canonical table); empty optional = zero.
    std::optional<std::pair<int, std::vector<Scalar>>> bracket_basis(
        const std::vector<ElemId>& tuple) const;

    /// Multilinear bracket on coordinate vectors (degree, coords).
    std::pair<int, std::vector<Scalar>> bracket_linear(
        const std::vector<std::pair<int, std::vector<Scalar>>>& args) const;

    /// The 1-ary component as a matrix L_deg -> L_{deg-1}.
    Mat boundary_matrix(int deg) const;

private:
    mutable std::vector<ElemId> basis_cache_;
    mutable std::map<ElemId, int> handle_cache_;
    void ensure_cache() const;
};

/// Monomial in the CE generators: sorted generator handles (graded
/// commutative; odd generators never repeat).
using Monomial = std::vector<int>;
/// Polynomial in the CE generators.
using CEPoly = std::map<Monomial, Scalar>;

CEPoly ce_add(CEPoly a, const CEPoly& b);
CEPoly ce_scale(const Scalar& c, CEPoly p);
/// Normalizes a product of two monomials (graded-commutative sort); first
/// element of the pair is the Koszul sign, 0 meaning the product vanishes.
std::pair<int, Monomial> monomial_product(const Monomial& a, const Monomial& b,
                                          const std::vector<int>& parity);
CEPoly ce_mul(const CEPoly& a, const CEPoly& b, const std::vector<int>& parity);

/// The Chevalley-Eilenberg complex of L: the free graded-commutative algebra
/// on the duals of the basis elements (the dual of degree-d sits in CE degree
/// d+1), with differential assembled from the bracket transposes.  The sign
/// convention is fixed so that the induced flatness system on a Lie algebra
/// reads d(alpha) = [alpha ^ alpha]/2 and on a string Lie 2-algebra contains
/// d(beta) = [alpha,alpha,alpha]/6; a conformance test freezes both.
class CEAlgebra {
public:
    const LInftyAlgebra* L = nullptr;
    std::vector<CEPoly> delta;   // per generator handle
    std::vector<int> ce_degree;  // per generator handle (= L-degree + 1)
    std::vector<int> parity;     // ce_degree mod 2

    int generators() const { return (int)delta.size(); }
    /// Extends delta as a degree-1 derivation.
    CEPoly delta_of(const CEPoly& p) const;
    /// CE degree of a monomial.
    int degree_of(const Monomial& mono) const;
    std::string generator_name(int handle) const;
    std::string poly_str(const CEPoly& p) const;
};

CEAlgebra ce_differential(const LInftyAlgebra& L);

struct SquareZeroReport {
    bool ok = true;
    struct Violation {
        int generator;
        Monomial monomial;
        Scalar coefficient;
    };
    std::vector<Violation> violations;
};
SquareZeroReport ce_square_zero(const LInftyAlgebra& L);

/// Degree-wise linear map between graded vector spaces.
struct GradedLinearMap {
    std::map<int, Mat> blocks;  // source degree -> matrix (target dim x source dim)
    const Mat* block(int deg) const {
        auto it = blocks.find(deg);
        return it == blocks.end() ? nullptr : &it->second;
    }
};

enum class TruncMode { LE, LT };  // tau_{<=n} and tau_{<n}

struct Truncation {
    LInftyAlgebra algebra;
    GradedLinearMap projection;        // from the source algebra
    std::map<int, Mat> section;        // degree-wise right inverse of projection
};

/// Postnikov truncation: LE keeps degrees < n and coker(d_{n+1}) in degree n;
/// LT keeps degrees < n and L_n/ker(d_n) (~ im d_n) in degree n.  Brackets
/// are inherited through lift/project; complements use leftmost pivots.
Truncation truncate_linf(const LInftyAlgebra& L, int n, TruncMode mode);

/// Induced map between two truncations of the same algebra (project o lift).
GradedLinearMap induced_truncation_map(const Truncation& from, const Truncation& to);

struct NilpotencyReport {
    bool nilpotent = false;
    int nilpotency_class = -1;  // valid when nilpotent
};
/// Lower central series of all brackets of arity >= 2.
NilpotencyReport is_nilpotent(const LInftyAlgebra& L);

/// Homology dimensions of (L, boundary) per degree.
std::map<int, int> homology_dims(const LInftyAlgebra& L);

// -- constructors -----------------------------------------------------------

LInftyAlgebra abelian_algebra(const std::map<int, int>& dims);
/// L_n ~ L_{n-1}, the 1-ary bracket an isomorphism (identity matrix).
LInftyAlgebra contractible_algebra(int n, int dim);
LInftyAlgebra su2_algebra();
LInftyAlgebra heisenberg_algebra();
/// String Lie 2-algebra of a simple Lie algebra given by structure constants
/// c[i][j] = coordinates of [e_i, e_j] and an ad-invariant pairing (checked),
/// scaled by `pairing_scale`.
LInftyAlgebra string_lie_algebra(const std::vector<std::vector<std::vector<Scalar>>>& sc,
                                 const std::vector<std::vector<Scalar>>& pairing,
                                 const Scalar& pairing_scale);
LInftyAlgebra string_su2(const Scalar& pairing_scale = Scalar(1));
/// The quotient of str + str with L_1 = R^2/(p,q)R; p, q must be Q-linearly
/// independent (throws std::invalid_argument otherwise).
LInftyAlgebra end_example(const Scalar& p, const Scalar& q);

}  // namespace lk

#endif
