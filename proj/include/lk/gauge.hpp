#ifndef LK_GAUGE_HPP
#define LK_GAUGE_HPP

#include <vector>

#include "lk/linf.hpp"
#include "lk/polyform.hpp"

namespace lk {

/// Value in a fixed degree block of an algebra, with polynomial-form
/// coefficients: component i is a PolyForm (all on the same variable count).
using VecPoly = std::vector<PolyForm>;

/// Bernoulli number B_k with the convention B_1 = +1/2 (the expansion of
/// x / (1 - e^{-x})).
mpq_class bernoulli_plus(int k);

/// Componentwise bracket of g-valued form vectors, for a Lie algebra g given
/// as a degree-0 LInftyAlgebra: [x, y]_k = sum c^k_{ij} x_i ^ y_j.
VecPoly g_bracket(const LInftyAlgebra& g, const VecPoly& x, const VecPoly& y);

/// The left logarithmic derivative exp(-u) d(exp u) =
/// sum_k (-1)^k/(k+1)! ad_u^k(du), a finite sum for nilpotent g.
VecPoly left_log_derivative(const LInftyAlgebra& g, const VecPoly& u);

/// The right logarithmic derivative d(exp u) exp(-u) =
/// sum_k 1/(k+1)! ad_u^k(du).  Forms in its image satisfy the flatness
/// equation d(theta) = [theta ^ theta]/2.
VecPoly right_log_derivative(const LInftyAlgebra& g, const VecPoly& u);

/// Polynomial gauge for a flat g-valued 1-form: solves
/// d(exp u) exp(-u) = alpha with u(base_vertex) = 0 by Picard iteration of
/// the parallel-transport integral along straight barycentric segments (so
/// in the abelian case u is the plain primitive of alpha).  The postcondition
/// is re-verified symbolically; throws std::domain_error if g fails to act
/// nilpotently and std::logic_error if verification fails.
VecPoly integrate_gauge(const LInftyAlgebra& g, const VecPoly& alpha, int m,
                        int base_vertex);

/// Matrix transport: solves dM = -M R with M(base_vertex) = Id for a flat
/// matrix of 1-forms (dR = R ^ R entrywise), by the same radial Picard
/// scheme.  Entries act nilpotently (products of >= class entries vanish).
std::vector<std::vector<PolyForm>> matrix_transport(
    const std::vector<std::vector<PolyForm>>& R, int m, int base_vertex);

/// Inverse of Id + N for a nilpotent polynomial matrix.
std::vector<std::vector<PolyForm>> unipotent_inverse(
    const std::vector<std::vector<PolyForm>>& M);

std::vector<std::vector<PolyForm>> matrix_mul(
    const std::vector<std::vector<PolyForm>>& A,
    const std::vector<std::vector<PolyForm>>& B);
VecPoly matrix_apply(const std::vector<std::vector<PolyForm>>& A, const VecPoly& v);

}  // namespace lk

#endif
