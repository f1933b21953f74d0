#ifndef LK_HOMOT_HPP
#define LK_HOMOT_HPP

#include <map>
#include <string>
#include <vector>

#include "lk/gradedlin.hpp"
#include "lk/linf.hpp"

namespace lk {

/// Finite-dimensional diffeological group presented as the extension
/// 0 -> R^d / <C> -> pi -> K -> 0 produced by the long exact sequence.
struct DiffeoGroupPres {
    int degree = 0;
    int vector_dim = 0;                       // d = dim H_{n-1}(L) / (nothing yet)
    std::vector<std::vector<Scalar>> subgroup; // generators C inside R^d
    FGAbGroup discrete;                        // K
    bool is_group_token = false;               // degree 1: "the group G itself"

    /// Lie algebra dimension of the universal cover.
    int lie_algebra_dim() const { return vector_dim; }
    bool vector_part_is_hausdorff() const {
        return subgroup_is_discrete(subgroup, {});
    }
    std::string str() const;
};

/// User-supplied homotopy of the integrating group G plus the boundary maps
/// d_n : pi_{n+1}(G) -> H_{n-1}(L).
struct BoundaryData {
    std::map<int, FGAbGroup> pi_g;  // n >= 2: pi_n(G); pi_1 is the token G
    // boundary[n] = matrix of d_n over the scalar field, shape
    // dim H_{n-1}(L) x rank(pi_{n+1}(G)); absent = zero map
    std::map<int, Mat> boundary;
    std::string group_token = "G";

    FGAbGroup pi(int n) const {
        auto it = pi_g.find(n);
        return it == pi_g.end() ? FGAbGroup{} : it->second;
    }
    const Mat* bnd(int n) const {
        auto it = boundary.find(n);
        return it == boundary.end() ? nullptr : &it->second;
    }
};

/// Assembles pi_n^spl of the integrating object for 1 <= n <= up_to from the
/// homology of L and the boundary data: degree 1 is the group token, degree
/// n >= 2 is the extension of K = ker(d_{n-1}) by H_{n-1}(L)/im(d_n).
/// Throws std::invalid_argument when the supplied maps cannot sit in an
/// exact sequence (shape mismatches, torsion not annihilated).
std::vector<DiffeoGroupPres> les_assemble(const std::map<int, int>& homology,
                                          const BoundaryData& B, int up_to);

/// Kernel of d_{n-1} : pi_n(G) -> H_{n-2}(L) as an abstract f.g. group.
FGAbGroup les_discrete_part(const std::map<int, int>& homology, const BoundaryData& B,
                            int n);

/// The integrability criterion: the image of d_n in H_{n-1}(L) is discrete.
bool tvf_integrability(const std::map<int, int>& homology, const BoundaryData& B, int n);

/// Boundary data of the string algebra computed from its Cartan generator:
/// pi_2(G) = 0, pi_3(G) = Z, d_2 = the inclusion Z -> R = H_1(str).
BoundaryData string_boundary_data();
/// Boundary data of the eND quotient: pi_3(G x G) = Z^2 maps to
/// H_1 = R^2/(p,q)R through the functional (q, -p).
BoundaryData end_boundary_data(const Scalar& p, const Scalar& q);

}  // namespace lk

#endif
