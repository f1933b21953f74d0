#ifndef LK_TWO_GROUP_HPP
#define LK_TWO_GROUP_HPP

#include "lk/simpset.hpp"

namespace lk {

/// Coherent 2-group with strict units: a finite groupoid with a monoidal
/// product and a pentagon-coherent associator alpha(g,h,k): g(hk) -> (gh)k.
struct CoherentTwoGroup {
    int nobj = 0, unit_obj = 0;
    // groupoid of arrows
    std::vector<int> src, tgt;           // per arrow
    std::vector<int> id_arrow;           // per object
    std::vector<std::vector<int>> comp;  // comp[b][a] = b after a; -1 if not composable
    // monoidal structure
    std::vector<std::vector<int>> mul_obj;
    std::vector<std::vector<int>> mul_arr;
    std::vector<std::vector<std::vector<int>>> assoc;  // alpha[g][h][k]

    int narr() const { return (int)src.size(); }
    /// Groupoid/functor/naturality/pentagon checks; throws std::invalid_argument
    /// (pentagon failures name the offending quadruple).
    void validate() const;
    bool pentagon_holds() const;

    /// Connected-component group of objects and automorphism group of the
    /// unit object (assumes a skeletal presentation: arrows only g -> g).
    FiniteGroup pi0() const;
    FiniteGroup pi1() const;
    bool skeletal() const;
};

/// Strict 2-group of a crossed module (d: H -> G, action of G on H):
/// objects G, arrows (g, h): g -> d(h) g.
CoherentTwoGroup crossed_module_2group(const FiniteGroup& G, const FiniteGroup& H,
                                       const std::vector<int>& d,
                                       const std::vector<std::vector<int>>& action);

/// Skeletal 2-group with objects K, central arrow group A at every object,
/// and associator the 3-cochain omega: K^3 -> A (pentagon <=> cocycle).
CoherentTwoGroup cocycle_2group(const FiniteGroup& K, const FiniteGroup& A,
                                const std::vector<std::vector<std::vector<int>>>& omega);

/// The simplicial nerve: m-simplices are edge labels g_ij with coherence
/// arrows h_ijk: g_ij g_jk -> g_ik such that the associator square commutes
/// on every 3-face.  Reduced, Kan, with unique fillers above dimension 2.
FinSimplicialSet nerve_2group(const CoherentTwoGroup& T, int up_to);

/// Inverse construction for a reduced Kan complex with unique fillers above
/// dimension 2: objects X_1, arrows {x in X_2 | d_2 x = *}, composition by
/// the unique Lambda[3,1] fillers, products by lexicographically minimal
/// Lambda[2,1] fillers, associator by a pair of unique 3-fillers.
CoherentTwoGroup two_group_from_kan(const FinSimplicialSet& X);

/// Equivalence of skeletal 2-groups with central arrow groups: pi0 and pi1
/// isomorphic (searched over small-group isomorphisms) and the associator
/// 3-cocycles cohomologous.
bool two_groups_equivalent(const CoherentTwoGroup& A, const CoherentTwoGroup& B);

}  // namespace lk

#endif
