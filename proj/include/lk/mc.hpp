#ifndef LK_MC_HPP
#define LK_MC_HPP

#include <map>
#include <optional>

#include "lk/linf.hpp"
#include "lk/polyform.hpp"

namespace lk {

/// An m-simplex of the integrating simplicial object: one polynomial form per
/// CE generator (a degree-d basis dual carries a (d+1)-form), subject to the
/// flatness system d(phi(g)) = phi(delta g).
struct MCElement {
    const LInftyAlgebra* L = nullptr;
    int m = 0;
    std::map<int, PolyForm> forms;  // generator handle -> form

    const PolyForm& form(int handle) const;
    bool operator==(const MCElement& o) const;
};

MCElement mc_zero(const LInftyAlgebra& L, int m);

/// phi(p) for a CE polynomial p: algebra map determined by the assignment.
PolyForm mc_eval(const MCElement& x, const CEPoly& p);

struct MCValidation {
    bool ok = true;
    int generator = -1;      // first failing generator handle
    PolyForm residual;       // d(phi(g)) - phi(delta g)
    std::string error;       // set on degree mismatch
};
MCValidation validate_mc(const CEAlgebra& ce, const MCElement& x);

/// Pullback along an affine simplex map (the contravariant action).
MCElement mc_pullback(const MCElement& x, const AffineMap& phi, int target_m);
MCElement mc_face(const MCElement& x, int i);
MCElement mc_degeneracy(const MCElement& x, int i);

/// A horn of MC elements: one facet element per index != j.
struct MCHorn {
    const LInftyAlgebra* L = nullptr;
    int m = 0, j = 0;
    std::map<int, MCElement> facets;

    /// facet presence, validity, and pairwise compatibility (exact).
    void validate(const CEAlgebra& ce) const;
    static MCHorn restriction(const MCElement& x, int j);
    bool operator==(const MCHorn& o) const;
};

}  // namespace lk

#endif
