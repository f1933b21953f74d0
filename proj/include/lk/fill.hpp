#ifndef LK_FILL_HPP
#define LK_FILL_HPP

#include <optional>
#include <stdexcept>

#include "lk/gauge.hpp"
#include "lk/mc.hpp"

namespace lk {

/// Exact horn filling is restricted to nilpotent algebras; the analytic
/// (compact-group) route lives in the numeric string module.
class NonNilpotentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct MCPin {
    MCHorn horn;
    MCElement filler;
};

/// Constructive Kan filler for nilpotent L: builds the filler stage by stage
/// along the Postnikov tower of L (base gauge via inclusion-exclusion in log
/// coordinates, free stages via the projection-sum extension, homology stages
/// via gauge twist and the flow-transport solve).  The result restricts to
/// the horn exactly and satisfies the flatness system exactly.  With a pin,
/// the operation is a section through (pin.horn -> pin.filler).
MCElement fill_horn(const LInftyAlgebra& L, const MCHorn& horn,
                    const std::optional<MCPin>& pin = std::nullopt);

/// For L abelian concentrated in degree n-1 and x an MC element on Delta^n
/// with zero boundary faces: the vector of simplex periods, one per basis
/// element of L_{n-1}.  Two such elements are homotopic rel boundary iff
/// their classes agree.
std::vector<Scalar> period_class(const LInftyAlgebra& L, const MCElement& x);

struct AbelianHomotopy {
    std::optional<MCElement> witness;   // y with d0 y = x, d1 y = x', d_i y = 0
    std::vector<Scalar> obstruction;    // period difference when no witness
};

/// Homotopy classification in the abelian case: produces an explicit witness
/// on Delta^{n+1} when the periods agree (verified exactly), or reports the
/// Stokes obstruction when they differ.
AbelianHomotopy abelian_homotopy(const LInftyAlgebra& L, const MCElement& x,
                                 const MCElement& y);

}  // namespace lk

#endif
