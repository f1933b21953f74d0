#ifndef LK_JSON_IO_HPP
#define LK_JSON_IO_HPP

#include <memory>

#include "json.hpp"
#include "lk/fill.hpp"
#include "lk/homot.hpp"
#include "lk/linf.hpp"
#include "lk/mc.hpp"
#include "lk/polyform.hpp"
#include "lk/simpset.hpp"
#include "lk/two_group.hpp"

namespace lk {

using nlohmann::json;

/// Thrown on malformed documents; the CLI maps it to exit code 2.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const ScalarField& field);

json polyform_to_json(const PolyForm& f);
PolyForm polyform_from_json(const json& j, const ScalarField& field);

json linf_to_json(const LInftyAlgebra& L, const ScalarField& field);
/// Validates shapes and the declared scalar field on load.
std::pair<LInftyAlgebra, ScalarField> linf_from_json(const json& j);

json mc_to_json(const MCElement& x, const ScalarField& field);
/// The algebra is embedded in the document (key "algebra"); it is held
/// behind a stable pointer so the element's back-reference survives moves.
struct MCDocument {
    std::shared_ptr<LInftyAlgebra> algebra;
    ScalarField field;
    MCElement element;
};
MCDocument mc_from_json(const json& j);

json horn_to_json(const MCHorn& h, const ScalarField& field);
struct HornDocument {
    std::shared_ptr<LInftyAlgebra> algebra;
    ScalarField field;
    MCHorn horn;
};
HornDocument horn_from_json(const json& j);

json simpset_to_json(const FinSimplicialSet& X);
FinSimplicialSet simpset_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json two_group_to_json(const CoherentTwoGroup& T);
CoherentTwoGroup two_group_from_json(const json& j);

json boundary_to_json(const BoundaryData& B, const ScalarField& field);
BoundaryData boundary_from_json(const json& j);

json subcomplex_to_json(const SubComplex& S);
SubComplex subcomplex_from_json(const json& j);

}  // namespace lk

#endif
