#ifndef LK_POLYFORM_HPP
#define LK_POLYFORM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lk/scalar.hpp"

namespace lk {

/// Affine map between barycentric simplices, stored as the affine expression
/// of each target coordinate t_i (i = 1..tdim) in the source coordinates
/// u_1..u_sdim:  t_i = c[i][0] + sum_j c[i][j] * u_j.
struct AffineMap {
    int sdim = 0, tdim = 0;
    std::vector<std::vector<Scalar>> coeff;  // tdim rows, each of length sdim+1

    static AffineMap identity(int m);
    /// images[j] = barycentric coordinates (t_1..t_tdim) of the image of
    /// source vertex j, for j = 0..sdim.
    static AffineMap from_vertex_images(int sdim, int tdim,
                                        const std::vector<std::vector<Scalar>>& images);
    /// Simplicial map sending source vertex j to target vertex v[j].
    static AffineMap from_vertex_map(int sdim, int tdim, const std::vector<int>& v);
    /// Coface d^i realization: Delta^{m-1} -> Delta^m onto the i-th facet.
    static AffineMap face(int i, int m);
    /// Codegeneracy s^i realization: Delta^{m+1} -> Delta^m.
    static AffineMap degeneracy(int i, int m);
    /// The horn projection p_I: Delta^m -> Delta^m collapsing the vertices in
    /// I to the vertex j (which must lie in I).
    static AffineMap collapse(int m, const std::vector<int>& I, int j);

    AffineMap compose(const AffineMap& inner) const;  // this ∘ inner
    bool operator==(const AffineMap& o) const {
        return sdim == o.sdim && tdim == o.tdim && coeff == o.coeff;
    }
};

/// Polynomial differential form on the m-simplex, in the interior coordinates
/// t_1..t_m (t_0 = 1 - sum t_i eliminated).  Terms are monomials
/// c * t^exps * dt_S with S a strictly increasing subset of {0..m-1}
/// (0-based; variable k is t_{k+1}).  Inhomogeneous combinations are allowed;
/// operations that require a pure degree check it.
class PolyForm {
public:
    struct Key {
        std::vector<int> exps;
        std::vector<int> dts;
        bool operator<(const Key& o) const {
            if (dts != o.dts) return dts < o.dts;
            return exps < o.exps;
        }
        bool operator==(const Key& o) const { return exps == o.exps && dts == o.dts; }
    };

    PolyForm() = default;
    explicit PolyForm(int m) : m_(m) {}
    static PolyForm zero(int m) { return PolyForm(m); }
    static PolyForm constant(int m, const Scalar& c);
    static PolyForm coordinate(int m, int var);  // t_{var+1}
    static PolyForm differential(int m, int var);  // dt_{var+1}
    static PolyForm monomial(int m, std::vector<int> exps, std::vector<int> dts,
                             const Scalar& c);

    int vars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    /// Form degree if homogeneous (zero form reports `uniform` = true, deg 0).
    bool homogeneous(int* deg = nullptr) const;
    int degree() const;  // throws on inhomogeneous input
    size_t term_count() const { return terms_.size(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    PolyForm operator-() const;
    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    PolyForm scaled(const Scalar& c) const;
    bool operator==(const PolyForm& o) const;

    void add_term(std::vector<int> exps, std::vector<int> dts, const Scalar& c);

    std::string str() const;

    /// Evaluate a 0-form at a rational point (t_1..t_m).
    Scalar eval0(const std::vector<Scalar>& t) const;

private:
    int m_ = 0;
    std::map<Key, Scalar> terms_;
    friend PolyForm wedge(const PolyForm&, const PolyForm&);
    friend PolyForm d(const PolyForm&);
    friend PolyForm pullback(const PolyForm&, const AffineMap&);
    friend PolyForm pullback_s(const PolyForm&, const AffineMap&, const AffineMap&);
    friend PolyForm contract(const PolyForm&, const std::vector<PolyForm>&);
    friend PolyForm s_integral(const PolyForm&);
    friend PolyForm antiderivative(const PolyForm&, int var);
    friend PolyForm compose0(const PolyForm&, const std::vector<PolyForm>&);
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
inline PolyForm operator*(const PolyForm& a, const PolyForm& b) { return wedge(a, b); }

/// Exterior differential.
PolyForm d(const PolyForm& w);

/// Pullback along an affine map (w lives on the target simplex).
PolyForm pullback(const PolyForm& w, const AffineMap& phi);

/// Pullback along the affine family  A0 + s*A1  (self maps of Delta^m); the
/// result is a form on m+1 variables whose last variable is the parameter s
/// (no ds component is produced).
PolyForm pullback_s(const PolyForm& w, const AffineMap& A0, const AffineMap& A1);

/// Interior product with a polynomial vector field given by its components
/// (0-forms, one per coordinate).
PolyForm contract(const PolyForm& w, const std::vector<PolyForm>& v);

/// Integrate out the final variable over [0,1] (it must not appear in any dt).
PolyForm s_integral(const PolyForm& w);

/// Antiderivative in `var` vanishing at var = 0 (0-coefficient in dt allowed
/// so long as `var` itself carries no dt).
PolyForm antiderivative(const PolyForm& w, int var);

/// Substitute variables of a 0-form: gs[i] replaces variable i; all gs must be
/// 0-forms on a common variable count, which the result uses.
PolyForm compose0(const PolyForm& f, const std::vector<PolyForm>& gs);

/// Exact integral of a top-degree form over the simplex; throws
/// std::invalid_argument if any term has degree != m.
Scalar simplex_period(const PolyForm& w);

/// Restriction to the i-th facet (pullback along AffineMap::face).
PolyForm restrict_to_facet(const PolyForm& w, int i);

/// The vector field v_I with (v_I)_x = x - p_I(x), as component 0-forms.
std::vector<PolyForm> collapse_vector_field(int m, const std::vector<int>& I, int j);

/// A family of forms on the horn Lambda[m,j]: one form per facet index != j.
struct FormHorn {
    int m = 0, j = 0;
    std::map<int, PolyForm> facets;  // facet index -> form on Delta^{m-1}

    /// All facets present, forms on Delta^{m-1}, agreeing on intersections.
    void validate() const;  // throws std::invalid_argument
    /// Restriction of a global form on Delta^m to this horn's facets.
    static FormHorn restriction(const PolyForm& w, int m, int j);
    bool operator==(const FormHorn& o) const;
};

struct HornExtensionPin {
    FormHorn horn0;
    PolyForm filler0;
};

/// Extends a horn family to the simplex.
///
/// Without `beta`: the inclusion-exclusion extension (closedness of the family
/// is preserved).  With `beta` (a closed (deg+1)-form on Delta^m satisfying
/// d alpha = beta on each facet): the flow-transport extension, whose output
/// also satisfies d(result) = beta.  With `pin`, the map becomes a section
/// through (pin.horn0 -> pin.filler0).
PolyForm horn_extend_form(const FormHorn& alpha, const std::optional<PolyForm>& beta,
                          const std::optional<HornExtensionPin>& pin);

}  // namespace lk

#endif
