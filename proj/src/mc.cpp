#include "lk/mc.hpp"

#include <stdexcept>

namespace lk {

const PolyForm& MCElement::form(int handle) const {
    static const PolyForm empty;
    auto it = forms.find(handle);
    return it == forms.end() ? empty : it->second;
}

bool MCElement::operator==(const MCElement& o) const {
    if (m != o.m) return false;
    int n = (int)L->basis().size();
    for (int h = 0; h < n; ++h)
        if (!(form(h) == o.form(h))) return false;
    return true;
}

MCElement mc_zero(const LInftyAlgebra& L, int m) {
    MCElement x;
    x.L = &L;
    x.m = m;
    return x;
}

PolyForm mc_eval(const MCElement& x, const CEPoly& p) {
    PolyForm out(x.m);
    for (auto& [mono, c] : p) {
        PolyForm prod = PolyForm::constant(x.m, c);
        for (int h : mono) {
            const PolyForm& f = x.form(h);
            if (f.is_zero()) {
                prod = PolyForm::zero(x.m);
                break;
            }
            prod = wedge(prod, f);
        }
        out += prod;
    }
    return out;
}

MCValidation validate_mc(const CEAlgebra& ce, const MCElement& x) {
    MCValidation v;
    for (int h = 0; h < ce.generators(); ++h) {
        const PolyForm& f = x.form(h);
        int deg = 0;
        if (!f.homogeneous(&deg) || (!f.is_zero() && deg != ce.ce_degree[h])) {
            v.ok = false;
            v.generator = h;
            v.error = "degree mismatch for generator " + ce.generator_name(h);
            return v;
        }
    }
    for (int h = 0; h < ce.generators(); ++h) {
        PolyForm res = d(x.form(h)) - mc_eval(x, ce.delta[h]);
        if (!res.is_zero()) {
            v.ok = false;
            v.generator = h;
            v.residual = std::move(res);
            return v;
        }
    }
    return v;
}

MCElement mc_pullback(const MCElement& x, const AffineMap& phi, int target_m) {
    MCElement y;
    y.L = x.L;
    y.m = target_m;
    for (auto& [h, f] : x.forms) {
        PolyForm g = pullback(f, phi);
        if (!g.is_zero()) y.forms[h] = std::move(g);
    }
    return y;
}

MCElement mc_face(const MCElement& x, int i) {
    if (i < 0 || i > x.m) throw std::invalid_argument("mc_face: index out of range");
    return mc_pullback(x, AffineMap::face(i, x.m), x.m - 1);
}

MCElement mc_degeneracy(const MCElement& x, int i) {
    if (i < 0 || i > x.m) throw std::invalid_argument("mc_degeneracy: index out of range");
    return mc_pullback(x, AffineMap::degeneracy(i, x.m), x.m + 1);
}

void MCHorn::validate(const CEAlgebra& ce) const {
    for (int i = 0; i <= m; ++i) {
        if (i == j) {
            if (facets.count(i)) throw std::invalid_argument("MCHorn: facet j present");
            continue;
        }
        auto it = facets.find(i);
        if (it == facets.end()) throw std::invalid_argument("MCHorn: missing facet");
        if (it->second.m != m - 1)
            throw std::invalid_argument("MCHorn: facet dimension mismatch");
        auto val = validate_mc(ce, it->second);
        if (!val.ok)
            throw std::invalid_argument("MCHorn: facet " + std::to_string(i) +
                                        " fails the flatness system");
    }
    for (int i = 0; i <= m; ++i)
        for (int k = i + 1; k <= m; ++k) {
            if (i == j || k == j) continue;
            if (!(mc_face(facets.at(k), i) == mc_face(facets.at(i), k - 1)))
                throw std::invalid_argument("MCHorn: facets disagree on intersection");
        }
}

MCHorn MCHorn::restriction(const MCElement& x, int j) {
    MCHorn h;
    h.L = x.L;
    h.m = x.m;
    h.j = j;
    for (int i = 0; i <= x.m; ++i)
        if (i != j) h.facets[i] = mc_face(x, i);
    return h;
}

bool MCHorn::operator==(const MCHorn& o) const {
    if (m != o.m || j != o.j) return false;
    for (auto& [i, f] : facets) {
        auto it = o.facets.find(i);
        if (it == o.facets.end() || !(f == it->second)) return false;
    }
    return o.facets.size() == facets.size();
}

}  // namespace lk
