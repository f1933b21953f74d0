#include "lk/homot.hpp"

#include <stdexcept>

namespace lk {

std::string DiffeoGroupPres::str() const {
    if (is_group_token) return "G";
    std::string s;
    if (vector_dim > 0) {
        s = "R^" + std::to_string(vector_dim);
        if (!subgroup.empty()) {
            s += "/<";
            for (size_t i = 0; i < subgroup.size(); ++i) {
                if (i) s += ", ";
                s += "(";
                for (size_t j = 0; j < subgroup[i].size(); ++j) {
                    if (j) s += ",";
                    s += subgroup[i][j].str();
                }
                s += ")";
            }
            s += ">";
        }
    }
    if (!discrete.is_trivial()) {
        if (!s.empty()) s += " extended by ";
        s += discrete.str();
    }
    if (s.empty()) s = "0";
    return s;
}

namespace {

int hdim(const std::map<int, int>& homology, int deg) {
    auto it = homology.find(deg);
    return it == homology.end() ? 0 : it->second;
}

}  // namespace

FGAbGroup les_discrete_part(const std::map<int, int>& homology, const BoundaryData& B,
                            int n) {
    FGAbGroup png = B.pi(n);
    const Mat* bnd = B.bnd(n - 1);
    if (!bnd || png.rank == 0) {
        // zero map: the kernel is everything
        return png;
    }
    if ((int)bnd->cols() != png.rank)
        throw std::invalid_argument("les_assemble: boundary domain mismatch at n = " +
                                    std::to_string(n - 1));
    if ((int)bnd->rows() != hdim(homology, n - 2))
        throw std::invalid_argument("les_assemble: boundary target mismatch at n = " +
                                    std::to_string(n - 1));
    // kernel of the rational(ized) matrix restricted to the integer lattice:
    // the lattice kernel is saturated, so its rank is the Q-nullity
    size_t nullity = png.rank - bnd->rank();
    FGAbGroup out;
    out.rank = (int)nullity;
    out.torsion = png.torsion;  // torsion maps to a vector space, hence to 0
    return out;
}

std::vector<DiffeoGroupPres> les_assemble(const std::map<int, int>& homology,
                                          const BoundaryData& B, int up_to) {
    std::vector<DiffeoGroupPres> out;
    // shape checks on all supplied boundaries
    for (auto& [n, M] : B.boundary) {
        if ((int)M.rows() != hdim(homology, n - 1))
            throw std::invalid_argument("les_assemble: d_" + std::to_string(n) +
                                        " target dimension mismatch");
        if ((int)M.cols() != B.pi(n + 1).rank)
            throw std::invalid_argument("les_assemble: d_" + std::to_string(n) +
                                        " domain rank mismatch");
    }
    for (int n = 1; n <= up_to; ++n) {
        DiffeoGroupPres p;
        p.degree = n;
        if (n == 1) {
            p.is_group_token = true;
            out.push_back(std::move(p));
            continue;
        }
        p.vector_dim = hdim(homology, n - 1);
        if (const Mat* bnd = B.bnd(n)) {
            for (size_t j = 0; j < bnd->cols(); ++j) {
                auto c = bnd->col(j);
                if (!is_zero_vec(c)) p.subgroup.push_back(c);
            }
        }
        p.discrete = les_discrete_part(homology, B, n);
        out.push_back(std::move(p));
    }
    return out;
}

bool tvf_integrability(const std::map<int, int>& homology, const BoundaryData& B,
                       int n) {
    const Mat* bnd = B.bnd(n);
    if (!bnd) return true;  // zero boundary has discrete (trivial) image
    if ((int)bnd->rows() != hdim(homology, n - 1))
        throw std::invalid_argument("tvf_integrability: boundary target mismatch");
    std::vector<std::vector<Scalar>> gens;
    for (size_t j = 0; j < bnd->cols(); ++j) {
        auto c = bnd->col(j);
        if (!is_zero_vec(c)) gens.push_back(c);
    }
    return subgroup_is_discrete(gens, {});
}

BoundaryData string_boundary_data() {
    BoundaryData B;
    B.pi_g[2] = FGAbGroup{0, {}};
    B.pi_g[3] = FGAbGroup{1, {}};
    Mat d2(1, 1);
    d2.at(0, 0) = Scalar(1);
    B.boundary[2] = std::move(d2);
    return B;
}

BoundaryData end_boundary_data(const Scalar& p, const Scalar& q) {
    BoundaryData B;
    B.pi_g[2] = FGAbGroup{0, {}};
    B.pi_g[3] = FGAbGroup{2, {}};  // pi_3(G x G) = Z^2
    Mat d2(1, 2);
    d2.at(0, 0) = q;
    d2.at(0, 1) = -p;
    B.boundary[2] = std::move(d2);
    return B;
}

}  // namespace lk
