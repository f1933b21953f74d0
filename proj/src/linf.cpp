#include "lk/linf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lk {

namespace {

std::string tuple_str(const std::vector<ElemId>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += "[" + std::to_string(t[i].first) + ":" + std::to_string(t[i].second) + "]";
    }
    return s + ")";
}

mpq_class factorial(long n) {
    mpz_class f(1);
    for (long i = 2; i <= n; ++i) f *= i;
    return mpq_class(f);
}

// Sorts a tuple of graded-exterior inputs; returns (sign, canonical) with
// sign 0 when the tuple dies (repeated even-degree entry).  Swapping
// neighbours of degrees a, b contributes -(-1)^{ab}: no sign when both are
// odd, a flip otherwise.
std::pair<int, std::vector<ElemId>> exterior_sort(std::vector<ElemId> t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i)
        for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            bool both_odd = (t[j - 1].first & 1) && (t[j].first & 1);
            if (!both_odd) sign = -sign;
            std::swap(t[j], t[j - 1]);
        }
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1] && (t[i].first & 1) == 0) return {0, {}};
    return {sign, t};
}

}  // namespace

void LInftyAlgebra::validate() const {
    for (auto& [deg, n] : space.dims) {
        if (deg < 0) throw std::invalid_argument("LInftyAlgebra: negative degree");
        if (n < 0) throw std::invalid_argument("LInftyAlgebra: negative dimension");
    }
    for (auto& [k, table] : brackets) {
        if (k < 1) throw std::invalid_argument("LInftyAlgebra: arity must be >= 1");
        for (auto& [tuple, out] : table) {
            if ((int)tuple.size() != k)
                throw std::invalid_argument("LInftyAlgebra: tuple arity mismatch at " +
                                            tuple_str(tuple));
            int total = 0;
            for (auto& e : tuple) {
                if (e.second < 0 || e.second >= dim(e.first))
                    throw std::invalid_argument("LInftyAlgebra: index out of range at " +
                                                tuple_str(tuple));
                total += e.first;
            }
            if (!std::is_sorted(tuple.begin(), tuple.end()))
                throw std::invalid_argument("LInftyAlgebra: non-canonical tuple " +
                                            tuple_str(tuple));
            for (size_t i = 1; i < tuple.size(); ++i)
                if (tuple[i] == tuple[i - 1] && (tuple[i].first & 1) == 0)
                    throw std::invalid_argument(
                        "LInftyAlgebra: repeated even-degree input at " + tuple_str(tuple));
            int outdeg = total + k - 2;
            bool zero = true;
            for (auto& c : out)
                if (!c.is_zero()) zero = false;
            if (zero) continue;
            if (outdeg < 0 || dim(outdeg) == 0)
                throw std::invalid_argument("LInftyAlgebra: output in empty degree at " +
                                            tuple_str(tuple));
            if ((int)out.size() != dim(outdeg))
                throw std::invalid_argument("LInftyAlgebra: output size mismatch at " +
                                            tuple_str(tuple));
        }
    }
}

void LInftyAlgebra::ensure_cache() const {
    if (!basis_cache_.empty() || space.total_dim() == 0) return;
    for (auto& [deg, n] : space.dims)
        for (int i = 0; i < n; ++i) basis_cache_.push_back({deg, i});
    std::sort(basis_cache_.begin(), basis_cache_.end());
    for (size_t h = 0; h < basis_cache_.size(); ++h)
        handle_cache_[basis_cache_[h]] = (int)h;
}

const std::vector<ElemId>& LInftyAlgebra::basis() const {
    ensure_cache();
    return basis_cache_;
}

int LInftyAlgebra::handle_of(ElemId e) const {
    ensure_cache();
    auto it = handle_cache_.find(e);
    if (it == handle_cache_.end()) throw std::invalid_argument("LInftyAlgebra: unknown element");
    return it->second;
}

std::optional<std::pair<int, std::vector<Scalar>>> LInftyAlgebra::bracket_basis(
    const std::vector<ElemId>& tuple) const {
    auto it = brackets.find((int)tuple.size());
    if (it == brackets.end()) return std::nullopt;
    auto [sign, canon] = exterior_sort(tuple);
    if (sign == 0) return std::nullopt;
    auto jt = it->second.find(canon);
    if (jt == it->second.end()) return std::nullopt;
    int total = 0;
    for (auto& e : tuple) total += e.first;
    int outdeg = total + (int)tuple.size() - 2;
    std::vector<Scalar> out = jt->second;
    if (sign < 0)
        for (auto& c : out) c = -c;
    return std::make_pair(outdeg, std::move(out));
}

std::pair<int, std::vector<Scalar>> LInftyAlgebra::bracket_linear(
    const std::vector<std::pair<int, std::vector<Scalar>>>& args) const {
    int total = 0;
    for (auto& [deg, v] : args) total += deg;
    int outdeg = total + (int)args.size() - 2;
    std::vector<Scalar> out(std::max(0, dim(outdeg)));
    // multilinear expansion over basis tuples
    std::vector<int> idx(args.size(), 0);
    if (args.empty()) return {outdeg, out};
    for (auto& [deg, v] : args)
        if (v.empty()) return {outdeg, out};
    while (true) {
        Scalar coeff(1);
        std::vector<ElemId> tuple;
        for (size_t i = 0; i < args.size(); ++i) {
            coeff *= args[i].second[idx[i]];
            tuple.push_back({args[i].first, idx[i]});
        }
        if (!coeff.is_zero()) {
            auto val = bracket_basis(tuple);
            if (val)
                for (size_t b = 0; b < val->second.size(); ++b)
                    out[b] += coeff * val->second[b];
        }
        size_t k = 0;
        while (k < idx.size() && idx[k] + 1 == (int)args[k].second.size()) idx[k++] = 0;
        if (k == idx.size()) break;
        ++idx[k];
    }
    return {outdeg, out};
}

Mat LInftyAlgebra::boundary_matrix(int deg) const {
    int rows = std::max(0, dim(deg - 1));
    int cols = std::max(0, dim(deg));
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        auto val = bracket_basis({{deg, j}});
        if (!val) continue;
        for (int i = 0; i < rows; ++i) m.at(i, j) = val->second[i];
    }
    return m;
}

CEPoly ce_add(CEPoly a, const CEPoly& b) {
    for (auto& [m, c] : b) {
        auto [it, fresh] = a.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

CEPoly ce_scale(const Scalar& c, CEPoly p) {
    if (c.is_zero()) return {};
    for (auto& [m, v] : p) v *= c;
    return p;
}

std::pair<int, Monomial> monomial_product(const Monomial& a, const Monomial& b,
                                          const std::vector<int>& parity) {
    Monomial m(a);
    m.insert(m.end(), b.begin(), b.end());
    int sign = 1;
    for (size_t i = 1; i < m.size(); ++i)
        for (size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
            if (parity[m[j]] && parity[m[j - 1]]) sign = -sign;
            std::swap(m[j], m[j - 1]);
        }
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && parity[m[i]]) return {0, {}};
    return {sign, m};
}

CEPoly ce_mul(const CEPoly& a, const CEPoly& b, const std::vector<int>& parity) {
    CEPoly out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            auto [sign, m] = monomial_product(ma, mb, parity);
            if (sign == 0) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            auto [it, fresh] = out.try_emplace(std::move(m), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

CEPoly CEAlgebra::delta_of(const CEPoly& p) const {
    CEPoly out;
    for (auto& [mono, coeff] : p) {
        int prefix_parity = 0;
        for (size_t i = 0; i < mono.size(); ++i) {
            Monomial prefix(mono.begin(), mono.begin() + i);
            Monomial suffix(mono.begin() + i + 1, mono.end());
            Scalar c = (prefix_parity % 2) ? -coeff : coeff;
            CEPoly piece{{prefix, c}};
            piece = ce_mul(piece, delta[mono[i]], parity);
            piece = ce_mul(piece, CEPoly{{suffix, Scalar(1)}}, parity);
            out = ce_add(std::move(out), piece);
            prefix_parity += parity[mono[i]];
        }
    }
    return out;
}

int CEAlgebra::degree_of(const Monomial& mono) const {
    int d = 0;
    for (int h : mono) d += ce_degree[h];
    return d;
}

std::string CEAlgebra::generator_name(int handle) const {
    auto e = L->basis()[handle];
    return "x[" + std::to_string(e.first) + ":" + std::to_string(e.second) + "]";
}

std::string CEAlgebra::poly_str(const CEPoly& p) const {
    if (p.empty()) return "0";
    std::string s;
    for (auto& [m, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (int h : m) s += "*" + generator_name(h);
    }
    return s;
}

CEAlgebra ce_differential(const LInftyAlgebra& L) {
    L.validate();
    CEAlgebra ce;
    ce.L = &L;
    const auto& basis = L.basis();
    int B = (int)basis.size();
    ce.delta.assign(B, {});
    for (auto& e : basis) {
        ce.ce_degree.push_back(e.first + 1);
        ce.parity.push_back((e.first + 1) & 1);
    }

    // delta(dual of b) = sum over arities k of (1/k!) sum over ordered basis
    // tuples (a_1..a_k) of eps * <dual b, [a_1,...,a_k]> * x^{a_1}...x^{a_k},
    // with eps the Koszul sign of moving each a_i past the duals x^{a_j}, j>i.
    for (auto& [k, table] : L.brackets) {
        (void)table;
        Scalar inv_fact(mpq_class(1) / factorial(k));
        std::vector<int> idx(k, 0);
        if (B == 0) continue;
        while (true) {
            std::vector<ElemId> tuple;
            for (int i = 0; i < k; ++i) tuple.push_back(basis[idx[i]]);
            auto val = L.bracket_basis(tuple);
            if (val && !is_zero_vec(val->second)) {
                long eps_exp = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        eps_exp += (long)tuple[i].first * (tuple[j].first + 1);
                int eps = (eps_exp % 2) ? -1 : 1;
                Monomial raw;
                for (int i = 0; i < k; ++i) raw.push_back(idx[i]);
                auto [msign, mono] = monomial_product(raw, {}, ce.parity);
                if (msign != 0) {
                    Scalar factor = inv_fact;
                    if (eps * msign < 0) factor = -factor;
                    auto [outdeg, coords] = *val;
                    for (int b = 0; b < (int)coords.size(); ++b) {
                        if (coords[b].is_zero()) continue;
                        int h = L.handle_of({outdeg, b});
                        CEPoly add{{mono, factor * coords[b]}};
                        ce.delta[h] = ce_add(std::move(ce.delta[h]), add);
                    }
                }
            }
            int p = 0;
            while (p < k && idx[p] + 1 == B) idx[p++] = 0;
            if (p == k) break;
            ++idx[p];
        }
    }
    return ce;
}

SquareZeroReport ce_square_zero(const LInftyAlgebra& L) {
    CEAlgebra ce = ce_differential(L);
    SquareZeroReport rep;
    for (int h = 0; h < ce.generators(); ++h) {
        CEPoly sq = ce.delta_of(ce.delta[h]);
        for (auto& [m, c] : sq) {
            rep.ok = false;
            rep.violations.push_back({h, m, c});
        }
    }
    return rep;
}

namespace {

// Coordinates not hit by the row space of the given vectors (leftmost-pivot
// convention); these index a complement of span(vectors) in R^dim.
std::vector<size_t> complement_coords(const std::vector<std::vector<Scalar>>& vectors,
                                      size_t dim) {
    std::vector<bool> is_pivot(dim, false);
    if (!vectors.empty()) {
        Mat rows = Mat::from_rows(vectors);
        Mat red = rows;
        for (size_t p : red.rref()) is_pivot[p] = true;
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < dim; ++i)
        if (!is_pivot[i]) out.push_back(i);
    return out;
}

// enumerate canonical tuples over the basis list (sorted handles ascending,
// repeats only in odd degree)
void canonical_tuples(const std::vector<ElemId>& basis, int k, size_t start,
                      std::vector<ElemId>& cur,
                      const std::function<void(const std::vector<ElemId>&)>& fn) {
    if (k == 0) {
        fn(cur);
        return;
    }
    for (size_t i = start; i < basis.size(); ++i) {
        cur.push_back(basis[i]);
        size_t next = (basis[i].first & 1) ? i : i + 1;
        canonical_tuples(basis, k - 1, next, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

Truncation truncate_linf(const LInftyAlgebra& L, int n, TruncMode mode) {
    if (n < 0) throw std::invalid_argument("truncate_linf: n must be >= 0");
    L.validate();

    Truncation T;
    // subspace of L_n to quotient by
    std::vector<std::vector<Scalar>> V;
    int dn = L.dim(n);
    if (mode == TruncMode::LE) {
        Mat d1 = L.boundary_matrix(n + 1);
        for (size_t j = 0; j < d1.cols(); ++j) {
            auto c = d1.col(j);
            if (!is_zero_vec(c)) V.push_back(c);
        }
    } else {
        Mat dout = L.boundary_matrix(n);
        if (dout.rows() == 0) {
            // everything is kernel
            for (int j = 0; j < dn; ++j) {
                std::vector<Scalar> e(dn);
                e[j] = Scalar(1);
                V.push_back(e);
            }
        } else {
            V = dout.kernel_basis();
        }
    }

    auto comp = complement_coords(V, dn);

    // dims
    for (auto& [deg, d] : L.space.dims) {
        if (deg < n)
            T.algebra.space.dims[deg] = d;
        else if (deg == n && !comp.empty())
            T.algebra.space.dims[n] = (int)comp.size();
    }

    // projections and sections
    for (auto& [deg, d] : L.space.dims) {
        if (deg < n) {
            T.projection.blocks[deg] = Mat::identity(d);
            T.section[deg] = Mat::identity(d);
        } else if (deg == n) {
            std::vector<std::vector<Scalar>> std_basis;
            for (int j = 0; j < dn; ++j) {
                std::vector<Scalar> e(dn);
                e[j] = Scalar(1);
                std_basis.push_back(e);
            }
            auto proj = project_to_quotient(std_basis, V);
            Mat P((int)comp.size(), dn);
            for (int j = 0; j < dn; ++j)
                for (size_t i = 0; i < comp.size(); ++i) P.at(i, j) = proj[j][i];
            Mat S(dn, (int)comp.size());
            for (size_t i = 0; i < comp.size(); ++i) S.at(comp[i], i) = Scalar(1);
            T.projection.blocks[deg] = std::move(P);
            T.section[deg] = std::move(S);
        } else {
            T.projection.blocks[deg] = Mat(0, d);
        }
    }

    // inherited brackets
    const auto& new_basis_space = T.algebra.space;
    std::vector<ElemId> new_basis;
    for (auto& [deg, d] : new_basis_space.dims)
        for (int i = 0; i < d; ++i) new_basis.push_back({deg, i});
    std::sort(new_basis.begin(), new_basis.end());

    for (auto& [k, table] : L.brackets) {
        std::map<std::vector<ElemId>, std::vector<Scalar>> newtab;
        std::vector<ElemId> cur;
        canonical_tuples(new_basis, k, 0, cur, [&](const std::vector<ElemId>& tuple) {
            int total = 0;
            std::vector<std::pair<int, std::vector<Scalar>>> args;
            for (auto& e : tuple) {
                total += e.first;
                const Mat& S = T.section.at(e.first);
                std::vector<Scalar> unit((int)S.cols());
                unit[e.second] = Scalar(1);
                args.push_back({e.first, S.apply(unit)});
            }
            int outdeg = total + k - 2;
            if (outdeg < 0 || new_basis_space.dim(outdeg) == 0) return;
            auto [odeg, coords] = L.bracket_linear(args);
            if (is_zero_vec(coords)) return;
            auto out = T.projection.blocks.at(odeg).apply(coords);
            if (is_zero_vec(out)) return;
            newtab[tuple] = std::move(out);
        });
        if (!newtab.empty()) T.algebra.brackets[k] = std::move(newtab);
    }
    T.algebra.validate();
    return T;
}

GradedLinearMap induced_truncation_map(const Truncation& from, const Truncation& to) {
    GradedLinearMap g;
    for (auto& [deg, d] : from.algebra.space.dims) {
        auto pit = to.projection.blocks.find(deg);
        auto sit = from.section.find(deg);
        if (sit == from.section.end()) continue;
        if (pit == to.projection.blocks.end()) {
            g.blocks[deg] = Mat(0, d);
            continue;
        }
        g.blocks[deg] = pit->second * sit->second;
    }
    return g;
}

NilpotencyReport is_nilpotent(const LInftyAlgebra& L) {
    L.validate();
    // current spanning sets per degree
    std::map<int, std::vector<std::vector<Scalar>>> cur;
    for (auto& [deg, d] : L.space.dims)
        for (int i = 0; i < d; ++i) {
            std::vector<Scalar> e(d);
            e[i] = Scalar(1);
            cur[deg].push_back(e);
        }
    auto total_dim = [&](const std::map<int, std::vector<std::vector<Scalar>>>& spans) {
        size_t t = 0;
        for (auto& [deg, vs] : spans)
            if (!vs.empty()) t += Mat::from_cols(vs).rank();
        return t;
    };

    size_t dim_before = total_dim(cur);
    for (int step = 1; step <= L.space.total_dim() + 2; ++step) {
        // next = span of brackets (arity >= 2) with at least one input in cur
        std::map<int, std::vector<std::vector<Scalar>>> next;
        for (auto& [k, table] : L.brackets) {
            if (k < 2) continue;
            for (auto& [deg, vecs] : cur)
                for (auto& v : vecs) {
                    // remaining k-1 slots over all basis elements
                    std::vector<ElemId> full = L.basis();
                    std::vector<int> idx(k - 1, 0);
                    if (full.empty()) continue;
                    while (true) {
                        std::vector<std::pair<int, std::vector<Scalar>>> args;
                        args.push_back({deg, v});
                        for (int i = 0; i < k - 1; ++i) {
                            auto e = full[idx[i]];
                            std::vector<Scalar> u(L.dim(e.first));
                            u[e.second] = Scalar(1);
                            args.push_back({e.first, u});
                        }
                        auto [odeg, coords] = L.bracket_linear(args);
                        if (!is_zero_vec(coords)) next[odeg].push_back(coords);
                        int p = 0;
                        while (p < k - 1 && idx[p] + 1 == (int)full.size()) idx[p++] = 0;
                        if (p == k - 1) break;
                        ++idx[p];
                    }
                }
        }
        size_t dim_after = total_dim(next);
        if (dim_after == 0) return {true, step};
        if (dim_after == dim_before) return {false, -1};
        cur = std::move(next);
        dim_before = dim_after;
    }
    return {false, -1};
}

std::map<int, int> homology_dims(const LInftyAlgebra& L) {
    std::map<int, int> h;
    for (auto& [deg, d] : L.space.dims) {
        auto hh = two_term_homology(L.boundary_matrix(deg + 1), L.boundary_matrix(deg));
        if (hh.dimension) h[deg] = (int)hh.dimension;
    }
    return h;
}

LInftyAlgebra abelian_algebra(const std::map<int, int>& dims) {
    LInftyAlgebra L;
    for (auto& [d, n] : dims)
        if (n > 0) L.space.dims[d] = n;
    return L;
}

LInftyAlgebra contractible_algebra(int n, int dim) {
    LInftyAlgebra L;
    L.space.dims[n] = dim;
    L.space.dims[n - 1] = dim;
    for (int i = 0; i < dim; ++i) {
        std::vector<Scalar> out(dim);
        out[i] = Scalar(1);
        L.brackets[1][{{n, i}}] = out;
    }
    return L;
}

LInftyAlgebra su2_algebra() {
    LInftyAlgebra L;
    L.space.dims[0] = 3;
    auto unit = [](int i) {
        std::vector<Scalar> v(3);
        v[i] = Scalar(1);
        return v;
    };
    L.brackets[2][{{0, 0}, {0, 1}}] = unit(2);
    L.brackets[2][{{0, 1}, {0, 2}}] = unit(0);
    std::vector<Scalar> m(3);
    m[1] = Scalar(-1);
    L.brackets[2][{{0, 0}, {0, 2}}] = m;  // [e1,e3] = -e2
    return L;
}

LInftyAlgebra heisenberg_algebra() {
    LInftyAlgebra L;
    L.space.dims[0] = 3;
    std::vector<Scalar> z(3);
    z[2] = Scalar(1);
    L.brackets[2][{{0, 0}, {0, 1}}] = z;
    return L;
}

LInftyAlgebra string_lie_algebra(const std::vector<std::vector<std::vector<Scalar>>>& sc,
                                 const std::vector<std::vector<Scalar>>& pairing,
                                 const Scalar& pairing_scale) {
    int n = (int)sc.size();
    auto pair = [&](const std::vector<Scalar>& x, int k) {
        Scalar s;
        for (int a = 0; a < n; ++a) s += x[a] * pairing[a][k];
        return s;
    };
    // pairing symmetric and ad-invariant: <[x,y],z> = -<y,[x,z]>
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(pairing[a][b] == pairing[b][a]))
                throw std::invalid_argument("string_lie_algebra: pairing not symmetric");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar lhs = pair(sc[i][j], k);
                Scalar rhs;
                for (int a = 0; a < n; ++a) rhs += sc[i][k][a] * pairing[j][a];
                if (!((lhs + rhs).is_zero()))
                    throw std::invalid_argument("string_lie_algebra: pairing not ad-invariant");
            }

    LInftyAlgebra L;
    L.space.dims[0] = n;
    L.space.dims[1] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!is_zero_vec(sc[i][j])) L.brackets[2][{{0, i}, {0, j}}] = sc[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Scalar v = pairing_scale * pair(sc[i][j], k);
                if (!v.is_zero()) L.brackets[3][{{0, i}, {0, j}, {0, k}}] = {v};
            }
    L.validate();
    return L;
}

namespace {

std::vector<std::vector<std::vector<Scalar>>> su2_structure_constants() {
    auto unit = [](int i, const Scalar& c) {
        std::vector<Scalar> v(3);
        v[i] = c;
        return v;
    };
    std::vector<std::vector<std::vector<Scalar>>> sc(
        3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
    sc[0][1] = unit(2, Scalar(1));
    sc[1][0] = unit(2, Scalar(-1));
    sc[1][2] = unit(0, Scalar(1));
    sc[2][1] = unit(0, Scalar(-1));
    sc[2][0] = unit(1, Scalar(1));
    sc[0][2] = unit(1, Scalar(-1));
    return sc;
}

}  // namespace

LInftyAlgebra string_su2(const Scalar& pairing_scale) {
    std::vector<std::vector<Scalar>> dot(3, std::vector<Scalar>(3));
    for (int i = 0; i < 3; ++i) dot[i][i] = Scalar(1);
    return string_lie_algebra(su2_structure_constants(), dot, pairing_scale);
}

LInftyAlgebra end_example(const Scalar& p, const Scalar& q) {
    if (zrank({{p}, {q}}) < 2)
        throw std::invalid_argument("end_example: p and q are Q-linearly dependent");
    auto sc = su2_structure_constants();
    LInftyAlgebra L;
    L.space.dims[0] = 6;  // g + g
    L.space.dims[1] = 1;  // R^2 / (p,q)R
    // binary bracket blockwise
    for (int blk = 0; blk < 2; ++blk)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::vector<Scalar> out(6);
                for (int a = 0; a < 3; ++a) out[blk * 3 + a] = sc[i][j][a];
                if (!is_zero_vec(out))
                    L.brackets[2][{{0, blk * 3 + i}, {0, blk * 3 + j}}] = out;
            }
    // ternary bracket: psi(<[X1,X2],X3>, <[Y1,Y2],Y3>) with psi(a,b) = q a - p b,
    // a functional on R^2 vanishing on (p,q)
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k) {
                Scalar vx = sc[i][j][k];  // <[e_i,e_j],e_k> = epsilon_{ijk}
                if (!vx.is_zero()) {
                    L.brackets[3][{{0, i}, {0, j}, {0, k}}] = {q * vx};
                    L.brackets[3][{{0, 3 + i}, {0, 3 + j}, {0, 3 + k}}] = {(-p) * vx};
                }
            }
    L.validate();
    return L;
}

}  // namespace lk
