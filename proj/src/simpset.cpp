#include "lk/simpset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lk {

void FinSimplicialSet::validate() const {
    if ((int)size.size() != N + 1)
        throw std::invalid_argument("FinSimplicialSet: size table shape");
    if ((int)face.size() != N + 1 || (int)degen.size() != std::max(N, 0))
        throw std::invalid_argument("FinSimplicialSet: table shapes");
    for (int m = 1; m <= N; ++m) {
        if ((int)face[m].size() != m + 1)
            throw std::invalid_argument("FinSimplicialSet: face arity at level " +
                                        std::to_string(m));
        for (int i = 0; i <= m; ++i) {
            if ((int)face[m][i].size() != size[m])
                throw std::invalid_argument("FinSimplicialSet: face table size");
            for (int x : face[m][i])
                if (x < 0 || x >= size[m - 1])
                    throw std::invalid_argument("FinSimplicialSet: face out of range");
        }
    }
    for (int m = 0; m < N; ++m) {
        if ((int)degen[m].size() != m + 1)
            throw std::invalid_argument("FinSimplicialSet: degeneracy arity");
        for (int i = 0; i <= m; ++i) {
            if ((int)degen[m][i].size() != size[m])
                throw std::invalid_argument("FinSimplicialSet: degeneracy table size");
            for (int x : degen[m][i])
                if (x < 0 || x >= size[m + 1])
                    throw std::invalid_argument("FinSimplicialSet: degeneracy out of range");
        }
    }
    // simplicial identities
    for (int m = 2; m <= N; ++m)
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int x = 0; x < size[m]; ++x)
                    if (d(m - 1, i, d(m, j, x)) != d(m - 1, j - 1, d(m, i, x)))
                        throw std::invalid_argument("FinSimplicialSet: d_i d_j identity");
    for (int m = 0; m + 2 <= N; ++m)
        for (int i = 0; i <= m; ++i)
            for (int j = i; j <= m; ++j)
                for (int x = 0; x < size[m]; ++x)
                    if (s(m + 1, i, s(m, j, x)) != s(m + 1, j + 1, s(m, i, x)))
                        throw std::invalid_argument("FinSimplicialSet: s_i s_j identity");
    for (int m = 0; m < N; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= m + 1; ++i)
                for (int x = 0; x < size[m]; ++x) {
                    int lhs = d(m + 1, i, s(m, j, x));
                    int rhs;
                    if (i < j)
                        rhs = (m >= 1) ? s(m - 1, j - 1, d(m, i, x)) : -1;
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = (m >= 1) ? s(m - 1, j, d(m, i - 1, x)) : -1;
                    if (rhs >= 0 && lhs != rhs)
                        throw std::invalid_argument("FinSimplicialSet: d_i s_j identity");
                }
}

int FinSimplicialSet::basepoint(int m) const {
    int x = 0;
    for (int k = 0; k < m; ++k) x = s(k, 0, x);
    return x;
}

int FinSimplicialSet::face_by_vertices(int m, int x, const std::vector<int>& keep) const {
    // delete the complement of `keep`, highest index first
    std::vector<int> del;
    for (int v = 0; v <= m; ++v)
        if (!std::binary_search(keep.begin(), keep.end(), v)) del.push_back(v);
    int cur = x, level = m;
    for (auto it = del.rbegin(); it != del.rend(); ++it) {
        cur = d(level, *it, cur);
        --level;
    }
    return cur;
}

std::string HornMap::str() const {
    std::string s = "Lambda[" + std::to_string(m) + "," + std::to_string(j) + "]: ";
    for (auto& [i, x] : faces) s += "d" + std::to_string(i) + "=" + std::to_string(x) + " ";
    return s;
}

std::vector<int> horn_fillers(const FinSimplicialSet& X, const HornMap& h) {
    std::vector<int> out;
    for (int y = 0; y < X.size[h.m]; ++y) {
        bool ok = true;
        for (auto& [i, x] : h.faces)
            if (X.d(h.m, i, y) != x) {
                ok = false;
                break;
            }
        if (ok) out.push_back(y);
    }
    return out;
}

std::vector<HornMap> enumerate_horns(const FinSimplicialSet& X, int m, int j) {
    std::vector<int> idx;
    for (int i = 0; i <= m; ++i)
        if (i != j) idx.push_back(i);
    std::vector<HornMap> out;
    HornMap cur;
    cur.m = m;
    cur.j = j;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == idx.size()) {
            out.push_back(cur);
            return;
        }
        int i = idx[pos];
        for (int x = 0; x < X.size[m - 1]; ++x) {
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                int k = idx[q];  // k < i since idx ascending
                // d_k(face_i) = d_{i-1}(face_k)
                if (X.d(m - 1, k, x) != X.d(m - 1, i - 1, cur.faces[k])) ok = false;
            }
            if (!ok) continue;
            cur.faces[i] = x;
            rec(pos + 1);
            cur.faces.erase(i);
        }
    };
    rec(0);
    return out;
}

KanReport is_kan(const FinSimplicialSet& X, int up_to) {
    if (up_to > X.N)
        throw std::invalid_argument("is_kan: up_to exceeds the truncation dimension");
    for (int m = 1; m <= up_to; ++m)
        for (int j = 0; j <= m; ++j)
            for (auto& h : enumerate_horns(X, m, j))
                if (horn_fillers(X, h).empty()) return {false, h};
    return {true, std::nullopt};
}

bool unique_fillers_above(const FinSimplicialSet& X, int n) {
    for (int m = n + 1; m <= X.N; ++m)
        for (int j = 0; j <= m; ++j)
            for (auto& h : enumerate_horns(X, m, j))
                if (horn_fillers(X, h).size() != 1) return false;
    return true;
}

void FiniteGroup::validate() const {
    if ((int)mul.size() != order) throw std::invalid_argument("FiniteGroup: table shape");
    for (auto& row : mul)
        if ((int)row.size() != order) throw std::invalid_argument("FiniteGroup: table shape");
    for (int a = 0; a < order; ++a) {
        if (mul[unit][a] != a || mul[a][unit] != a)
            throw std::invalid_argument("FiniteGroup: unit law");
        bool inv = false;
        for (int b = 0; b < order; ++b)
            if (mul[a][b] == unit && mul[b][a] == unit) inv = true;
        if (!inv) throw std::invalid_argument("FiniteGroup: missing inverse");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("FiniteGroup: associativity");
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (mul[a][b] != mul[b][a]) return false;
    return true;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> out;
    for (int a = 0; a < order; ++a) {
        int x = a, k = 1;
        while (x != unit) {
            x = mul[x][a];
            ++k;
        }
        out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool FiniteGroup::isomorphic_cyclic(int n) const {
    if (order != n) return false;
    auto ords = element_orders();
    return std::find(ords.begin(), ords.end(), n) != ords.end();
}

std::string FiniteGroup::str() const {
    return "group of order " + std::to_string(order) + (is_abelian() ? " (abelian)" : "");
}

FiniteGroup cyclic_group(int n) {
    FiniteGroup g;
    g.order = n;
    g.unit = 0;
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    return g;
}

FiniteGroup pi_n(const FinSimplicialSet& X, int n) {
    if (!X.reduced()) throw std::invalid_argument("pi_n: complex must be reduced");
    if (n + 1 > X.N) throw std::invalid_argument("pi_n: truncation too low");
    auto kan = is_kan(X, n + 1);
    if (!kan.kan) throw std::invalid_argument("pi_n: complex is not Kan up to " +
                                              std::to_string(n + 1));
    int base = X.basepoint(n - 1 >= 0 ? n - 1 : 0);

    // cycles: all faces at the basepoint
    std::vector<int> cycles;
    for (int x = 0; x < X.size[n]; ++x) {
        bool cyc = true;
        for (int i = 0; i <= n && cyc; ++i)
            if (X.d(n, i, x) != base) cyc = false;
        if (cyc) cycles.push_back(x);
    }
    std::map<int, int> cyc_index;
    for (size_t i = 0; i < cycles.size(); ++i) cyc_index[cycles[i]] = (int)i;

    // relation: y in X_{n+1} with d_i y = * for i > 1 relates d_0 y ~ d_1 y
    std::vector<int> parent(cycles.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int basen = X.basepoint(n);
    for (int y = 0; y < X.size[n + 1]; ++y) {
        bool rel = true;
        for (int i = 2; i <= n + 1 && rel; ++i)
            if (X.d(n + 1, i, y) != basen) rel = false;
        if (!rel) continue;
        int a = X.d(n + 1, 0, y), b = X.d(n + 1, 1, y);
        if (!cyc_index.count(a) || !cyc_index.count(b)) continue;
        parent[find(cyc_index[a])] = find(cyc_index[b]);
    }
    std::map<int, int> klass;  // root -> class id
    std::vector<int> rep;
    for (size_t i = 0; i < cycles.size(); ++i) {
        int r = find((int)i);
        if (!klass.count(r)) {
            klass[r] = (int)rep.size();
            rep.push_back(cycles[i]);
        }
    }
    int nclasses = (int)rep.size();
    auto class_of = [&](int x) { return klass.at(find(cyc_index.at(x))); };

    // product: fill Lambda[n+1, 1] with d_0 = x, d_2 = y, d_i = * (i > 2);
    // read d_1.  All fillers must land in the same class.
    FiniteGroup G;
    G.order = nclasses;
    G.mul.assign(nclasses, std::vector<int>(nclasses, -1));
    for (int a = 0; a < nclasses; ++a)
        for (int b = 0; b < nclasses; ++b) {
            HornMap h;
            h.m = n + 1;
            h.j = 1;
            h.faces[0] = rep[a];
            h.faces[2] = rep[b];
            for (int i = 3; i <= n + 1; ++i) h.faces[i] = basen;
            auto fillers = horn_fillers(X, h);
            if (fillers.empty()) throw std::logic_error("pi_n: missing product filler");
            int got = -1;
            for (int w : fillers) {
                int c = class_of(X.d(n + 1, 1, w));
                if (got == -1) got = c;
                else if (got != c)
                    throw std::logic_error("pi_n: product depends on the filler choice");
            }
            G.mul[a][b] = got;
        }
    G.unit = class_of(X.basepoint(n));
    G.validate();
    return G;
}

// ---- homotopy rel skeleton --------------------------------------------------

namespace {

// all nonempty vertex subsets of [m], ordered by (dimension, lex)
std::vector<std::vector<int>> all_faces(int m) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << (m + 1)); ++mask) {
        std::vector<int> f;
        for (int v = 0; v <= m; ++v)
            if (mask & (1u << v)) f.push_back(v);
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

struct PrismSearch {
    const FinSimplicialSet& X;
    int m, n, x, xp;
    std::vector<std::vector<int>> faces;
    std::map<std::vector<int>, int> face_index;
    // chains[f] = the chosen chain for face f (size = dim+1), -1 = unset
    std::vector<std::vector<int>> chains;

    PrismSearch(const FinSimplicialSet& X_, int m_, int x_, int xp_, int n_)
        : X(X_), m(m_), n(n_), x(x_), xp(xp_) {
        faces = all_faces(m);
        for (size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = (int)i;
        chains.resize(faces.size());
    }

    int restrict_of(int base, const std::vector<int>& f) const {
        return X.face_by_vertices(m, base, f);
    }

    // the chain entry z^{f-minus-vertex-pos}_k
    int sub_chain(const std::vector<int>& f, int pos, int k) const {
        std::vector<int> g = f;
        g.erase(g.begin() + pos);
        return chains[face_index.at(g)][k];
    }

    bool search(size_t fi) {
        if (fi == faces.size()) return true;
        const auto& f = faces[fi];
        int dim = (int)f.size() - 1;
        int rx = restrict_of(x, f), rxp = restrict_of(xp, f);
        if (dim < n) {
            // forced constant homotopy; requires agreement on the skeleton
            if (rx != rxp) return false;
            std::vector<int> chain(dim + 1);
            for (int k = 0; k <= dim; ++k) chain[k] = X.s(dim, k, rx);
            chains[fi] = chain;
            bool ok = search(fi + 1);
            if (!ok) chains[fi].clear();
            return ok;
        }
        // choose z_0..z_dim in X_{dim+1} under the prism identities
        std::vector<int> chain(dim + 1, -1);
        std::function<bool(int)> choose = [&](int k) -> bool {
            if (k > dim) {
                chains[fi] = chain;
                if (search(fi + 1)) return true;
                chains[fi].clear();
                return false;
            }
            for (int z = 0; z < X.size[dim + 1]; ++z) {
                bool ok = true;
                // (1) d_0 z_0 = x|f
                if (k == 0 && X.d(dim + 1, 0, z) != rx) ok = false;
                // (4) d_k z_k = d_k z_{k-1}
                if (ok && k > 0 && X.d(dim + 1, k, z) != X.d(dim + 1, k, chain[k - 1]))
                    ok = false;
                // (2) d_{dim+1} z_dim = x'|f
                if (ok && k == dim && X.d(dim + 1, dim + 1, z) != rxp) ok = false;
                // (3) d_i z_k = z^{d_i f}_{k-1} for i < k
                for (int i = 0; ok && i < k; ++i)
                    if (X.d(dim + 1, i, z) != sub_chain(f, i, k - 1)) ok = false;
                // (5) d_i z_k = z^{d_{i-1} f}_k for i > k+1
                for (int i = k + 2; ok && i <= dim + 1; ++i)
                    if (X.d(dim + 1, i, z) != sub_chain(f, i - 1, k)) ok = false;
                if (!ok) continue;
                chain[k] = z;
                if (choose(k + 1)) return true;
                chain[k] = -1;
            }
            return false;
        };
        return choose(0);
    }
};

}  // namespace

bool homotopic_rel_skeleton(const FinSimplicialSet& X, int m, int x, int xp, int n) {
    if (m + 1 > X.N)
        throw std::invalid_argument("homotopic_rel_skeleton: needs level " +
                                    std::to_string(m + 1));
    if (x == xp) return true;
    PrismSearch ps(X, m, x, xp, n);
    return ps.search(0);
}

namespace {

FinSimplicialSet quotient_by_classes(const FinSimplicialSet& X, int newN,
                                     const std::vector<std::vector<int>>& class_of) {
    FinSimplicialSet Y;
    Y.N = newN;
    Y.size.resize(newN + 1);
    Y.face.assign(newN + 1, {});
    Y.degen.assign(std::max(newN, 0), {});
    std::vector<std::vector<int>> reps(newN + 1);
    for (int mlev = 0; mlev <= newN; ++mlev) {
        int nc = 0;
        for (int v : class_of[mlev]) nc = std::max(nc, v + 1);
        Y.size[mlev] = nc;
        reps[mlev].assign(nc, -1);
        for (int v = 0; v < (int)class_of[mlev].size(); ++v)
            if (reps[mlev][class_of[mlev][v]] < 0) reps[mlev][class_of[mlev][v]] = v;
    }
    for (int mlev = 1; mlev <= newN; ++mlev) {
        Y.face[mlev].assign(mlev + 1, std::vector<int>(Y.size[mlev]));
        for (int i = 0; i <= mlev; ++i)
            for (int c = 0; c < Y.size[mlev]; ++c)
                Y.face[mlev][i][c] = class_of[mlev - 1][X.d(mlev, i, reps[mlev][c])];
        // well-definedness across all members
        for (int v = 0; v < (int)class_of[mlev].size(); ++v)
            for (int i = 0; i <= mlev; ++i)
                if (class_of[mlev - 1][X.d(mlev, i, v)] !=
                    Y.face[mlev][i][class_of[mlev][v]])
                    throw std::logic_error("truncate_simpset: faces not well-defined");
    }
    for (int mlev = 0; mlev < newN; ++mlev) {
        Y.degen[mlev].assign(mlev + 1, std::vector<int>(Y.size[mlev]));
        for (int i = 0; i <= mlev; ++i)
            for (int c = 0; c < Y.size[mlev]; ++c)
                Y.degen[mlev][i][c] = class_of[mlev + 1][X.s(mlev, i, reps[mlev][c])];
        for (int v = 0; v < (int)class_of[mlev].size(); ++v)
            for (int i = 0; i <= mlev; ++i)
                if (class_of[mlev + 1][X.s(mlev, i, v)] !=
                    Y.degen[mlev][i][class_of[mlev][v]])
                    throw std::logic_error("truncate_simpset: degeneracies not well-defined");
    }
    Y.coskeletal = X.coskeletal;
    Y.validate();
    return Y;
}

}  // namespace

FinSimplicialSet truncate_simpset(const FinSimplicialSet& X, int n, SimpTruncMode mode) {
    if (mode == SimpTruncMode::LT) {
        // Moore: classes by the (n-1)-skeleton restriction
        std::vector<std::vector<int>> class_of(X.N + 1);
        for (int mlev = 0; mlev <= X.N; ++mlev) {
            if (mlev < n) {
                class_of[mlev].resize(X.size[mlev]);
                std::iota(class_of[mlev].begin(), class_of[mlev].end(), 0);
                continue;
            }
            // key: all iterated faces of dimension n-1 (n = 0: single class)
            std::map<std::vector<int>, int> seen;
            class_of[mlev].resize(X.size[mlev]);
            std::vector<std::vector<int>> subs;
            for (unsigned mask = 1; mask < (1u << (mlev + 1)); ++mask)
                if (__builtin_popcount(mask) == n) {
                    std::vector<int> f;
                    for (int v = 0; v <= mlev; ++v)
                        if (mask & (1u << v)) f.push_back(v);
                    subs.push_back(f);
                }
            for (int v = 0; v < X.size[mlev]; ++v) {
                std::vector<int> key;
                for (auto& f : subs) key.push_back(X.face_by_vertices(mlev, v, f));
                auto [it, fresh] = seen.try_emplace(key, (int)seen.size());
                class_of[mlev][v] = it->second;
            }
        }
        return quotient_by_classes(X, X.N, class_of);
    }

    // Duskin: homotopy classes rel the (n-1)-skeleton; drop the top level
    int newN = X.N - 1;
    if (newN < 0) throw std::invalid_argument("truncate_simpset: truncation too low");
    std::vector<std::vector<int>> class_of(newN + 1);
    for (int mlev = 0; mlev <= newN; ++mlev) {
        int sz = X.size[mlev];
        std::vector<int> parent(sz);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int a = 0; a < sz; ++a)
            for (int b = a + 1; b < sz; ++b) {
                if (find(a) == find(b)) continue;
                if (homotopic_rel_skeleton(X, mlev, a, b, n)) parent[find(a)] = find(b);
            }
        std::map<int, int> renum;
        class_of[mlev].resize(sz);
        for (int v = 0; v < sz; ++v) {
            auto [it, fresh] = renum.try_emplace(find(v), (int)renum.size());
            class_of[mlev][v] = it->second;
        }
    }
    return quotient_by_classes(X, newN, class_of);
}

// ---- subcomplexes of the standard simplex -----------------------------------

void SubComplex::validate() const {
    for (auto& f : faces) {
        if (f.empty() || !std::is_sorted(f.begin(), f.end()) ||
            std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("SubComplex: malformed face");
        for (int v : f)
            if (v < 0 || v > n) throw std::invalid_argument("SubComplex: vertex range");
        if (f.size() > 1)
            for (size_t i = 0; i < f.size(); ++i) {
                std::vector<int> g = f;
                g.erase(g.begin() + i);
                if (!faces.count(g))
                    throw std::invalid_argument("SubComplex: not downward closed");
            }
    }
}

SubComplex SubComplex::full(int n) {
    SubComplex S;
    S.n = n;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> f;
        for (int v = 0; v <= n; ++v)
            if (mask & (1u << v)) f.push_back(v);
        S.faces.insert(f);
    }
    return S;
}

SubComplex SubComplex::horn(int n, int j) {
    SubComplex S = full(n);
    std::vector<int> top(n + 1);
    std::iota(top.begin(), top.end(), 0);
    S.faces.erase(top);
    std::vector<int> opp = top;
    opp.erase(opp.begin() + j);
    S.faces.erase(opp);
    return S;
}

SubComplex SubComplex::boundary(int n) {
    SubComplex S = full(n);
    std::vector<int> top(n + 1);
    std::iota(top.begin(), top.end(), 0);
    S.faces.erase(top);
    return S;
}

std::optional<std::vector<CollapseStep>> find_collapse(const SubComplex& S) {
    S.validate();
    using State = std::set<std::vector<int>>;
    if (S.faces.empty()) return std::nullopt;

    // single vertex: empty certificate
    std::vector<std::vector<int>> verts;
    for (auto& f : S.faces)
        if (f.size() == 1) verts.push_back(f);
    if (S.faces.size() == 1 && !verts.empty()) return std::vector<CollapseStep>{};

    for (auto& v0 : verts) {
        State start{v0};
        std::set<State> visited{start};
        // DFS with explicit stack of (state, certificate)
        std::vector<std::pair<State, std::vector<CollapseStep>>> stack{{start, {}}};
        while (!stack.empty()) {
            auto [cur, cert] = stack.back();
            stack.pop_back();
            if (cur.size() == S.faces.size()) return cert;
            for (auto& tau : S.faces) {
                if (tau.size() < 2 || cur.count(tau)) continue;
                for (size_t jj = 0; jj < tau.size(); ++jj) {
                    std::vector<int> freef = tau;
                    freef.erase(freef.begin() + jj);
                    if (cur.count(freef)) continue;
                    bool horn_ok = true;
                    for (size_t i = 0; i < tau.size() && horn_ok; ++i) {
                        if (i == jj) continue;
                        std::vector<int> g = tau;
                        g.erase(g.begin() + i);
                        if (!cur.count(g)) horn_ok = false;
                    }
                    if (!horn_ok) continue;
                    State next = cur;
                    next.insert(tau);
                    next.insert(freef);
                    if (visited.count(next)) continue;
                    visited.insert(next);
                    auto ncert = cert;
                    ncert.push_back({tau, (int)jj});
                    stack.push_back({next, std::move(ncert)});
                }
            }
        }
    }
    return std::nullopt;
}

// ---- builders ---------------------------------------------------------------

namespace {

// simplicial set of all monotone maps [m] -> [n] passing a membership filter
FinSimplicialSet from_monotone(int n, int N,
                               const std::function<bool(const std::vector<int>&)>& keep) {
    FinSimplicialSet X;
    X.N = N;
    X.size.resize(N + 1);
    X.face.assign(N + 1, {});
    X.degen.assign(std::max(N, 0), {});
    std::vector<std::vector<std::vector<int>>> simplices(N + 1);
    std::vector<std::map<std::vector<int>, int>> index(N + 1);
    for (int m = 0; m <= N; ++m) {
        std::vector<int> cur(m + 1, 0);
        while (true) {
            if (keep(cur)) {
                index[m][cur] = (int)simplices[m].size();
                simplices[m].push_back(cur);
            }
            int p = m;
            while (p >= 0 && cur[p] == n) --p;
            if (p < 0) break;
            ++cur[p];
            for (int q = p + 1; q <= m; ++q) cur[q] = cur[p];
        }
        X.size[m] = (int)simplices[m].size();
    }
    for (int m = 1; m <= N; ++m) {
        X.face[m].assign(m + 1, std::vector<int>(X.size[m]));
        for (int i = 0; i <= m; ++i)
            for (int x = 0; x < X.size[m]; ++x) {
                std::vector<int> f = simplices[m][x];
                f.erase(f.begin() + i);
                X.face[m][i][x] = index[m - 1].at(f);
            }
    }
    for (int m = 0; m < N; ++m) {
        X.degen[m].assign(m + 1, std::vector<int>(X.size[m]));
        for (int i = 0; i <= m; ++i)
            for (int x = 0; x < X.size[m]; ++x) {
                std::vector<int> f = simplices[m][x];
                f.insert(f.begin() + i, f[i]);
                X.degen[m][i][x] = index[m + 1].at(f);
            }
    }
    X.validate();
    return X;
}

std::set<int> image_of(const std::vector<int>& f) {
    return std::set<int>(f.begin(), f.end());
}

}  // namespace

FinSimplicialSet point_complex(int N) {
    return from_monotone(0, N, [](const std::vector<int>&) { return true; });
}

FinSimplicialSet standard_simplex(int n, int N) {
    return from_monotone(n, N, [](const std::vector<int>&) { return true; });
}

FinSimplicialSet horn_complex(int n, int j, int N) {
    return from_monotone(n, N, [n, j](const std::vector<int>& f) {
        auto im = image_of(f);
        if ((int)im.size() == n + 1) return false;
        if ((int)im.size() == n && !im.count(j)) return false;
        return true;
    });
}

FinSimplicialSet boundary_complex(int n, int N) {
    return from_monotone(n, N, [n](const std::vector<int>& f) {
        return (int)image_of(f).size() < n + 1;
    });
}

FinSimplicialSet k_g_1(const FiniteGroup& G, int N) {
    G.validate();
    FinSimplicialSet X;
    X.N = N;
    X.size.resize(N + 1);
    X.face.assign(N + 1, {});
    X.degen.assign(std::max(N, 0), {});
    // X_m = G^m, mixed-radix encoding
    std::vector<long> pow(N + 2, 1);
    for (int m = 1; m <= N + 1; ++m) pow[m] = pow[m - 1] * G.order;
    for (int m = 0; m <= N; ++m) X.size[m] = (int)pow[m];
    auto decode = [&](int m, int x) {
        std::vector<int> g(m);
        for (int i = 0; i < m; ++i) {
            g[i] = x % G.order;
            x /= G.order;
        }
        return g;
    };
    auto encode = [&](const std::vector<int>& g) {
        long x = 0;
        for (int i = (int)g.size() - 1; i >= 0; --i) x = x * G.order + g[i];
        return (int)x;
    };
    for (int m = 1; m <= N; ++m) {
        X.face[m].assign(m + 1, std::vector<int>(X.size[m]));
        for (int x = 0; x < X.size[m]; ++x) {
            auto g = decode(m, x);
            for (int i = 0; i <= m; ++i) {
                std::vector<int> h;
                if (i == 0)
                    h.assign(g.begin() + 1, g.end());
                else if (i == m)
                    h.assign(g.begin(), g.end() - 1);
                else {
                    h = g;
                    h[i - 1] = G.mul[g[i - 1]][g[i]];
                    h.erase(h.begin() + i);
                }
                X.face[m][i][x] = encode(h);
            }
        }
    }
    for (int m = 0; m < N; ++m) {
        X.degen[m].assign(m + 1, std::vector<int>(X.size[m]));
        for (int x = 0; x < X.size[m]; ++x) {
            auto g = decode(m, x);
            for (int i = 0; i <= m; ++i) {
                std::vector<int> h = g;
                h.insert(h.begin() + i, G.unit);
                X.degen[m][i][x] = encode(h);
            }
        }
    }
    X.coskeletal = true;
    X.validate();
    return X;
}

}  // namespace lk
