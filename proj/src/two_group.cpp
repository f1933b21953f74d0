#include "lk/two_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lk {

void CoherentTwoGroup::validate() const {
    int na = narr();
    auto arrow_ok = [&](int a) { return a >= 0 && a < na; };
    for (int a = 0; a < na; ++a)
        if (src[a] < 0 || src[a] >= nobj || tgt[a] < 0 || tgt[a] >= nobj)
            throw std::invalid_argument("CoherentTwoGroup: arrow endpoints");
    for (int g = 0; g < nobj; ++g) {
        int e = id_arrow[g];
        if (!arrow_ok(e) || src[e] != g || tgt[e] != g)
            throw std::invalid_argument("CoherentTwoGroup: identity arrows");
    }
    // composition: defined exactly on composable pairs, unit laws, inverses
    for (int b = 0; b < na; ++b)
        for (int a = 0; a < na; ++a) {
            int c = comp[b][a];
            if ((c >= 0) != (src[b] == tgt[a]))
                throw std::invalid_argument("CoherentTwoGroup: composability");
            if (c >= 0 && (src[c] != src[a] || tgt[c] != tgt[b]))
                throw std::invalid_argument("CoherentTwoGroup: composite endpoints");
        }
    for (int a = 0; a < na; ++a) {
        if (comp[a][id_arrow[src[a]]] != a || comp[id_arrow[tgt[a]]][a] != a)
            throw std::invalid_argument("CoherentTwoGroup: unit law");
        bool inv = false;
        for (int b = 0; b < na; ++b)
            if (comp[b][a] == id_arrow[src[a]] && comp[a][b] == id_arrow[tgt[a]]) inv = true;
        if (!inv) throw std::invalid_argument("CoherentTwoGroup: missing inverse");
    }
    for (int c = 0; c < na; ++c)
        for (int b = 0; b < na; ++b)
            for (int a = 0; a < na; ++a)
                if (comp[c][b] >= 0 && comp[b][a] >= 0 &&
                    comp[comp[c][b]][a] != comp[c][comp[b][a]])
                    throw std::invalid_argument("CoherentTwoGroup: composition associativity");
    // monoidal structure: strict units, functor on identities and endpoints
    for (int g = 0; g < nobj; ++g)
        if (mul_obj[unit_obj][g] != g || mul_obj[g][unit_obj] != g)
            throw std::invalid_argument("CoherentTwoGroup: units are not strict");
    for (int a = 0; a < na; ++a) {
        if (mul_arr[id_arrow[unit_obj]][a] != a || mul_arr[a][id_arrow[unit_obj]] != a)
            throw std::invalid_argument("CoherentTwoGroup: unit whiskering not strict");
        for (int b = 0; b < na; ++b) {
            int p = mul_arr[a][b];
            if (!arrow_ok(p) || src[p] != mul_obj[src[a]][src[b]] ||
                tgt[p] != mul_obj[tgt[a]][tgt[b]])
                throw std::invalid_argument("CoherentTwoGroup: product endpoints");
        }
    }
    for (int g = 0; g < nobj; ++g)
        for (int h = 0; h < nobj; ++h)
            if (mul_arr[id_arrow[g]][id_arrow[h]] != id_arrow[mul_obj[g][h]])
                throw std::invalid_argument("CoherentTwoGroup: product of identities");
    // associator endpoints and naturality
    for (int g = 0; g < nobj; ++g)
        for (int h = 0; h < nobj; ++h)
            for (int k = 0; k < nobj; ++k) {
                int al = assoc[g][h][k];
                if (!arrow_ok(al) || src[al] != mul_obj[g][mul_obj[h][k]] ||
                    tgt[al] != mul_obj[mul_obj[g][h]][k])
                    throw std::invalid_argument("CoherentTwoGroup: associator endpoints");
            }
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int c = 0; c < na; ++c) {
                int lhs = comp[assoc[tgt[a]][tgt[b]][tgt[c]]][mul_arr[a][mul_arr[b][c]]];
                int rhs = comp[mul_arr[mul_arr[a][b]][c]][assoc[src[a]][src[b]][src[c]]];
                if (lhs != rhs)
                    throw std::invalid_argument("CoherentTwoGroup: associator naturality");
            }
    if (!pentagon_holds())
        throw std::invalid_argument("CoherentTwoGroup: pentagon identity fails");
}

bool CoherentTwoGroup::pentagon_holds() const {
    for (int g = 0; g < nobj; ++g)
        for (int h = 0; h < nobj; ++h)
            for (int k = 0; k < nobj; ++k)
                for (int l = 0; l < nobj; ++l) {
                    int kl = mul_obj[k][l], hk = mul_obj[h][k];
                    (void)kl;
                    int path1 = comp[assoc[mul_obj[g][h]][k][l]][assoc[g][h][mul_obj[k][l]]];
                    int path2 = comp[mul_arr[assoc[g][h][k]][id_arrow[l]]]
                                    [comp[assoc[g][hk][l]][mul_arr[id_arrow[g]][assoc[h][k][l]]]];
                    if (path1 != path2) return false;
                }
    return true;
}

bool CoherentTwoGroup::skeletal() const {
    for (int a = 0; a < narr(); ++a)
        if (src[a] != tgt[a]) return false;
    return true;
}

FiniteGroup CoherentTwoGroup::pi0() const {
    if (!skeletal())
        throw std::invalid_argument("CoherentTwoGroup: pi0 needs a skeletal presentation");
    FiniteGroup g;
    g.order = nobj;
    g.unit = unit_obj;
    g.mul = mul_obj;
    g.validate();
    return g;
}

FiniteGroup CoherentTwoGroup::pi1() const {
    std::vector<int> aut;
    for (int a = 0; a < narr(); ++a)
        if (src[a] == unit_obj && tgt[a] == unit_obj) aut.push_back(a);
    FiniteGroup g;
    g.order = (int)aut.size();
    g.mul.assign(g.order, std::vector<int>(g.order));
    std::map<int, int> pos;
    for (int i = 0; i < g.order; ++i) pos[aut[i]] = i;
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) g.mul[i][j] = pos.at(comp[aut[i]][aut[j]]);
    g.unit = pos.at(id_arrow[unit_obj]);
    g.validate();
    return g;
}

CoherentTwoGroup crossed_module_2group(const FiniteGroup& G, const FiniteGroup& H,
                                       const std::vector<int>& dmap,
                                       const std::vector<std::vector<int>>& action) {
    G.validate();
    H.validate();
    CoherentTwoGroup T;
    T.nobj = G.order;
    T.unit_obj = G.unit;
    int na = G.order * H.order;
    auto arr = [&](int g, int h) { return g * H.order + h; };
    T.src.resize(na);
    T.tgt.resize(na);
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < H.order; ++h) {
            T.src[arr(g, h)] = g;
            T.tgt[arr(g, h)] = G.mul[dmap[h]][g];
        }
    T.id_arrow.resize(G.order);
    for (int g = 0; g < G.order; ++g) T.id_arrow[g] = arr(g, H.unit);
    T.comp.assign(na, std::vector<int>(na, -1));
    // composite of (g,h) then (d(h)g, h') is (g, h' h)
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < H.order; ++h)
            for (int hp = 0; hp < H.order; ++hp) {
                int a = arr(g, h);
                int b = arr(T.tgt[a], hp);
                T.comp[b][a] = arr(g, H.mul[hp][h]);
            }
    T.mul_obj = G.mul;
    T.mul_arr.assign(na, std::vector<int>(na));
    for (int g1 = 0; g1 < G.order; ++g1)
        for (int h1 = 0; h1 < H.order; ++h1)
            for (int g2 = 0; g2 < G.order; ++g2)
                for (int h2 = 0; h2 < H.order; ++h2)
                    T.mul_arr[arr(g1, h1)][arr(g2, h2)] =
                        arr(G.mul[g1][g2], H.mul[h1][action[g1][h2]]);
    T.assoc.assign(G.order, std::vector<std::vector<int>>(
                                G.order, std::vector<int>(G.order)));
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            for (int k = 0; k < G.order; ++k)
                T.assoc[g][h][k] = T.id_arrow[G.mul[G.mul[g][h]][k]];
    T.validate();
    return T;
}

CoherentTwoGroup cocycle_2group(const FiniteGroup& K, const FiniteGroup& A,
                                const std::vector<std::vector<std::vector<int>>>& omega) {
    K.validate();
    A.validate();
    if (!A.is_abelian()) throw std::invalid_argument("cocycle_2group: A must be abelian");
    CoherentTwoGroup T;
    T.nobj = K.order;
    T.unit_obj = K.unit;
    int na = K.order * A.order;
    auto arr = [&](int g, int a) { return g * A.order + a; };
    T.src.resize(na);
    T.tgt.resize(na);
    for (int g = 0; g < K.order; ++g)
        for (int a = 0; a < A.order; ++a) T.src[arr(g, a)] = T.tgt[arr(g, a)] = g;
    T.id_arrow.resize(K.order);
    for (int g = 0; g < K.order; ++g) T.id_arrow[g] = arr(g, A.unit);
    T.comp.assign(na, std::vector<int>(na, -1));
    for (int g = 0; g < K.order; ++g)
        for (int a = 0; a < A.order; ++a)
            for (int b = 0; b < A.order; ++b)
                T.comp[arr(g, a)][arr(g, b)] = arr(g, A.mul[a][b]);
    T.mul_obj = K.mul;
    T.mul_arr.assign(na, std::vector<int>(na));
    for (int g = 0; g < K.order; ++g)
        for (int a = 0; a < A.order; ++a)
            for (int h = 0; h < K.order; ++h)
                for (int b = 0; b < A.order; ++b)
                    T.mul_arr[arr(g, a)][arr(h, b)] = arr(K.mul[g][h], A.mul[a][b]);
    T.assoc.assign(K.order, std::vector<std::vector<int>>(K.order,
                                                          std::vector<int>(K.order)));
    for (int g = 0; g < K.order; ++g)
        for (int h = 0; h < K.order; ++h)
            for (int k = 0; k < K.order; ++k)
                T.assoc[g][h][k] = arr(K.mul[K.mul[g][h]][k], omega[g][h][k]);
    T.validate();
    return T;
}

// ---- nerve -------------------------------------------------------------------

namespace {

struct NerveLevel {
    // tuple encoding: g entries in lex (i<j) order, then h entries (i<j<k)
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> index;
};

std::vector<std::pair<int, int>> pairs_of(int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) out.push_back({i, j});
    return out;
}

std::vector<std::array<int, 3>> triples_of(int m) {
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) out.push_back({i, j, k});
    return out;
}

struct TupleView {
    int m;
    const std::vector<int>& t;
    std::vector<std::pair<int, int>> ps;
    std::vector<std::array<int, 3>> ts;
    TupleView(int m_, const std::vector<int>& t_) : m(m_), t(t_) {
        ps = pairs_of(m);
        ts = triples_of(m);
    }
    int g(int i, int j) const {
        auto it = std::find(ps.begin(), ps.end(), std::make_pair(i, j));
        return t[it - ps.begin()];
    }
    int h(int i, int j, int k) const {
        auto it = std::find(ts.begin(), ts.end(), std::array<int, 3>{i, j, k});
        return t[ps.size() + (it - ts.begin())];
    }
};

}  // namespace

FinSimplicialSet nerve_2group(const CoherentTwoGroup& T, int up_to) {
    T.validate();
    int N = up_to;
    std::vector<NerveLevel> levels(N + 1);
    levels[0].tuples.push_back({});
    levels[0].index[{}] = 0;

    for (int m = 1; m <= N; ++m) {
        auto ps = pairs_of(m);
        auto ts = triples_of(m);
        std::vector<int> cur(ps.size() + ts.size(), -1);
        // choose edge labels, then coherence arrows with the square condition
        std::function<void(size_t)> choose_h = [&](size_t hi) {
            if (hi == ts.size()) {
                levels[m].index[cur] = (int)levels[m].tuples.size();
                levels[m].tuples.push_back(cur);
                return;
            }
            auto [i, j, k] = ts[hi];
            TupleView v(m, cur);
            int gij = v.g(i, j), gjk = v.g(j, k), gik = v.g(i, k);
            int from = T.mul_obj[gij][gjk];
            for (int a = 0; a < T.narr(); ++a) {
                if (T.src[a] != from || T.tgt[a] != gik) continue;
                cur[ps.size() + hi] = a;
                // the coherence square is checked once all triples are set
                bool ok = true;
                if (hi + 1 == ts.size()) {
                    TupleView w(m, cur);
                    for (int a0 = 0; a0 <= m && ok; ++a0)
                        for (int b0 = a0 + 1; b0 <= m && ok; ++b0)
                            for (int c0 = b0 + 1; c0 <= m && ok; ++c0)
                                for (int d0 = c0 + 1; d0 <= m && ok; ++d0) {
                                    int hijl = w.h(a0, b0, d0), hjkl = w.h(b0, c0, d0);
                                    int hijk = w.h(a0, b0, c0), hikl = w.h(a0, c0, d0);
                                    int gij2 = w.g(a0, b0), gkl = w.g(c0, d0);
                                    int lhs = T.comp[hijl][T.mul_arr[T.id_arrow[gij2]][hjkl]];
                                    int rhs = T.comp[hikl][T.comp[T.mul_arr[hijk][T.id_arrow[gkl]]]
                                                            [T.assoc[gij2][w.g(b0, c0)][gkl]]];
                                    if (lhs != rhs) ok = false;
                                }
                }
                if (ok) choose_h(hi + 1);
            }
            cur[ps.size() + hi] = -1;
        };
        std::function<void(size_t)> choose_g = [&](size_t gi) {
            if (gi == ps.size()) {
                choose_h(0);
                return;
            }
            for (int g = 0; g < T.nobj; ++g) {
                cur[gi] = g;
                choose_g(gi + 1);
            }
            cur[gi] = -1;
        };
        choose_g(0);
    }

    FinSimplicialSet X;
    X.N = N;
    X.size.resize(N + 1);
    for (int m = 0; m <= N; ++m) X.size[m] = (int)levels[m].tuples.size();
    X.face.assign(N + 1, {});
    X.degen.assign(std::max(N, 0), {});

    auto map_tuple = [&](int m, const std::vector<int>& t,
                         const std::vector<int>& vmap, int target_m) {
        // image tuple under the vertex reindexing vmap: [m'] -> [m]
        TupleView v(m, t);
        auto ps = pairs_of(target_m);
        auto ts = triples_of(target_m);
        std::vector<int> out(ps.size() + ts.size());
        for (size_t q = 0; q < ps.size(); ++q) {
            int a = vmap[ps[q].first], b = vmap[ps[q].second];
            out[q] = (a == b) ? T.unit_obj : v.g(a, b);
        }
        for (size_t q = 0; q < ts.size(); ++q) {
            auto [i, j, k] = ts[q];
            int a = vmap[i], b = vmap[j], c = vmap[k];
            int val;
            if (a == b)
                val = T.id_arrow[(b == c) ? T.unit_obj : v.g(b, c)];
            else if (b == c)
                val = T.id_arrow[v.g(a, b)];
            else
                val = v.h(a, b, c);
            out[ps.size() + q] = val;
        }
        return out;
    };

    for (int m = 1; m <= N; ++m) {
        X.face[m].assign(m + 1, std::vector<int>(X.size[m]));
        for (int i = 0; i <= m; ++i) {
            std::vector<int> vmap;
            for (int vtx = 0; vtx <= m; ++vtx)
                if (vtx != i) vmap.push_back(vtx);
            for (int x = 0; x < X.size[m]; ++x)
                X.face[m][i][x] =
                    levels[m - 1].index.at(map_tuple(m, levels[m].tuples[x], vmap, m - 1));
        }
    }
    for (int m = 0; m < N; ++m) {
        X.degen[m].assign(m + 1, std::vector<int>(X.size[m]));
        for (int i = 0; i <= m; ++i) {
            std::vector<int> vmap;  // s^i vertex map: [m+1] -> [m]
            for (int vtx = 0; vtx <= m + 1; ++vtx) vmap.push_back(vtx <= i ? vtx : vtx - 1);
            for (int x = 0; x < X.size[m]; ++x)
                X.degen[m][i][x] =
                    levels[m + 1].index.at(map_tuple(m, levels[m].tuples[x], vmap, m + 1));
        }
    }
    X.coskeletal = true;
    X.validate();
    return X;
}

// ---- inverse construction -----------------------------------------------------

namespace {

int unique_fill3(const FinSimplicialSet& X, const std::map<int, int>& faces) {
    int found = -1;
    for (int y = 0; y < X.size[3]; ++y) {
        bool ok = true;
        for (auto& [i, f] : faces)
            if (X.d(3, i, y) != f) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (found >= 0) throw std::invalid_argument("two_group_from_kan: filler not unique");
        found = y;
    }
    if (found < 0) throw std::invalid_argument("two_group_from_kan: missing 3-filler");
    return found;
}

int lexmin2(const FinSimplicialSet& X, int d0, int d1, int d2) {
    // -1 = unconstrained
    for (int y = 0; y < X.size[2]; ++y) {
        if (d0 >= 0 && X.d(2, 0, y) != d0) continue;
        if (d1 >= 0 && X.d(2, 1, y) != d1) continue;
        if (d2 >= 0 && X.d(2, 2, y) != d2) continue;
        return y;
    }
    throw std::invalid_argument("two_group_from_kan: missing 2-filler");
}

}  // namespace

CoherentTwoGroup two_group_from_kan(const FinSimplicialSet& X) {
    if (!X.reduced()) throw std::invalid_argument("two_group_from_kan: not reduced");
    if (X.N < 3) throw std::invalid_argument("two_group_from_kan: need levels up to 3");
    if (!is_kan(X, std::min(X.N, 3)).kan)
        throw std::invalid_argument("two_group_from_kan: not Kan");
    if (!unique_fillers_above(X, 2))
        throw std::invalid_argument("two_group_from_kan: fillers above dimension 2 not unique");

    CoherentTwoGroup T;
    T.nobj = X.size[1];
    T.unit_obj = X.basepoint(1);
    int star2 = X.basepoint(1);

    // arrows: 2-simplices with d2 at the basepoint edge
    std::vector<int> arrows;
    std::map<int, int> arrow_index;
    for (int x = 0; x < X.size[2]; ++x)
        if (X.d(2, 2, x) == star2) {
            arrow_index[x] = (int)arrows.size();
            arrows.push_back(x);
        }
    int na = (int)arrows.size();
    T.src.resize(na);
    T.tgt.resize(na);
    for (int i = 0; i < na; ++i) {
        T.src[i] = X.d(2, 1, arrows[i]);
        T.tgt[i] = X.d(2, 0, arrows[i]);
    }
    T.id_arrow.resize(T.nobj);
    for (int g = 0; g < T.nobj; ++g) T.id_arrow[g] = arrow_index.at(X.s(1, 0, g));

    // composition via the unique Lambda[3,1] filler
    T.comp.assign(na, std::vector<int>(na, -1));
    int star3 = X.basepoint(2);
    for (int b = 0; b < na; ++b)
        for (int a = 0; a < na; ++a) {
            if (T.src[b] != T.tgt[a]) continue;
            int w = unique_fill3(X, {{0, arrows[b]}, {2, arrows[a]}, {3, star3}});
            T.comp[b][a] = arrow_index.at(X.d(3, 1, w));
        }

    // object products by lexicographically minimal fillers
    T.mul_obj.assign(T.nobj, std::vector<int>(T.nobj));
    std::vector<std::vector<int>> chosen(T.nobj, std::vector<int>(T.nobj));
    for (int g = 0; g < T.nobj; ++g)
        for (int h = 0; h < T.nobj; ++h) {
            int x = lexmin2(X, g, -1, h);
            chosen[g][h] = x;
            T.mul_obj[g][h] = X.d(2, 1, x);
        }

    auto left_whisker = [&](int a, int h) {  // a: g -> g~ times id_h
        int g = T.src[a], gt = T.tgt[a];
        int gh = T.mul_obj[g][h], gth = T.mul_obj[gt][h];
        int w2 = lexmin2(X, -1, g, gh);
        int v2 = X.d(2, 0, w2);
        int tau = lexmin2(X, v2, gt, gth);
        int z = unique_fill3(X, {{0, tau}, {1, w2}, {2, arrows[a]}});
        return arrow_index.at(X.d(3, 3, z));
    };
    auto right_whisker = [&](int g, int b) {  // id_g times b: h -> h~
        int h = T.src[b], ht = T.tgt[b];
        int gh = T.mul_obj[g][h], ght = T.mul_obj[g][ht];
        int w = lexmin2(X, -1, h, gh);
        int v = X.d(2, 0, w);
        int tau = lexmin2(X, v, ht, ght);
        int z = unique_fill3(X, {{0, tau}, {1, w}, {2, arrows[b]}});
        return arrow_index.at(X.d(3, 3, z));
    };

    T.mul_arr.assign(na, std::vector<int>(na));
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            int first = right_whisker(T.src[a], b);   // gh -> gh~
            int second = left_whisker(a, T.tgt[b]);   // gh~ -> g~h~
            T.mul_arr[a][b] = T.comp[second][first];
        }

    // associator via two unique fillers and the co-arrow conversion
    T.assoc.assign(T.nobj,
                   std::vector<std::vector<int>>(T.nobj, std::vector<int>(T.nobj)));
    for (int g = 0; g < T.nobj; ++g)
        for (int h = 0; h < T.nobj; ++h)
            for (int k = 0; k < T.nobj; ++k) {
                int hk = T.mul_obj[h][k], gh = T.mul_obj[g][h];
                (void)gh;
                int t1 = unique_fill3(X, {{0, chosen[g][h]},
                                          {2, chosen[T.mul_obj[g][h]][k]},
                                          {3, chosen[h][k]}});
                int w = X.d(3, 1, t1);  // witness (d0,d1,d2) = (g, (gh)k, hk)
                int t2 = unique_fill3(
                    X, {{0, X.s(1, 1, g)}, {2, w}, {3, chosen[g][hk]}});
                int rho = X.d(3, 1, t2);  // (d0,d1,d2) = (*, (gh)k, g(hk))
                int p = X.d(2, 2, rho);
                int t3 = unique_fill3(
                    X, {{0, rho}, {1, X.s(1, 1, p)}, {3, X.s(1, 0, p)}});
                T.assoc[g][h][k] = arrow_index.at(X.d(3, 2, t3));
            }

    T.validate();
    return T;
}

// ---- equivalence ---------------------------------------------------------------

namespace {

std::vector<std::vector<int>> group_isomorphisms(const FiniteGroup& A,
                                                 const FiniteGroup& B) {
    std::vector<std::vector<int>> out;
    if (A.order != B.order) return out;
    std::vector<int> perm(A.order);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[A.unit] != B.unit) continue;
        bool hom = true;
        for (int a = 0; a < A.order && hom; ++a)
            for (int b = 0; b < A.order && hom; ++b)
                if (perm[A.mul[a][b]] != B.mul[perm[a]][perm[b]]) hom = false;
        if (hom) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// associator 3-cochain valued in pi1, via translation of Aut(ghk) to Aut(e)
std::vector<std::vector<std::vector<int>>> associator_cochain(const CoherentTwoGroup& T,
                                                              const FiniteGroup& p1,
                                                              const std::vector<int>& aut_list) {
    int n = T.nobj;
    std::map<int, int> pos;
    for (size_t i = 0; i < aut_list.size(); ++i) pos[aut_list[i]] = (int)i;
    // object inverses
    std::vector<int> inv(n, -1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (T.mul_obj[h][g] == T.unit_obj) inv[g] = h;
    std::vector<std::vector<std::vector<int>>> c(
        n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                int a = T.assoc[g][h][k];
                int x = T.src[a];  // = ghk for skeletal input
                int moved = T.mul_arr[T.id_arrow[inv[x]]][a];
                if (T.src[moved] != T.unit_obj || T.tgt[moved] != T.unit_obj)
                    throw std::invalid_argument(
                        "two_groups_equivalent: could not center the associator");
                c[g][h][k] = pos.at(moved);
            }
    (void)p1;
    return c;
}

}  // namespace

bool two_groups_equivalent(const CoherentTwoGroup& A, const CoherentTwoGroup& B) {
    if (!A.skeletal() || !B.skeletal())
        throw std::invalid_argument("two_groups_equivalent: skeletal presentations only");
    FiniteGroup a0 = A.pi0(), b0 = B.pi0();
    FiniteGroup a1 = A.pi1(), b1 = B.pi1();
    auto isos0 = group_isomorphisms(a0, b0);
    auto isos1 = group_isomorphisms(a1, b1);
    if (isos0.empty() || isos1.empty()) return false;

    std::vector<int> autA, autB;
    for (int a = 0; a < A.narr(); ++a)
        if (A.src[a] == A.unit_obj && A.tgt[a] == A.unit_obj) autA.push_back(a);
    for (int b = 0; b < B.narr(); ++b)
        if (B.src[b] == B.unit_obj && B.tgt[b] == B.unit_obj) autB.push_back(b);
    auto cA = associator_cochain(A, a1, autA);
    auto cB = associator_cochain(B, b1, autB);

    int n = a0.order, q = a1.order;
    long total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= q;
        if (total > 2000000)
            throw std::invalid_argument("two_groups_equivalent: search space too large");
    }
    auto inv1 = [&](int x) {
        for (int y = 0; y < q; ++y)
            if (b1.mul[x][y] == b1.unit) return y;
        return -1;
    };
    for (auto& f0 : isos0)
        for (auto& f1 : isos1) {
            // inverse of f0 to push cA onto B coordinates
            std::vector<int> f0inv(n);
            for (int g = 0; g < n; ++g) f0inv[f0[g]] = g;
            // difference cochain e = (f1 . cA . f0^{-1}) - cB must be a
            // coboundary of some beta: pi0(B)^2 -> pi1(B)
            std::vector<std::vector<std::vector<int>>> e(
                n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        e[x][y][z] = b1.mul[f1[cA[f0inv[x]][f0inv[y]][f0inv[z]]]]
                                           [inv1(cB[x][y][z])];
            std::vector<int> beta(n * n, 0);
            std::function<bool(int)> rec = [&](int pos) -> bool {
                if (pos == n * n) {
                    auto bta = [&](int x, int y) { return beta[x * n + y]; };
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y)
                            for (int z = 0; z < n; ++z) {
                                int db = bta(y, z);
                                db = b1.mul[db][inv1(bta(b0.mul[x][y], z))];
                                db = b1.mul[db][bta(x, b0.mul[y][z])];
                                db = b1.mul[db][inv1(bta(x, y))];
                                if (e[x][y][z] != db) return false;
                            }
                    return true;
                }
                for (int v = 0; v < q; ++v) {
                    beta[pos] = v;
                    if (rec(pos + 1)) return true;
                }
                return false;
            };
            if (rec(0)) return true;
        }
    return false;
}

}  // namespace lk
