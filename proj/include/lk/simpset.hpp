#ifndef LK_SIMPSET_HPP
#define LK_SIMPSET_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lk {

/// Finite simplicial set truncated at dimension N: simplex label sets
/// X_0..X_N with face and degeneracy tables.  The coskeletal flag records
/// that simplices above N are meant to be determined by their horns.
struct FinSimplicialSet {
    int N = 0;
    std::vector<int> size;                             // per level 0..N
    std::vector<std::vector<std::vector<int>>> face;   // face[m][i][x], 1 <= m <= N
    std::vector<std::vector<std::vector<int>>> degen;  // degen[m][i][x], 0 <= m < N
    bool coskeletal = false;

    void validate() const;  // simplicial identities, table shapes
    bool reduced() const { return !size.empty() && size[0] == 1; }
    int d(int m, int i, int x) const { return face[m][i][x]; }
    int s(int m, int i, int x) const { return degen[m][i][x]; }
    /// Iterated degeneracy of the basepoint (reduced complexes).
    int basepoint(int m) const;
    /// Iterated face along a strictly increasing vertex subset: the face of
    /// x in X_m spanned by `keep` (|keep| = d+1 vertices).
    int face_by_vertices(int m, int x, const std::vector<int>& keep) const;
};

/// A horn datum: candidate faces for all indices except j.
struct HornMap {
    int m = 0, j = 0;
    std::map<int, int> faces;
    std::string str() const;
};

std::vector<int> horn_fillers(const FinSimplicialSet& X, const HornMap& h);
/// Enumerates every map Lambda[m,j] -> X (compatible face tuples).
std::vector<HornMap> enumerate_horns(const FinSimplicialSet& X, int m, int j);

struct KanReport {
    bool kan = true;
    std::optional<HornMap> counterexample;
};
/// Exhaustive Kan check for 1 <= m <= up_to (requires up_to <= N).
KanReport is_kan(const FinSimplicialSet& X, int up_to);
/// Unique horn fillers for all n < m <= N (the Lie n-group condition at the
/// level of sets); levels above N are covered by the coskeletal flag.
bool unique_fillers_above(const FinSimplicialSet& X, int n);

/// Finite group given by its multiplication table.
struct FiniteGroup {
    int order = 0;
    int unit = 0;
    std::vector<std::vector<int>> mul;

    void validate() const;
    bool is_abelian() const;
    std::vector<int> element_orders() const;  // sorted
    bool isomorphic_cyclic(int n) const;
    std::string str() const;
};

FiniteGroup cyclic_group(int n);

/// Simplicial homotopy group of a reduced Kan complex (needs levels up to
/// n+1 and the Kan property there); throws std::invalid_argument otherwise.
/// The group law is by horn filling and is checked to be independent of the
/// filler choice.
FiniteGroup pi_n(const FinSimplicialSet& X, int n);

enum class SimpTruncMode { LE, LT };

/// Postnikov truncations: LT (Moore) quotients by agreement on the
/// (n-1)-skeleton; LE (Duskin) by simplicial homotopy rel the (n-1)-skeleton
/// (exhaustive prism search).  The output is truncated at N-1 for LE (level
/// N classes would need level N+1 homotopies) and at N for LT.
FinSimplicialSet truncate_simpset(const FinSimplicialSet& X, int n, SimpTruncMode mode);

/// Are x, x' in X_m simplicially homotopic relative to the (n-1)-skeleton?
bool homotopic_rel_skeleton(const FinSimplicialSet& X, int m, int x, int xp, int n);

/// Subcomplex of the standard simplex Delta[n]: a downward-closed set of
/// nonempty vertex subsets.
struct SubComplex {
    int n = 0;
    std::set<std::vector<int>> faces;  // sorted vertex lists

    void validate() const;
    static SubComplex full(int n);
    static SubComplex horn(int n, int j);
    static SubComplex boundary(int n);
    bool contains(const std::vector<int>& f) const { return faces.count(f) > 0; }
};

struct CollapseStep {
    std::vector<int> simplex;  // the filled simplex
    int missing_index;         // the free face index j of the horn
};

/// A collapsing filtration from a vertex by horn fills, or nullopt after an
/// exhaustive search.
std::optional<std::vector<CollapseStep>> find_collapse(const SubComplex& S);

// -- builders ---------------------------------------------------------------

FinSimplicialSet point_complex(int N);
/// The standard simplex Delta[n] (all monotone maps), truncated at N.
FinSimplicialSet standard_simplex(int n, int N);
/// The horn / boundary subcomplexes of Delta[n], truncated at N.
FinSimplicialSet horn_complex(int n, int j, int N);
FinSimplicialSet boundary_complex(int n, int N);
/// Classifying complex of a finite group, truncated at N.
FinSimplicialSet k_g_1(const FiniteGroup& G, int N);

}  // namespace lk

#endif
