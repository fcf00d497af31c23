#ifndef SSET_LIFTING_HPP
#define SSET_LIFTING_HPP

#include "sset/functors.hpp"

namespace sset {

// Exhaustive searches below refuse inputs beyond this many non-degenerate
// generators; the square enumeration is exponential.
constexpr int kEnumerationGuard = 32;

// All simplicial maps X -> Y (pointed if requested), by dimension-increasing
// backtracking over generator images with face-compatibility pruning.
// Deterministic order.
std::vector<SimplicialMap> enumerate_homs(const PresPtr& x, const PresPtr& y,
                                          bool pointed = false);

struct LiftingSquare {
    SimplicialMap i;       // A -> B
    SimplicialMap p;       // X -> Y
    SimplicialMap top;     // A -> X
    SimplicialMap bottom;  // B -> Y

    // p o top == bottom o i
    bool commutes() const;
};

// A lift h: B -> X with h o i = top and p o h = bottom, if one exists.
std::optional<SimplicialMap> solve_lifting(const LiftingSquare& sq);
std::vector<SimplicialMap> all_lifts(const LiftingSquare& sq);

struct RlpResult {
    bool holds;
    std::optional<LiftingSquare> witness;  // an unsolvable square
};

// Right lifting property of p against i: every commuting square from i to p
// admits a lift.  Enumerates commuting squares exhaustively.
RlpResult has_rlp(const SimplicialMap& p, const SimplicialMap& i);

struct HornWitness {
    int n;
    int k;
    std::vector<SimplexRef> face_images;  // images of d_r(sigma), r != k, by r
};

struct KanResult {
    bool kan;
    std::optional<HornWitness> witness;  // first unfillable horn
};

// Fillability of every horn map Lambda[n,k] -> X for n <= bound.
KanResult is_kan_up_to(const PresPtr& x, int bound);

struct FibrationResult {
    bool holds;
    std::optional<LiftingSquare> witness;
    int failed_n = -1, failed_k = -1;
};

// has_rlp(p, j_{n,k}) for all n <= bound.
FibrationResult is_kan_fibration_up_to(const SimplicialMap& p, int bound);

// has_rlp(p, R1(j_{n,k})) for 3 <= n <= bound: the bounded form of the
// reduced-horn fibrancy detector.
FibrationResult rlp_against_reduced_horns(const SimplicialMap& p, int bound);

// Function complex of two pointed finite complexes, truncated at `bound`:
// n-simplices are the pointed maps X ^ Delta[n]_+ -> Y.
struct FiniteMapSpace {
    PresPtr x, y;
    int bound;
    std::vector<std::vector<SimplicialMap>> level;  // per dimension 0..bound
    // structure maps as index tables: face[n][i][s] is the index of
    // d_i(level[n][s]) in level[n-1]; deg[n][i][s] similarly in level[n+1]
    std::vector<std::vector<std::vector<int>>> face;
    std::vector<std::vector<std::vector<int>>> deg;
};

FiniteMapSpace mapping_space(const PresPtr& x, const PresPtr& y, int bound);

}  // namespace sset

#endif
