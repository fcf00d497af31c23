#ifndef SSET_FUNCTORS_HPP
#define SSET_FUNCTORS_HPP

#include "sset/complexes.hpp"

namespace sset {

// 0- and 1-dimensional data of a simplicial set, degenerate edges included.
struct TruncatedData {
    std::vector<SimplexRef> vertices;
    std::vector<SimplexRef> edges;
    std::vector<int> d0, d1;  // edge index -> vertex index
    std::vector<int> s0;      // vertex index -> edge index
};

TruncatedData truncate1(const Presentation& x);

// Subcomplex generated by the simplices of dimension <= 1.
InclusionResult skeleton1(const PresPtr& x);

struct CoskeletonResult {
    PresPtr pres;
    // Canonical map X -> cosk, present when top_dim(X) <= bound.
    std::optional<SimplicialMap> canonical;
};

// 1-coskeleton truncated at `bound`: for 2 <= n <= bound the n-simplices are
// the edge/vertex labellings of the 1-skeleton of the standard n-simplex,
// with degenerate labellings identified by their traces.
CoskeletonResult coskeleton1(const PresPtr& x, int bound);

struct ReductionResult {
    PresPtr pres;          // 1-reduced
    SimplicialMap map;     // quotient X -> R1(X)
};

// Quotient by the 1-skeleton.
ReductionResult reduce1(const PresPtr& x);

// Functorial action on maps.
SimplicialMap reduce1_map(const SimplicialMap& f);

// Largest subcomplex all of whose simplices have every vertex at the
// basepoint and every edge degenerate; computed by the direct filter.
InclusionResult eilenberg1(const PresPtr& x);

// Unique factorization of f: X -> Y (Y 1-reduced) through the quotient
// X -> R1(X).
SimplicialMap factor_through_reduction(const SimplicialMap& f);

// Corestriction of a pointed map f: X -> Y (X 1-reduced) onto E1(Y).
SimplicialMap factor_through_eilenberg(const SimplicialMap& f);

struct NamedMap {
    std::string name;
    SimplicialMap map;
};

// Deterministic list of well-formed corpus maps (inclusions, quotients,
// projections, constants, identities) used by the property suites.
const std::vector<NamedMap>& corpus_maps();

}  // namespace sset

#endif
