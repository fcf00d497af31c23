#ifndef SSET_COMPLEXES_HPP
#define SSET_COMPLEXES_HPP

#include <set>

#include "sset/constructions.hpp"

namespace sset {

// Standard n-simplex: generators in dimension k are the (k+1)-element vertex
// subsets of {0..n}, faces by vertex deletion.
Presentation standard_simplex(int n);

struct InclusionResult {
    PresPtr pres;
    SimplicialMap inclusion;
};

// Boundary of the standard simplex (empty for n = 0) with its inclusion i_n.
InclusionResult boundary_complex(int n);

// Horn: the boundary minus the face opposite vertex k, with inclusion j_{n,k}.
InclusionResult horn_complex(int n, int k);

// Quotient of the standard simplex by its boundary: one vertex, one
// non-degenerate n-simplex.  Pointed; 1-reduced for n >= 2.
PresPtr simplicial_sphere(int n);

// Vertex-ordered minimal triangulation of the real projective plane:
// 6 vertices, 15 edges, 10 triangles.
PresPtr rp2_model();

struct CorpusEntry {
    std::string name;
    PresPtr pres;
    std::set<std::string> tags;

    bool has_tag(const std::string& t) const { return tags.count(t) > 0; }
};

// The deterministic test corpus used by the property suites and the
// verification runner.  Every entry passes validate().
const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace sset

#endif
