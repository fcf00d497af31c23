#ifndef SSET_HOMOLOGY_HPP
#define SSET_HOMOLOGY_HPP

#include "sset/abelian.hpp"
#include "sset/smap.hpp"

namespace sset {

// Chain complex of free Z-modules with named generators; boundary[n] maps
// degree n to degree n-1 (boundary[0] has zero rows).  d o d = 0 is checked
// at construction.
struct ChainComplexZ {
    std::vector<std::vector<std::string>> cells;
    std::vector<IntMatrix> boundary;

    int top_degree() const { return static_cast<int>(cells.size()) - 1; }
    int dim(int n) const {
        return n >= 0 && n <= top_degree() ? static_cast<int>(cells[n].size()) : 0;
    }
    void check_dd_zero() const;  // throws on failure
};

// Normalized chains: generators are the non-degenerate simplices, the
// boundary is the alternating face sum with degenerate faces dropped.
ChainComplexZ chain_complex(const Presentation& x);

struct ChainMapZ {
    ChainComplexZ source, target;
    std::vector<IntMatrix> matrix;  // per degree, target-dim x source-dim

    void check_commutes() const;  // throws if the squares fail
};

// Chain-level shadow of a simplicial map (degenerate images contribute 0).
ChainMapZ induced_map(const SimplicialMap& f);

ChainMapZ identity_chain_map(const ChainComplexZ& c);
ChainMapZ compose(const ChainMapZ& g, const ChainMapZ& f);

// Cone(f)_n = target_n + source_{n-1}, d(y, x) = (dy + f(x), -dx).
// Acyclic exactly when f is a quasi-isomorphism.
ChainComplexZ mapping_cone(const ChainMapZ& f);

std::vector<FGAbGroup> homology(const ChainComplexZ& c);
std::vector<FGAbGroup> homology_Z(const Presentation& x);
std::vector<FGAbGroup> homology_localized(const Presentation& x, const PrimeSet& p);

struct LocalIsoReport {
    bool holds;
    // degree, cone homology there, what survives localization
    struct Degree {
        int n;
        FGAbGroup cone;
        FGAbGroup localized;
    };
    std::vector<Degree> degrees;
};

// Cone homology of a chain map, degree by degree, with what survives
// localization; holds iff everything dies.
LocalIsoReport local_iso_report(const ChainMapZ& f, const PrimeSet& p);

// f induces isomorphisms on homology with localized coefficients iff every
// cone homology group dies under localization.
LocalIsoReport is_local_homology_iso(const SimplicialMap& f, const PrimeSet& p);

// Decision procedure for weak equivalences of the localized structure on
// finite 1-reduced complexes: local homology isomorphism equals local
// homotopy equivalence under 1-connectedness.  Refuses inputs that are not
// 1-reduced.
LocalIsoReport is_local_weq_one_reduced(const SimplicialMap& f, const PrimeSet& p);

// --- fundamental group -------------------------------------------------------

struct GroupPresentation {
    std::vector<std::string> generators;
    // relator letters: +(i+1) for generator i, -(i+1) for its inverse
    std::vector<std::vector<int>> relators;

    std::string to_string() const;
};

// Edge-path presentation from a breadth-first spanning tree of the
// 1-skeleton; non-degenerate 2-simplices contribute one relator each.
// Single-letter relators are eliminated iteratively.  Requires a connected
// complex.
GroupPresentation pi1_presentation(const Presentation& x,
                                   const std::string& base_vertex = "");

FGAbGroup abelianization(const GroupPresentation& g);

}  // namespace sset

#endif
