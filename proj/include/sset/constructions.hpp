#ifndef SSET_CONSTRUCTIONS_HPP
#define SSET_CONSTRUCTIONS_HPP

#include <functional>
#include <map>

#include "sset/smap.hpp"

namespace sset {

// Generator-level subcomplex membership.  Subcomplexes are always given
// explicitly and checked for face-closure, never inferred.
struct Subcomplex {
    std::vector<std::vector<bool>> member;  // per dimension, per generator index

    bool contains(int dim, int idx) const {
        return dim >= 0 && dim < static_cast<int>(member.size()) &&
               idx < static_cast<int>(member[dim].size()) && member[dim][idx];
    }
    bool empty_set() const;
};

Subcomplex subcomplex_from_predicate(const Presentation& x,
                                     const std::function<bool(int, int)>& pred);
Subcomplex subcomplex_from_ids(const Presentation& x,
                               const std::vector<std::pair<int, std::string>>& ids);
// "" when face-closed, else a description of the first defect.
std::string subcomplex_face_closure_defect(const Presentation& x, const Subcomplex& a);

// The categorical product, materialized in all dimensions (non-degenerate
// pair simplices live in dimensions up to the sum of the factors' top
// dimensions).  Keeps the pair decomposition of every generator so that
// arbitrary pair simplices can be renormalized into it.
class Product {
public:
    Product(PresPtr x, PresPtr y);

    const PresPtr& presentation() const { return pres_; }
    const PresPtr& left() const { return x_; }
    const PresPtr& right() const { return y_; }

    // Components of a product generator.
    const std::pair<SimplexRef, SimplexRef>& components(int dim, int idx) const {
        return comps_[dim][idx];
    }

    // The product simplex (a, b) as a normalized ref into the product
    // presentation; a and b must be normalized refs of equal dimension.
    SimplexRef pair_ref(SimplexRef a, SimplexRef b) const;

    SimplicialMap proj_left() const;
    SimplicialMap proj_right() const;

private:
    PresPtr x_, y_, pres_;
    std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> comps_;
    std::map<std::pair<SimplexRef, SimplexRef>, std::pair<int, int>> lookup_;
};

struct QuotientResult {
    PresPtr pres;          // pointed at the collapsed class
    SimplicialMap map;     // X -> X/A, surjective on generators
};

// Collapse a non-empty face-closed subcomplex to a single vertex.  The class
// keeps the basepoint id of X if the basepoint is collapsed, otherwise the
// smallest collapsed vertex id.
QuotientResult quotient(const PresPtr& x, const Subcomplex& a, const std::string& name = "");

struct WedgeResult {
    PresPtr pres;
    SimplicialMap left;   // X -> X v Y
    SimplicialMap right;  // Y -> X v Y
};

WedgeResult wedge(const PresPtr& x, const PresPtr& y);

struct PointedResult {
    PresPtr pres;             // Z_+
    SimplicialMap inclusion;  // Z -> Z_+
};

PointedResult disjoint_basepoint(const PresPtr& z);

struct SmashResult {
    PresPtr pres;
    std::shared_ptr<const Product> product;  // X x Z
    SimplicialMap collapse;                  // X x Z -> X ^ Z
};

// Quotient of the product by the wedge of axes.
SmashResult smash(const PresPtr& x, const PresPtr& z);

// X ^ Z -> X' ^ Z' induced by f: X -> X' and g: Z -> Z' (both pointed).
SimplicialMap smash_functor_map(const SmashResult& s, const SmashResult& t,
                                const SimplicialMap& f, const SimplicialMap& g);

}  // namespace sset

#endif
