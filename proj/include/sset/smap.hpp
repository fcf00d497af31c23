#ifndef SSET_SMAP_HPP
#define SSET_SMAP_HPP

#include <memory>

#include "sset/core.hpp"

namespace sset {

using PresPtr = std::shared_ptr<const Presentation>;

PresPtr share(Presentation p);

// A simplicial map, stored as the image of every non-degenerate generator of
// the source.  Images may be degenerate.
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(PresPtr src, PresPtr dst, std::vector<std::vector<SimplexRef>> images)
        : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {}

    const Presentation& source() const { return *src_; }
    const Presentation& target() const { return *dst_; }
    const PresPtr& source_ptr() const { return src_; }
    const PresPtr& target_ptr() const { return dst_; }

    const SimplexRef& image(int dim, int idx) const { return images_[dim][idx]; }
    const std::vector<std::vector<SimplexRef>>& images() const { return images_; }

    // Image of an arbitrary simplex, normalized in the target.
    SimplexRef apply(const SimplexRef& s) const;

    // Dimension preservation and commutation with every face operator;
    // if `pointed`, also basepoint preservation.
    ValidationReport check(bool pointed = false) const;

    bool is_identity_shaped() const;  // same presentation, generator to itself

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
        return *a.src_ == *b.src_ && *a.dst_ == *b.dst_ && a.images_ == b.images_;
    }

private:
    PresPtr src_, dst_;
    std::vector<std::vector<SimplexRef>> images_;  // per dim, per generator idx
};

SimplicialMap identity_map(const PresPtr& x);

// The unique map collapsing everything to the target's basepoint.
SimplicialMap constant_map(const PresPtr& x, const PresPtr& y);

// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Injective in every dimension: equivalently, images of non-degenerate
// generators are non-degenerate and pairwise distinct.
bool is_mono(const SimplicialMap& f);

// Mono with equal generator counts in every dimension.
bool is_iso(const SimplicialMap& f);

// Builds a map from id-level assignments "generator id -> (word, target id)".
// Throws on unknown ids; check() is the caller's business.
struct Assignment {
    int dim;
    std::string from;
    Word word;
    std::string to;
};
SimplicialMap map_from_assignments(const PresPtr& src, const PresPtr& dst,
                                   const std::vector<Assignment>& entries);

}  // namespace sset

#endif
