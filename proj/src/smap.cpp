#include "sset/smap.hpp"

#include <algorithm>
#include <set>

namespace sset {

PresPtr share(Presentation p) {
    return std::make_shared<const Presentation>(std::move(p));
}

SimplexRef SimplicialMap::apply(const SimplexRef& s) const {
    SimplexRef out = images_[s.tdim][s.tidx];
    for (auto it = s.word.rbegin(); it != s.word.rend(); ++it)
        out = dst_->degeneracy(out, *it);
    return out;
}

ValidationReport SimplicialMap::check(bool pointed) const {
    ValidationReport rep;
    const Presentation& X = *src_;
    if (static_cast<int>(images_.size()) < X.top_dim() + 1) {
        rep.issues.push_back("assignment misses whole dimensions");
        return rep;
    }
    for (int d = 0; d <= X.top_dim(); ++d) {
        if (static_cast<int>(images_[d].size()) != X.count(d)) {
            rep.issues.push_back("assignment at dimension " + std::to_string(d) +
                                 " has wrong size");
            return rep;
        }
        for (int idx = 0; idx < X.count(d); ++idx) {
            const SimplexRef& im = images_[d][idx];
            if (im.dim() != d) {
                rep.issues.push_back("generator '" + X.generator(d, idx).id +
                                     "' maps to a simplex of dimension " +
                                     std::to_string(im.dim()));
                continue;
            }
            for (int i = 0; i <= d && d >= 1; ++i) {
                SimplexRef lhs = apply(X.face(X.ref(d, idx), i));
                SimplexRef rhs = dst_->face(im, i);
                if (!(lhs == rhs))
                    rep.issues.push_back("face d" + std::to_string(i) +
                                         " does not commute on generator '" +
                                         X.generator(d, idx).id + "'");
            }
        }
    }
    if (pointed) {
        if (!X.has_basepoint() || !dst_->has_basepoint())
            rep.issues.push_back("missing basepoint");
        else if (images_[0][X.basepoint()] != dst_->ref(0, dst_->basepoint()))
            rep.issues.push_back("basepoint is not preserved");
    }
    return rep;
}

bool SimplicialMap::is_identity_shaped() const {
    if (!(*src_ == *dst_)) return false;
    for (int d = 0; d < static_cast<int>(images_.size()); ++d)
        for (int idx = 0; idx < static_cast<int>(images_[d].size()); ++idx)
            if (!(images_[d][idx] == SimplexRef{{}, d, idx})) return false;
    return true;
}

SimplicialMap identity_map(const PresPtr& x) {
    std::vector<std::vector<SimplexRef>> images(x->top_dim() + 1);
    for (int d = 0; d <= x->top_dim(); ++d)
        for (int idx = 0; idx < x->count(d); ++idx) images[d].push_back(x->ref(d, idx));
    return SimplicialMap(x, x, std::move(images));
}

SimplicialMap constant_map(const PresPtr& x, const PresPtr& y) {
    int bp = y->basepoint();
    std::vector<std::vector<SimplexRef>> images(x->top_dim() + 1);
    for (int d = 0; d <= x->top_dim(); ++d) {
        SimplexRef im = y->ref(0, bp);
        for (int i = 0; i < d; ++i) im = y->degeneracy(im, i);
        images[d].assign(x->count(d), im);
    }
    return SimplicialMap(x, y, std::move(images));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.target() == g.source())) throw Error("compose: ends do not match");
    std::vector<std::vector<SimplexRef>> images(f.source().top_dim() + 1);
    for (int d = 0; d <= f.source().top_dim(); ++d)
        for (int idx = 0; idx < f.source().count(d); ++idx)
            images[d].push_back(g.apply(f.image(d, idx)));
    return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(images));
}

bool is_mono(const SimplicialMap& f) {
    for (int d = 0; d <= f.source().top_dim(); ++d) {
        std::set<std::pair<int, int>> seen;
        for (int idx = 0; idx < f.source().count(d); ++idx) {
            const SimplexRef& im = f.image(d, idx);
            if (im.degenerate()) return false;
            if (!seen.insert({im.tdim, im.tidx}).second) return false;
        }
    }
    return true;
}

bool is_iso(const SimplicialMap& f) {
    if (!is_mono(f)) return false;
    int top = std::max(f.source().top_dim(), f.target().top_dim());
    for (int d = 0; d <= top; ++d)
        if (f.source().count(d) != f.target().count(d)) return false;
    return true;
}

SimplicialMap map_from_assignments(const PresPtr& src, const PresPtr& dst,
                                   const std::vector<Assignment>& entries) {
    std::vector<std::vector<SimplexRef>> images(src->top_dim() + 1);
    std::vector<std::vector<bool>> set(src->top_dim() + 1);
    for (int d = 0; d <= src->top_dim(); ++d) {
        images[d].resize(src->count(d));
        set[d].resize(src->count(d), false);
    }
    for (const auto& e : entries) {
        int idx = src->find(e.dim, e.from);
        if (idx < 0)
            throw Error("assignment source '" + e.from + "' not found at dimension " +
                        std::to_string(e.dim));
        if (!word_is_admissible(e.word))
            throw Error("assignment word for '" + e.from +
                        "' is not admissible (must be strictly decreasing)");
        int tdim = e.dim - static_cast<int>(e.word.size());
        int tidx = tdim >= 0 ? dst->find(tdim, e.to) : -1;
        if (tidx < 0)
            throw Error("assignment target '" + e.to + "' not found at dimension " +
                        std::to_string(tdim));
        if (set[e.dim][idx]) throw Error("duplicate assignment for '" + e.from + "'");
        images[e.dim][idx] = SimplexRef{e.word, tdim, tidx};
        set[e.dim][idx] = true;
    }
    for (int d = 0; d <= src->top_dim(); ++d)
        for (int idx = 0; idx < src->count(d); ++idx)
            if (!set[d][idx])
                throw Error("no assignment for generator '" + src->generator(d, idx).id + "'");
    return SimplicialMap(src, dst, std::move(images));
}

}  // namespace sset
