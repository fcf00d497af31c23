#include "sset/constructions.hpp"

#include <algorithm>
#include <set>

namespace sset {

namespace {

// Degeneracy support of a normalized simplex: s is in the image of s_i
// exactly when i appears in its admissible word.
bool words_share_index(const Word& a, const Word& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] > b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

int max_common_index(const Word& a, const Word& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return a[i];
        if (a[i] > b[j])
            ++i;
        else
            ++j;
    }
    return -1;
}

std::string fresh_vertex_id(const Presentation& x, const std::string& base) {
    if (x.find(0, base) < 0) return base;
    for (int k = 0;; ++k) {
        std::string cand = base + std::to_string(k);
        if (x.find(0, cand) < 0) return cand;
    }
}

SimplexRef collapse_ref(int dim, int bp_idx) {
    SimplexRef r{{}, 0, bp_idx};
    Word w;
    for (int i = dim - 1; i >= 0; --i) w.push_back(i);
    r.word = std::move(w);
    return r;
}

}  // namespace

bool Subcomplex::empty_set() const {
    for (const auto& level : member)
        for (bool b : level)
            if (b) return false;
    return true;
}

Subcomplex subcomplex_from_predicate(const Presentation& x,
                                     const std::function<bool(int, int)>& pred) {
    Subcomplex a;
    a.member.resize(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d) {
        a.member[d].resize(x.count(d), false);
        for (int idx = 0; idx < x.count(d); ++idx) a.member[d][idx] = pred(d, idx);
    }
    return a;
}

Subcomplex subcomplex_from_ids(const Presentation& x,
                               const std::vector<std::pair<int, std::string>>& ids) {
    Subcomplex a;
    a.member.resize(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d) a.member[d].resize(x.count(d), false);
    for (const auto& [dim, id] : ids) {
        int idx = x.find(dim, id);
        if (idx < 0)
            throw Error("subcomplex id '" + id + "' not found at dimension " +
                        std::to_string(dim));
        a.member[dim][idx] = true;
    }
    return a;
}

std::string subcomplex_face_closure_defect(const Presentation& x, const Subcomplex& a) {
    for (int d = 1; d <= x.top_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            if (!a.contains(d, idx)) continue;
            for (const auto& f : x.generator(d, idx).faces)
                if (!a.contains(f.tdim, f.tidx))
                    return "face " + x.ref_string(f) + " of '" + x.generator(d, idx).id +
                           "' is outside the subcomplex";
        }
    }
    return "";
}

Product::Product(PresPtr x, PresPtr y) : x_(std::move(x)), y_(std::move(y)) {
    int top = x_->top_dim() + y_->top_dim();
    if (x_->top_dim() < 0 || y_->top_dim() < 0) top = -1;  // empty factor

    std::vector<std::vector<std::string>> ids(std::max(top + 1, 0));
    std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> comps(std::max(top + 1, 0));
    for (int n = 0; n <= top; ++n) {
        std::vector<std::pair<std::string, std::pair<SimplexRef, SimplexRef>>> level;
        for (const auto& a : x_->simplices(n)) {
            for (const auto& b : y_->simplices(n)) {
                if (words_share_index(a.word, b.word)) continue;
                level.push_back({"(" + x_->ref_string(a) + "|" + y_->ref_string(b) + ")",
                                 {a, b}});
            }
        }
        std::sort(level.begin(), level.end(),
                  [](const auto& p, const auto& q) { return p.first < q.first; });
        for (int i = 0; i < static_cast<int>(level.size()); ++i) {
            ids[n].push_back(level[i].first);
            comps[n].push_back(level[i].second);
            lookup_[level[i].second] = {n, i};
        }
    }
    comps_ = std::move(comps);

    PresentationBuilder builder(x_->name() + "x" + y_->name());
    for (int n = 0; n < static_cast<int>(ids.size()); ++n) {
        for (int i = 0; i < static_cast<int>(ids[n].size()); ++i) {
            std::vector<PresentationBuilder::PendingFace> faces;
            if (n >= 1) {
                const auto& [a, b] = comps_[n][i];
                for (int k = 0; k <= n; ++k) {
                    SimplexRef pr = pair_ref(x_->face(a, k), y_->face(b, k));
                    faces.push_back({pr.word, ids[pr.tdim][pr.tidx]});
                }
            }
            builder.add_generator(n, ids[n][i], std::move(faces));
        }
    }
    if (x_->has_basepoint() && y_->has_basepoint()) {
        SimplexRef bx = x_->ref(0, x_->basepoint());
        SimplexRef by = y_->ref(0, y_->basepoint());
        builder.set_basepoint("(" + x_->ref_string(bx) + "|" + y_->ref_string(by) + ")");
    }
    Presentation p = builder.build();
    // Builder sorted by id, matching our own sort; remap defensively anyway.
    for (int n = 0; n < static_cast<int>(ids.size()); ++n) {
        for (int i = 0; i < static_cast<int>(ids[n].size()); ++i) {
            int at = p.find(n, ids[n][i]);
            if (at != i) throw Error("product generator table out of order");
        }
    }
    pres_ = share(std::move(p));
}

// Usable during construction: only needs the factors and lookup_.
SimplexRef Product::pair_ref(SimplexRef a, SimplexRef b) const {
    if (a.dim() != b.dim()) throw Error("pair of simplices with unequal dimensions");
    Word collected;  // indices stripped, outermost first
    while (true) {
        int i = max_common_index(a.word, b.word);
        if (i < 0) break;
        collected.push_back(i);
        a = x_->face(a, i);
        b = y_->face(b, i);
    }
    auto it = lookup_.find({a, b});
    if (it == lookup_.end())
        throw Error("pair (" + x_->ref_string(a) + "|" + y_->ref_string(b) +
                    ") is not a product generator");
    SimplexRef out{{}, it->second.first, it->second.second};
    for (auto rit = collected.rbegin(); rit != collected.rend(); ++rit)
        out.word = word_insert_degeneracy(out.word, *rit);
    return out;
}

SimplicialMap Product::proj_left() const {
    std::vector<std::vector<SimplexRef>> images(pres_->top_dim() + 1);
    for (int d = 0; d <= pres_->top_dim(); ++d)
        for (int i = 0; i < pres_->count(d); ++i) images[d].push_back(comps_[d][i].first);
    return SimplicialMap(pres_, x_, std::move(images));
}

SimplicialMap Product::proj_right() const {
    std::vector<std::vector<SimplexRef>> images(pres_->top_dim() + 1);
    for (int d = 0; d <= pres_->top_dim(); ++d)
        for (int i = 0; i < pres_->count(d); ++i) images[d].push_back(comps_[d][i].second);
    return SimplicialMap(pres_, y_, std::move(images));
}

QuotientResult quotient(const PresPtr& x, const Subcomplex& a, const std::string& name) {
    std::string defect = subcomplex_face_closure_defect(*x, a);
    if (!defect.empty()) throw Error("subcomplex is not face-closed: " + defect);
    if (a.empty_set()) throw Error("quotient by the empty subcomplex (use disjoint_basepoint)");

    std::string bp_id;
    if (x->has_basepoint() && a.contains(0, x->basepoint())) {
        bp_id = x->basepoint_id();
    } else {
        for (int idx = 0; idx < x->count(0); ++idx)
            if (a.contains(0, idx)) {
                bp_id = x->generator(0, idx).id;
                break;
            }
    }
    if (bp_id.empty()) throw Error("non-empty subcomplex without vertices");

    PresentationBuilder builder(name.empty() ? x->name() + "/sub" : name);
    builder.add_generator(0, bp_id);
    builder.set_basepoint(bp_id);
    for (int d = 0; d <= x->top_dim(); ++d) {
        for (int idx = 0; idx < x->count(d); ++idx) {
            if (a.contains(d, idx) || (d == 0 && x->generator(0, idx).id == bp_id)) continue;
            const Generator& g = x->generator(d, idx);
            std::vector<PresentationBuilder::PendingFace> faces;
            for (const auto& f : g.faces) {
                if (a.contains(f.tdim, f.tidx)) {
                    SimplexRef c = collapse_ref(f.dim(), 0);
                    faces.push_back({c.word, bp_id});
                } else {
                    faces.push_back({f.word, x->generator(f.tdim, f.tidx).id});
                }
            }
            builder.add_generator(d, g.id, std::move(faces));
        }
    }
    PresPtr q = share(builder.build());

    std::vector<std::vector<SimplexRef>> images(x->top_dim() + 1);
    int bp_idx = q->basepoint();
    for (int d = 0; d <= x->top_dim(); ++d) {
        for (int idx = 0; idx < x->count(d); ++idx) {
            if (a.contains(d, idx)) {
                images[d].push_back(collapse_ref(d, bp_idx));
            } else {
                int at = q->find(d, x->generator(d, idx).id);
                images[d].push_back(SimplexRef{{}, d, at});
            }
        }
    }
    return {q, SimplicialMap(x, q, std::move(images))};
}

WedgeResult wedge(const PresPtr& x, const PresPtr& y) {
    if (!x->has_basepoint() || !y->has_basepoint()) throw Error("wedge: missing basepoint");
    const std::string bp = "*";
    PresentationBuilder builder(x->name() + "v" + y->name());
    builder.add_generator(0, bp);
    builder.set_basepoint(bp);

    auto add_side = [&](const Presentation& p, const std::string& prefix) {
        int pbp = p.basepoint();
        for (int d = 0; d <= p.top_dim(); ++d) {
            for (int idx = 0; idx < p.count(d); ++idx) {
                if (d == 0 && idx == pbp) continue;
                const Generator& g = p.generator(d, idx);
                std::vector<PresentationBuilder::PendingFace> faces;
                for (const auto& f : g.faces) {
                    bool is_bp = f.tdim == 0 && f.tidx == pbp;
                    faces.push_back(
                        {f.word, is_bp ? bp : prefix + p.generator(f.tdim, f.tidx).id});
                }
                builder.add_generator(d, prefix + g.id, std::move(faces));
            }
        }
    };
    add_side(*x, "l|");
    add_side(*y, "r|");
    PresPtr w = share(builder.build());

    auto make_inclusion = [&](const PresPtr& p, const std::string& prefix) {
        int pbp = p->basepoint();
        std::vector<std::vector<SimplexRef>> images(p->top_dim() + 1);
        for (int d = 0; d <= p->top_dim(); ++d) {
            for (int idx = 0; idx < p->count(d); ++idx) {
                std::string id = (d == 0 && idx == pbp) ? bp : prefix + p->generator(d, idx).id;
                images[d].push_back(SimplexRef{{}, d, w->find(d, id)});
            }
        }
        return SimplicialMap(p, w, std::move(images));
    };
    return {w, make_inclusion(x, "l|"), make_inclusion(y, "r|")};
}

PointedResult disjoint_basepoint(const PresPtr& z) {
    std::string bp = fresh_vertex_id(*z, "+");
    PresentationBuilder builder(z->name() + "+");
    builder.add_generator(0, bp);
    builder.set_basepoint(bp);
    for (int d = 0; d <= z->top_dim(); ++d) {
        for (int idx = 0; idx < z->count(d); ++idx) {
            const Generator& g = z->generator(d, idx);
            std::vector<PresentationBuilder::PendingFace> faces;
            for (const auto& f : g.faces)
                faces.push_back({f.word, z->generator(f.tdim, f.tidx).id});
            builder.add_generator(d, g.id, std::move(faces));
        }
    }
    PresPtr p = share(builder.build());
    std::vector<std::vector<SimplexRef>> images(std::max(z->top_dim() + 1, 0));
    for (int d = 0; d <= z->top_dim(); ++d)
        for (int idx = 0; idx < z->count(d); ++idx)
            images[d].push_back(SimplexRef{{}, d, p->find(d, z->generator(d, idx).id)});
    return {p, SimplicialMap(z, p, std::move(images))};
}

SmashResult smash(const PresPtr& x, const PresPtr& z) {
    if (!x->has_basepoint() || !z->has_basepoint()) throw Error("smash: missing basepoint");
    auto prod = std::make_shared<const Product>(x, z);
    const Presentation& p = *prod->presentation();
    int bx = x->basepoint();
    int bz = z->basepoint();
    Subcomplex axes = subcomplex_from_predicate(p, [&](int d, int idx) {
        const auto& [a, b] = prod->components(d, idx);
        return (a.tdim == 0 && a.tidx == bx) || (b.tdim == 0 && b.tidx == bz);
    });
    QuotientResult q = quotient(prod->presentation(), axes, x->name() + "^" + z->name());
    if (is_one_reduced(*x) && !is_one_reduced(*q.pres))
        throw Error("internal: smash of a 1-reduced set failed to be 1-reduced");
    return {q.pres, prod, q.map};
}

SimplicialMap smash_functor_map(const SmashResult& s, const SmashResult& t,
                                const SimplicialMap& f, const SimplicialMap& g) {
    const Presentation& sp = *s.pres;
    std::vector<std::vector<SimplexRef>> images(sp.top_dim() + 1);
    const Presentation& prod_pres = *s.product->presentation();
    for (int d = 0; d <= sp.top_dim(); ++d) {
        for (int idx = 0; idx < sp.count(d); ++idx) {
            if (d == 0 && idx == sp.basepoint()) {
                images[d].push_back(t.pres->ref(0, t.pres->basepoint()));
                continue;
            }
            // every non-basepoint generator of the smash is a surviving
            // product generator with the same id
            int pidx = prod_pres.find(d, sp.generator(d, idx).id);
            if (pidx < 0) throw Error("internal: smash generator lost its product origin");
            const auto& [a, b] = s.product->components(d, pidx);
            SimplexRef pr = t.product->pair_ref(f.apply(a), g.apply(b));
            images[d].push_back(t.collapse.apply(pr));
        }
    }
    return SimplicialMap(s.pres, t.pres, std::move(images));
}

}  // namespace sset
