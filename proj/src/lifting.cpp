#include "sset/lifting.hpp"

#include <algorithm>
#include <map>

namespace sset {

namespace {

void check_guard(const Presentation& p, const char* what) {
    if (p.total_generators() > kEnumerationGuard)
        throw TooLargeError(std::string(what) + ": '" + p.name() + "' has " +
                            std::to_string(p.total_generators()) +
                            " generators, beyond the search guard of " +
                            std::to_string(kEnumerationGuard));
}

SimplexRef apply_partial(const Presentation& y,
                         const std::vector<std::vector<SimplexRef>>& images,
                         const SimplexRef& s) {
    SimplexRef out = images[s.tdim][s.tidx];
    for (auto it = s.word.rbegin(); it != s.word.rend(); ++it) out = y.degeneracy(out, *it);
    return out;
}

struct GenOrder {
    std::vector<std::pair<int, int>> order;  // (dim, idx), dimension-increasing

    explicit GenOrder(const Presentation& x) {
        for (int d = 0; d <= x.top_dim(); ++d)
            for (int idx = 0; idx < x.count(d); ++idx) order.push_back({d, idx});
    }
};

}  // namespace

std::vector<SimplicialMap> enumerate_homs(const PresPtr& x, const PresPtr& y, bool pointed) {
    check_guard(*x, "enumerate_homs source");
    check_guard(*y, "enumerate_homs target");
    if (pointed && (!x->has_basepoint() || !y->has_basepoint()))
        throw Error("enumerate_homs: pointed enumeration needs basepoints");

    std::vector<std::vector<SimplexRef>> candidates(x->top_dim() + 1);
    for (int d = 0; d <= x->top_dim(); ++d)
        if (x->count(d) > 0) candidates[d] = y->simplices(d);

    GenOrder gens(*x);
    std::vector<std::vector<SimplexRef>> images(x->top_dim() + 1);
    for (int d = 0; d <= x->top_dim(); ++d) images[d].resize(x->count(d));

    std::vector<SimplicialMap> out;
    auto rec = [&](auto&& self, size_t at) -> void {
        if (at == gens.order.size()) {
            out.push_back(SimplicialMap(x, y, images));
            return;
        }
        auto [d, idx] = gens.order[at];
        bool forced_bp = pointed && d == 0 && idx == x->basepoint();
        for (const auto& c : candidates[d]) {
            if (forced_bp && !(c == y->ref(0, y->basepoint()))) continue;
            bool ok = true;
            for (int i = 0; ok && d >= 1 && i <= d; ++i) {
                SimplexRef lhs = apply_partial(*y, images, x->face(x->ref(d, idx), i));
                ok = lhs == y->face(c, i);
            }
            if (!ok) continue;
            images[d][idx] = c;
            self(self, at + 1);
        }
    };
    rec(rec, 0);
    return out;
}

bool LiftingSquare::commutes() const {
    return compose(p, top) == compose(bottom, i);
}

namespace {

std::vector<SimplicialMap> lifts(const LiftingSquare& sq, bool first_only) {
    const Presentation& A = sq.i.source();
    const Presentation& B = sq.i.target();
    const Presentation& X = sq.p.source();
    if (!(sq.top.source() == A) || !(sq.top.target() == X) || !(sq.bottom.source() == B) ||
        !(sq.p.target() == sq.bottom.target()))
        throw Error("solve_lifting: square ends do not match");
    if (!sq.commutes()) throw Error("solve_lifting: square does not commute");
    check_guard(B, "solve_lifting");
    check_guard(X, "solve_lifting");

    // h o i = top splits into forced values (where i(a) is non-degenerate)
    // and deferred degeneracy constraints.
    std::vector<std::vector<std::optional<SimplexRef>>> forced(B.top_dim() + 1);
    std::vector<std::vector<std::vector<std::pair<Word, SimplexRef>>>> deferred(B.top_dim() + 1);
    for (int d = 0; d <= B.top_dim(); ++d) {
        forced[d].resize(B.count(d));
        deferred[d].resize(B.count(d));
    }
    for (int d = 0; d <= A.top_dim(); ++d) {
        for (int idx = 0; idx < A.count(d); ++idx) {
            SimplexRef ia = sq.i.image(d, idx);
            SimplexRef want = sq.top.image(d, idx);
            if (!ia.degenerate()) {
                auto& slot = forced[ia.tdim][ia.tidx];
                if (slot && !(*slot == want)) return {};  // inconsistent constraints
                slot = want;
            } else {
                deferred[ia.tdim][ia.tidx].push_back({ia.word, want});
            }
        }
    }

    std::vector<std::vector<SimplexRef>> candidates(B.top_dim() + 1);
    for (int d = 0; d <= B.top_dim(); ++d)
        if (B.count(d) > 0) candidates[d] = X.simplices(d);

    GenOrder gens(B);
    std::vector<std::vector<SimplexRef>> images(B.top_dim() + 1);
    for (int d = 0; d <= B.top_dim(); ++d) images[d].resize(B.count(d));

    std::vector<SimplicialMap> out;
    auto rec = [&](auto&& self, size_t at) -> bool {
        if (at == gens.order.size()) {
            out.push_back(SimplicialMap(sq.i.target_ptr(), sq.p.source_ptr(), images));
            return first_only;
        }
        auto [d, idx] = gens.order[at];
        for (const auto& c : candidates[d]) {
            if (forced[d][idx] && !(*forced[d][idx] == c)) continue;
            bool ok = true;
            // p o h = bottom on this generator
            ok = sq.p.apply(c) == sq.bottom.image(d, idx);
            // face compatibility with already chosen images
            for (int i = 0; ok && d >= 1 && i <= d; ++i) {
                SimplexRef lhs = apply_partial(X, images, B.face(B.ref(d, idx), i));
                ok = lhs == X.face(c, i);
            }
            // deferred degeneracy constraints from h o i = top
            for (const auto& [w, want] : deferred[d][idx]) {
                if (!ok) break;
                SimplexRef lifted = c;
                for (auto it = w.rbegin(); it != w.rend(); ++it)
                    lifted = X.degeneracy(lifted, *it);
                ok = lifted == want;
            }
            if (!ok) continue;
            images[d][idx] = c;
            if (self(self, at + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::optional<SimplicialMap> solve_lifting(const LiftingSquare& sq) {
    std::vector<SimplicialMap> found = lifts(sq, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<SimplicialMap> all_lifts(const LiftingSquare& sq) { return lifts(sq, false); }

RlpResult has_rlp(const SimplicialMap& p, const SimplicialMap& i) {
    std::vector<SimplicialMap> tops = enumerate_homs(i.source_ptr(), p.source_ptr());
    std::vector<SimplicialMap> bottoms = enumerate_homs(i.target_ptr(), p.target_ptr());
    std::vector<SimplicialMap> bottoms_restricted;
    bottoms_restricted.reserve(bottoms.size());
    for (const auto& b : bottoms) bottoms_restricted.push_back(compose(b, i));
    for (const auto& top : tops) {
        SimplicialMap along = compose(p, top);
        for (size_t bi = 0; bi < bottoms.size(); ++bi) {
            if (!(bottoms_restricted[bi].images() == along.images())) continue;
            LiftingSquare sq{i, p, top, bottoms[bi]};
            if (!solve_lifting(sq)) return {false, sq};
        }
    }
    return {true, std::nullopt};
}

KanResult is_kan_up_to(const PresPtr& x, int bound) {
    if (bound < 1) throw Error("is_kan_up_to: bound must be at least 1");
    check_guard(*x, "is_kan_up_to");
    for (int n = 1; n <= bound; ++n) {
        std::vector<SimplexRef> fillers = x->simplices(n);
        for (int k = 0; k <= n; ++k) {
            InclusionResult horn = horn_complex(n, k);
            const Presentation& whole = horn.inclusion.target();
            // horn generator holding the r-th face of the top simplex
            std::vector<int> face_gen(n + 1, -1);
            for (int r = 0; r <= n; ++r) {
                if (r == k) continue;
                SimplexRef f = whole.face(whole.ref(n, 0), r);
                face_gen[r] = horn.pres->find(n - 1, whole.generator(f.tdim, f.tidx).id);
            }
            std::vector<SimplicialMap> homs = enumerate_homs(horn.pres, x);
            for (const auto& h : homs) {
                bool filled = false;
                for (const auto& z : fillers) {
                    bool ok = true;
                    for (int r = 0; ok && r <= n; ++r) {
                        if (r == k) continue;
                        ok = x->face(z, r) == h.image(n - 1, face_gen[r]);
                    }
                    if (ok) {
                        filled = true;
                        break;
                    }
                }
                if (!filled) {
                    HornWitness w;
                    w.n = n;
                    w.k = k;
                    for (int r = 0; r <= n; ++r)
                        if (r != k) w.face_images.push_back(h.image(n - 1, face_gen[r]));
                    return {false, w};
                }
            }
        }
    }
    return {true, std::nullopt};
}

FibrationResult is_kan_fibration_up_to(const SimplicialMap& p, int bound) {
    if (bound < 1) throw Error("is_kan_fibration_up_to: bound must be at least 1");
    for (int n = 1; n <= bound; ++n) {
        for (int k = 0; k <= n; ++k) {
            RlpResult r = has_rlp(p, horn_complex(n, k).inclusion);
            if (!r.holds) return {false, r.witness, n, k};
        }
    }
    return {true, std::nullopt, -1, -1};
}

FibrationResult rlp_against_reduced_horns(const SimplicialMap& p, int bound) {
    if (bound < 3) throw Error("rlp_against_reduced_horns: bound must be at least 3");
    for (int n = 3; n <= bound; ++n) {
        for (int k = 0; k <= n; ++k) {
            RlpResult r = has_rlp(p, reduce1_map(horn_complex(n, k).inclusion));
            if (!r.holds) return {false, r.witness, n, k};
        }
    }
    return {true, std::nullopt, -1, -1};
}

namespace {

// Map of standard simplices induced by a monotone vertex function.
SimplicialMap standard_vertex_map(const PresPtr& from, const PresPtr& to,
                                  const std::vector<int>& vmap) {
    std::vector<std::vector<SimplexRef>> images(from->top_dim() + 1);
    for (int d = 0; d <= from->top_dim(); ++d) {
        for (int idx = 0; idx < from->count(d); ++idx) {
            SimplexRef r = from->ref(d, idx);
            std::vector<int> seq;
            for (int i = 0; i <= d; ++i) {
                int v = std::stoi(from->generator(0, from->vertex_of(r, i).tidx).id);
                seq.push_back(vmap[v]);
            }
            // split into the strictly increasing core plus repeat positions
            std::vector<int> distinct;
            Word word;
            for (size_t t = 0; t < seq.size(); ++t) {
                if (t + 1 < seq.size() && seq[t] == seq[t + 1])
                    word.push_back(static_cast<int>(t));
                if (distinct.empty() || distinct.back() != seq[t]) distinct.push_back(seq[t]);
            }
            std::sort(word.rbegin(), word.rend());
            std::string id;
            for (size_t i = 0; i < distinct.size(); ++i) id += std::to_string(distinct[i]);
            int tdim = static_cast<int>(distinct.size()) - 1;
            int tidx = to->find(tdim, id);
            if (tidx < 0) throw Error("standard_vertex_map: missing face " + id);
            images[d].push_back(SimplexRef{word, tdim, tidx});
        }
    }
    return SimplicialMap(from, to, std::move(images));
}

// Z -> Z' extended over the added disjoint basepoints.
SimplicialMap plus_map(const PointedResult& zp, const PointedResult& zp2,
                       const SimplicialMap& g) {
    const Presentation& P = *zp.pres;
    std::vector<std::vector<SimplexRef>> images(P.top_dim() + 1);
    for (int d = 0; d <= P.top_dim(); ++d) {
        for (int idx = 0; idx < P.count(d); ++idx) {
            if (d == 0 && idx == P.basepoint()) {
                images[d].push_back(zp2.pres->ref(0, zp2.pres->basepoint()));
                continue;
            }
            int at = g.source().find(d, P.generator(d, idx).id);
            SimplexRef im = g.image(d, at);
            int tidx = zp2.pres->find(im.tdim, g.target().generator(im.tdim, im.tidx).id);
            images[d].push_back(SimplexRef{im.word, im.tdim, tidx});
        }
    }
    return SimplicialMap(zp.pres, zp2.pres, std::move(images));
}

}  // namespace

FiniteMapSpace mapping_space(const PresPtr& x, const PresPtr& y, int bound) {
    if (bound < 0) throw Error("mapping_space: bound must be non-negative");
    if (!x->has_basepoint() || !y->has_basepoint())
        throw Error("mapping_space: both complexes must be pointed");

    FiniteMapSpace ms;
    ms.x = x;
    ms.y = y;
    ms.bound = bound;

    std::vector<PresPtr> deltas;
    std::vector<PointedResult> pluses;
    std::vector<SmashResult> smashes;
    for (int n = 0; n <= bound + 1; ++n) {
        deltas.push_back(share(standard_simplex(n)));
        pluses.push_back(disjoint_basepoint(deltas[n]));
        if (n <= bound) smashes.push_back(smash(x, pluses[n].pres));
    }
    for (int n = 0; n <= bound; ++n)
        ms.level.push_back(enumerate_homs(smashes[n].pres, y, true));

    auto find_level = [&](int n, const SimplicialMap& f) {
        for (size_t s = 0; s < ms.level[n].size(); ++s)
            if (ms.level[n][s].images() == f.images()) return static_cast<int>(s);
        throw Error("mapping_space: structure map left the enumerated homs");
    };

    ms.face.resize(bound + 1);
    ms.deg.resize(bound + 1);
    for (int n = 1; n <= bound; ++n) {
        ms.face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> vmap(n, 0);  // coface: [n-1] -> [n] skipping i
            for (int v = 0; v < n; ++v) vmap[v] = v < i ? v : v + 1;
            SimplicialMap dm = standard_vertex_map(deltas[n - 1], deltas[n], vmap);
            SimplicialMap sm = smash_functor_map(smashes[n - 1], smashes[n],
                                                 identity_map(x), plus_map(pluses[n - 1], pluses[n], dm));
            for (const auto& f : ms.level[n])
                ms.face[n][i].push_back(find_level(n - 1, compose(f, sm)));
        }
    }
    for (int n = 0; n < bound; ++n) {
        ms.deg[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            std::vector<int> vmap(n + 2, 0);  // codegeneracy: [n+1] -> [n] repeating i
            for (int v = 0; v <= n + 1; ++v) vmap[v] = v <= i ? v : v - 1;
            SimplicialMap sv = standard_vertex_map(deltas[n + 1], deltas[n], vmap);
            SimplicialMap sm = smash_functor_map(smashes[n + 1], smashes[n],
                                                 identity_map(x), plus_map(pluses[n + 1], pluses[n], sv));
            for (const auto& f : ms.level[n])
                ms.deg[n][i].push_back(find_level(n + 1, compose(f, sm)));
        }
    }
    return ms;
}

}  // namespace sset
