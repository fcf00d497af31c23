#include "sset/functors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sset {

namespace {

constexpr long long kCoskeletonNodeBudget = 2000000;

SimplexRef s0_of_vertex(int vertex_idx) { return SimplexRef{{0}, 0, vertex_idx}; }

}  // namespace

TruncatedData truncate1(const Presentation& x) {
    TruncatedData t;
    t.vertices = x.simplices(0);
    t.edges = x.simplices(1);
    std::map<SimplexRef, int> vat, eat;
    for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i) vat[t.vertices[i]] = i;
    for (int i = 0; i < static_cast<int>(t.edges.size()); ++i) eat[t.edges[i]] = i;
    for (const auto& e : t.edges) {
        t.d0.push_back(vat.at(x.face(e, 0)));
        t.d1.push_back(vat.at(x.face(e, 1)));
    }
    for (const auto& v : t.vertices) t.s0.push_back(eat.at(x.degeneracy(v, 0)));
    return t;
}

InclusionResult skeleton1(const PresPtr& x) {
    PresentationBuilder b("sk1(" + x->name() + ")");
    for (int d = 0; d <= std::min(1, x->top_dim()); ++d) {
        for (int idx = 0; idx < x->count(d); ++idx) {
            const Generator& g = x->generator(d, idx);
            std::vector<PresentationBuilder::PendingFace> faces;
            for (const auto& f : g.faces)
                faces.push_back({f.word, x->generator(f.tdim, f.tidx).id});
            b.add_generator(d, g.id, std::move(faces));
        }
    }
    if (x->has_basepoint()) b.set_basepoint(x->basepoint_id());
    PresPtr sk = share(b.build());
    std::vector<std::vector<SimplexRef>> images(std::max(sk->top_dim() + 1, 0));
    for (int d = 0; d <= sk->top_dim(); ++d)
        for (int idx = 0; idx < sk->count(d); ++idx)
            images[d].push_back(SimplexRef{{}, d, x->find(d, sk->generator(d, idx).id)});
    return {sk, SimplicialMap(sk, x, std::move(images))};
}

// --- coskeleton ------------------------------------------------------------

namespace {

// A labelling of sk1(Delta[n]) in X: vertex generator indices plus a
// 1-simplex per vertex pair, with matching endpoints.
struct Labelling {
    std::vector<int> v;            // size n+1
    std::vector<SimplexRef> e;     // size C(n+1, 2), pairs in lex order

    int dim() const { return static_cast<int>(v.size()) - 1; }

    friend bool operator==(const Labelling&, const Labelling&) = default;
};

int pair_pos(int i, int j, int n) {
    // position of (i, j), i < j <= n, in lex order
    return i * n - i * (i - 1) / 2 + (j - i - 1);
}

Labelling labelling_face(const Labelling& l, int r) {
    int n = l.dim();
    Labelling out;
    for (int i = 0; i <= n; ++i)
        if (i != r) out.v.push_back(l.v[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j <= n - 1; ++j) {
            int oi = i < r ? i : i + 1;
            int oj = j < r ? j : j + 1;
            out.e.push_back(l.e[pair_pos(oi, oj, n)]);
        }
    }
    return out;
}

// Smallest t with l = s_t(face), or -1 if non-degenerate.
int labelling_strip_index(const Labelling& l) {
    int n = l.dim();
    for (int t = 0; t + 1 <= n; ++t) {
        if (l.v[t] != l.v[t + 1]) continue;
        if (!(l.e[pair_pos(t, t + 1, n)] == s0_of_vertex(l.v[t]))) continue;
        bool ok = true;
        for (int i = 0; ok && i < t; ++i)
            ok = l.e[pair_pos(i, t, n)] == l.e[pair_pos(i, t + 1, n)];
        for (int j = t + 2; ok && j <= n; ++j)
            ok = l.e[pair_pos(t, j, n)] == l.e[pair_pos(t + 1, j, n)];
        if (ok) return t;
    }
    return -1;
}

std::string labelling_id(const Presentation& x, const Labelling& l) {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < l.v.size(); ++i) {
        if (i) os << ",";
        os << x.generator(0, l.v[i]).id;
    }
    os << "|";
    for (size_t i = 0; i < l.e.size(); ++i) {
        if (i) os << ",";
        os << x.ref_string(l.e[i]);
    }
    os << ">";
    return os.str();
}

struct CoskTables {
    // non-degenerate labelling id -> generator index, per dimension
    std::vector<std::map<std::string, int>> index;
};

// Normal form of a labelling as a ref into the coskeleton presentation
// (dimensions 0/1 of which share X's generator tables).
SimplexRef labelling_to_ref(const Presentation& x, const Labelling& l,
                            const CoskTables& tables) {
    Labelling cur = l;
    Word collected;
    while (cur.dim() >= 2) {
        int t = labelling_strip_index(cur);
        if (t < 0) break;
        collected.push_back(t);
        cur = labelling_face(cur, t + 1);
    }
    SimplexRef out;
    if (cur.dim() >= 2) {
        auto it = tables.index[cur.dim()].find(labelling_id(x, cur));
        if (it == tables.index[cur.dim()].end())
            throw Error("internal: unknown coskeleton labelling");
        out = SimplexRef{{}, cur.dim(), it->second};
    } else if (cur.dim() == 1) {
        out = cur.e[0];
    } else {
        out = SimplexRef{{}, 0, cur.v[0]};
    }
    for (auto rit = collected.rbegin(); rit != collected.rend(); ++rit)
        out.word = word_insert_degeneracy(out.word, *rit);
    return out;
}

}  // namespace

CoskeletonResult coskeleton1(const PresPtr& x, int bound) {
    if (bound < 1) throw Error("coskeleton1: bound must be at least 1");

    // edges grouped by (d1, d0) endpoints
    std::map<std::pair<int, int>, std::vector<SimplexRef>> edge_table;
    for (const auto& e : x->simplices(1)) {
        int src = x->face(e, 1).tidx;
        int dst = x->face(e, 0).tidx;
        edge_table[{src, dst}].push_back(e);
    }

    PresentationBuilder b("cosk1(" + x->name() + ")", false);
    for (int d = 0; d <= std::min(1, x->top_dim()); ++d)
        for (int idx = 0; idx < x->count(d); ++idx) {
            const Generator& g = x->generator(d, idx);
            std::vector<PresentationBuilder::PendingFace> faces;
            for (const auto& f : g.faces)
                faces.push_back({f.word, x->generator(f.tdim, f.tidx).id});
            b.add_generator(d, g.id, std::move(faces));
        }

    CoskTables tables;
    tables.index.resize(bound + 1);
    std::vector<std::vector<Labelling>> nondeg(bound + 1);

    long long budget = kCoskeletonNodeBudget;
    for (int n = 2; n <= bound; ++n) {
        int pairs = n * (n + 1) / 2;
        std::vector<std::pair<std::string, Labelling>> found;
        Labelling cur;
        cur.v.resize(n + 1);
        cur.e.resize(pairs);
        auto rec_edges = [&](auto&& self, int p) -> void {
            if (--budget < 0) throw TooLargeError("coskeleton1: enumeration too large");
            if (p == pairs) {
                if (labelling_strip_index(cur) < 0)
                    found.push_back({labelling_id(*x, cur), cur});
                return;
            }
            // recover (i, j) from position
            int i = 0, q = p;
            while (q >= n - i) q -= n - i, ++i;
            int j = i + 1 + q;
            auto it = edge_table.find({cur.v[i], cur.v[j]});
            if (it == edge_table.end()) return;
            for (const auto& e : it->second) {
                cur.e[p] = e;
                self(self, p + 1);
            }
        };
        auto rec_verts = [&](auto&& self, int i) -> void {
            if (--budget < 0) throw TooLargeError("coskeleton1: enumeration too large");
            if (i == n + 1) {
                rec_edges(rec_edges, 0);
                return;
            }
            for (int v = 0; v < x->count(0); ++v) {
                cur.v[i] = v;
                self(self, i + 1);
            }
        };
        rec_verts(rec_verts, 0);
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (int i = 0; i < static_cast<int>(found.size()); ++i) {
            tables.index[n][found[i].first] = i;
            nondeg[n].push_back(found[i].second);
        }
        // faces can be computed only after the table of dimension n-1 exists
        for (int i = 0; i < static_cast<int>(found.size()); ++i) {
            std::vector<PresentationBuilder::PendingFace> faces;
            for (int r = 0; r <= n; ++r) {
                SimplexRef f = labelling_to_ref(*x, labelling_face(found[i].second, r), tables);
                std::string target;
                if (f.tdim >= 2) {
                    target = labelling_id(*x, nondeg[f.tdim][f.tidx]);
                } else {
                    target = x->generator(f.tdim, f.tidx).id;
                }
                faces.push_back({f.word, target});
            }
            b.add_generator(n, found[i].first, std::move(faces));
        }
    }
    if (x->has_basepoint()) b.set_basepoint(x->basepoint_id());
    PresPtr cosk = share(b.build());

    // The sorted builder must agree with our tables.
    for (int n = 2; n <= bound; ++n)
        for (const auto& [id, idx] : tables.index[n])
            if (cosk->find(n, id) != idx) throw Error("internal: coskeleton table mismatch");

    CoskeletonResult out;
    out.pres = cosk;
    if (x->top_dim() <= bound) {
        std::vector<std::vector<SimplexRef>> images(std::max(x->top_dim() + 1, 0));
        for (int d = 0; d <= x->top_dim(); ++d) {
            for (int idx = 0; idx < x->count(d); ++idx) {
                if (d <= 1) {
                    images[d].push_back(SimplexRef{{}, d, idx});
                    continue;
                }
                Labelling l;
                SimplexRef r = x->ref(d, idx);
                for (int i = 0; i <= d; ++i) l.v.push_back(x->vertex_of(r, i).tidx);
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j <= d; ++j) l.e.push_back(x->trace(r, {i, j}));
                images[d].push_back(labelling_to_ref(*x, l, tables));
            }
        }
        out.canonical = SimplicialMap(x, cosk, std::move(images));
    }
    return out;
}

// --- reduction and Eilenberg subcomplex -------------------------------------

ReductionResult reduce1(const PresPtr& x) {
    if (x->count(0) == 0) {
        // the quotient of the empty simplicial set attaches a fresh point
        PresentationBuilder b("R1(" + x->name() + ")");
        b.add_generator(0, "+");
        b.set_basepoint("+");
        PresPtr pt = share(b.build());
        std::vector<std::vector<SimplexRef>> images;
        return {pt, SimplicialMap(x, pt, std::move(images))};
    }
    Subcomplex low = subcomplex_from_predicate(*x, [](int d, int) { return d <= 1; });
    QuotientResult q = quotient(x, low, "R1(" + x->name() + ")");
    return {q.pres, q.map};
}

SimplicialMap reduce1_map(const SimplicialMap& f) {
    ReductionResult rx = reduce1(f.source_ptr());
    ReductionResult ry = reduce1(f.target_ptr());
    const Presentation& RX = *rx.pres;
    std::vector<std::vector<SimplexRef>> images(RX.top_dim() + 1);
    for (int d = 0; d <= RX.top_dim(); ++d) {
        for (int idx = 0; idx < RX.count(d); ++idx) {
            if (d == 0) {
                images[d].push_back(ry.pres->ref(0, ry.pres->basepoint()));
                continue;
            }
            int at = f.source().find(d, RX.generator(d, idx).id);
            if (at < 0) throw Error("internal: reduction lost a generator");
            images[d].push_back(ry.map.apply(f.image(d, at)));
        }
    }
    return SimplicialMap(rx.pres, ry.pres, std::move(images));
}

InclusionResult eilenberg1(const PresPtr& x) {
    if (!x->has_basepoint()) throw Error("eilenberg1: no basepoint");
    int bp = x->basepoint();
    SimplexRef bp_ref{{}, 0, bp};
    SimplexRef bp_edge = s0_of_vertex(bp);

    auto keep = [&](int d, int idx) {
        if (d == 0) return idx == bp;
        if (d == 1) return false;
        SimplexRef r = x->ref(d, idx);
        for (int i = 0; i <= d; ++i)
            if (!(x->vertex_of(r, i) == bp_ref)) return false;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j <= d; ++j)
                if (!(x->trace(r, {i, j}) == bp_edge)) return false;
        return true;
    };

    PresentationBuilder b("E1(" + x->name() + ")");
    for (int d = 0; d <= x->top_dim(); ++d) {
        for (int idx = 0; idx < x->count(d); ++idx) {
            if (!keep(d, idx)) continue;
            const Generator& g = x->generator(d, idx);
            std::vector<PresentationBuilder::PendingFace> faces;
            for (const auto& f : g.faces)
                faces.push_back({f.word, x->generator(f.tdim, f.tidx).id});
            b.add_generator(d, g.id, std::move(faces));
        }
    }
    b.set_basepoint(x->basepoint_id());
    PresPtr e1 = share(b.build());
    if (!is_one_reduced(*e1)) throw Error("internal: Eilenberg subcomplex not 1-reduced");

    std::vector<std::vector<SimplexRef>> images(std::max(e1->top_dim() + 1, 0));
    for (int d = 0; d <= e1->top_dim(); ++d)
        for (int idx = 0; idx < e1->count(d); ++idx)
            images[d].push_back(SimplexRef{{}, d, x->find(d, e1->generator(d, idx).id)});
    return {e1, SimplicialMap(e1, x, std::move(images))};
}

SimplicialMap factor_through_reduction(const SimplicialMap& f) {
    if (!is_one_reduced(f.target())) throw Error("factor_through_reduction: target is not 1-reduced");
    ReductionResult r = reduce1(f.source_ptr());
    const Presentation& RX = *r.pres;
    std::vector<std::vector<SimplexRef>> images(RX.top_dim() + 1);
    for (int d = 0; d <= RX.top_dim(); ++d) {
        for (int idx = 0; idx < RX.count(d); ++idx) {
            if (d == 0) {
                images[d].push_back(f.target().ref(0, 0));
                continue;
            }
            int at = f.source().find(d, RX.generator(d, idx).id);
            if (at < 0) throw Error("internal: reduction lost a generator");
            images[d].push_back(f.image(d, at));
        }
    }
    return SimplicialMap(r.pres, f.target_ptr(), std::move(images));
}

SimplicialMap factor_through_eilenberg(const SimplicialMap& f) {
    if (!is_one_reduced(f.source())) throw Error("factor_through_eilenberg: source is not 1-reduced");
    InclusionResult e = eilenberg1(f.target_ptr());
    const Presentation& X = f.source();
    std::vector<std::vector<SimplexRef>> images(X.top_dim() + 1);
    for (int d = 0; d <= X.top_dim(); ++d) {
        for (int idx = 0; idx < X.count(d); ++idx) {
            SimplexRef im = f.image(d, idx);
            int at = e.pres->find(im.tdim, f.target().generator(im.tdim, im.tidx).id);
            if (at < 0)
                throw Error("image of '" + X.generator(d, idx).id +
                            "' lies outside the Eilenberg subcomplex (map not pointed?)");
            images[d].push_back(SimplexRef{im.word, im.tdim, at});
        }
    }
    return SimplicialMap(f.source_ptr(), e.pres, std::move(images));
}

const std::vector<NamedMap>& corpus_maps() {
    static const std::vector<NamedMap> maps = [] {
        std::vector<NamedMap> out;
        auto add = [&](std::string name, SimplicialMap m) {
            ValidationReport rep = m.check();
            if (!rep.ok()) throw Error("corpus map " + name + " invalid: " + rep.to_string());
            out.push_back({std::move(name), std::move(m)});
        };

        add("id:s2", identity_map(corpus_entry("s2").pres));
        add("id:delta2", identity_map(corpus_entry("delta2").pres));
        for (int n = 1; n <= 3; ++n) {
            InclusionResult b = boundary_complex(n);
            add("incl:boundary" + std::to_string(n), b.inclusion);
        }
        for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 2}})
            add("incl:horn" + std::to_string(n) + "_" + std::to_string(k),
                horn_complex(n, k).inclusion);
        add("incl:sk1-delta2", skeleton1(corpus_entry("delta2").pres).inclusion);
        add("quot:delta2-r1", reduce1(corpus_entry("delta2").pres).map);
        add("quot:delta3-r1", reduce1(corpus_entry("delta3").pres).map);
        add("quot:torus-r1", reduce1(corpus_entry("torus").pres).map);
        {
            PresPtr c = corpus_entry("circle").pres;
            Product t(c, c);
            add("proj:torus-left", t.proj_left());
        }
        add("const:s2-s2",
            constant_map(corpus_entry("s2").pres, corpus_entry("s2").pres));
        add("const:delta2-s2",
            constant_map(corpus_entry("delta2").pres, corpus_entry("s2").pres));
        {
            PresPtr s2 = corpus_entry("s2").pres;
            WedgeResult w = wedge(s2, s2);
            add("incl:s2-wedge", w.left);
        }
        add("incl:e1-wedge-s2-circle",
            eilenberg1(corpus_entry("wedge-s2-circle").pres).inclusion);
        for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}, {4, 1}})
            add("red:horn" + std::to_string(n) + "_" + std::to_string(k),
                reduce1_map(horn_complex(n, k).inclusion));
        return out;
    }();
    return maps;
}

}  // namespace sset
