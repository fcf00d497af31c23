#include "sset/complexes.hpp"

#include <algorithm>
#include <sstream>

namespace sset {

namespace {

std::string subset_id(const std::vector<int>& verts, int n) {
    std::ostringstream os;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (n >= 10 && i > 0) os << ".";
        os << verts[i];
    }
    return os.str();
}

void all_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

Presentation simplex_like(const std::string& name, int n,
                          const std::function<bool(const std::vector<int>&)>& keep) {
    PresentationBuilder b(name);
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<int>> subsets;
        all_subsets(n, k, subsets);
        for (const auto& s : subsets) {
            if (!keep(s)) continue;
            std::vector<PresentationBuilder::PendingFace> faces;
            for (int i = 0; i <= k && k >= 1; ++i) {
                std::vector<int> f = s;
                f.erase(f.begin() + i);
                faces.push_back({{}, subset_id(f, n)});
            }
            b.add_generator(k, subset_id(s, n), std::move(faces));
        }
    }
    return b.build();
}

SimplicialMap id_inclusion(const PresPtr& sub, const PresPtr& whole) {
    std::vector<std::vector<SimplexRef>> images(std::max(sub->top_dim() + 1, 0));
    for (int d = 0; d <= sub->top_dim(); ++d) {
        for (int idx = 0; idx < sub->count(d); ++idx) {
            int at = whole->find(d, sub->generator(d, idx).id);
            if (at < 0) throw Error("inclusion target lacks id " + sub->generator(d, idx).id);
            images[d].push_back(SimplexRef{{}, d, at});
        }
    }
    return SimplicialMap(sub, whole, std::move(images));
}

}  // namespace

Presentation standard_simplex(int n) {
    if (n < 0) throw Error("standard_simplex: n must be non-negative");
    Presentation p = simplex_like("Delta" + std::to_string(n), n,
                                  [](const std::vector<int>&) { return true; });
    return p;
}

InclusionResult boundary_complex(int n) {
    if (n < 0) throw Error("boundary_complex: n must be non-negative");
    PresPtr whole = share(standard_simplex(n));
    Presentation bd = simplex_like(
        "bdDelta" + std::to_string(n), n,
        [&](const std::vector<int>& s) { return static_cast<int>(s.size()) != n + 1; });
    PresPtr sub = share(std::move(bd));
    return {sub, id_inclusion(sub, whole)};
}

InclusionResult horn_complex(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw Error("horn_complex: indices out of range");
    PresPtr whole = share(standard_simplex(n));
    Presentation horn = simplex_like(
        "horn" + std::to_string(n) + "_" + std::to_string(k), n,
        [&](const std::vector<int>& s) {
            if (static_cast<int>(s.size()) == n + 1) return false;
            if (static_cast<int>(s.size()) == n) {
                // the deleted face is the one missing exactly vertex k
                bool has_k = std::find(s.begin(), s.end(), k) != s.end();
                if (!has_k) return false;
            }
            return true;
        });
    PresPtr sub = share(std::move(horn));
    return {sub, id_inclusion(sub, whole)};
}

PresPtr simplicial_sphere(int n) {
    if (n < 1) throw Error("simplicial_sphere: n must be positive");
    PresPtr delta = share(standard_simplex(n));
    Subcomplex boundary = subcomplex_from_predicate(
        *delta, [&](int d, int) { return d < n; });
    QuotientResult q = quotient(delta, boundary, "S" + std::to_string(n));
    return q.pres;
}

PresPtr rp2_model() {
    // Antipodal identification of the icosahedron; every pair of the six
    // vertices spans an edge and each edge lies in exactly two triangles.
    static const int tri[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                   {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
    PresentationBuilder b("rp2");
    for (int v = 1; v <= 6; ++v) b.add_generator(0, std::to_string(v));
    auto edge_id = [](int u, int v) {
        return std::to_string(std::min(u, v)) + std::to_string(std::max(u, v));
    };
    std::set<std::string> edges;
    for (const auto& t : tri) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) edges.insert(edge_id(t[i], t[j]));
    }
    for (const auto& e : edges)
        b.add_generator(1, e, {{{}, std::string(1, e[1])}, {{}, std::string(1, e[0])}});
    for (const auto& t : tri) {
        int a = t[0], c = t[1], d = t[2];  // a < c < d after sorting below
        int v[3] = {a, c, d};
        std::sort(v, v + 3);
        b.add_generator(2, std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]),
                        {{{}, edge_id(v[1], v[2])},
                         {{}, edge_id(v[0], v[2])},
                         {{}, edge_id(v[0], v[1])}});
    }
    b.set_basepoint("1");
    return share(b.build());
}

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, PresPtr p, std::set<std::string> tags) {
        ValidationReport rep = p->validate();
        if (!rep.ok()) throw Error("corpus entry " + name + " invalid: " + rep.to_string());
        out.push_back(CorpusEntry{std::move(name), std::move(p), std::move(tags)});
    };

    auto pointed_at = [](Presentation p, const std::string& v) {
        PresentationBuilder b(p.name());
        for (int d = 0; d <= p.top_dim(); ++d)
            for (int idx = 0; idx < p.count(d); ++idx) {
                const Generator& g = p.generator(d, idx);
                std::vector<PresentationBuilder::PendingFace> faces;
                for (const auto& f : g.faces)
                    faces.push_back({f.word, p.generator(f.tdim, f.tidx).id});
                b.add_generator(d, g.id, std::move(faces));
            }
        b.set_basepoint(v);
        return share(b.build());
    };

    add("delta0", pointed_at(standard_simplex(0), "0"), {"pointed", "1-reduced", "kan"});
    add("delta1", pointed_at(standard_simplex(1), "0"), {"pointed"});
    add("delta2", pointed_at(standard_simplex(2), "0"), {"pointed"});
    add("delta3", pointed_at(standard_simplex(3), "0"), {"pointed"});
    add("boundary2", pointed_at(*boundary_complex(2).pres, "0"), {"pointed"});
    add("boundary3", pointed_at(*boundary_complex(3).pres, "0"), {"pointed"});
    add("horn21", pointed_at(*horn_complex(2, 1).pres, "0"), {"pointed", "kan-known-false"});
    add("horn31", pointed_at(*horn_complex(3, 1).pres, "0"), {"pointed"});
    add("s0", disjoint_basepoint(share(standard_simplex(0))).pres, {"pointed", "kan"});
    add("circle", simplicial_sphere(1), {"pointed", "kan-known-false"});
    add("s2", simplicial_sphere(2), {"pointed", "1-reduced", "kan-known-false"});
    add("s3", simplicial_sphere(3), {"pointed", "1-reduced", "kan-known-false"});
    add("s4", simplicial_sphere(4), {"pointed", "1-reduced"});

    {
        PresPtr c = simplicial_sphere(1);
        Product torus(c, c);
        Presentation t = *torus.presentation();
        t.set_name("torus");
        add("torus", share(std::move(t)), {"pointed"});
    }
    {
        PresPtr s2 = simplicial_sphere(2);
        add("wedge-s2-s2", wedge(s2, s2).pres, {"pointed", "1-reduced"});
        add("wedge-s2-circle", wedge(s2, simplicial_sphere(1)).pres, {"pointed"});
        auto sm = smash(s2, disjoint_basepoint(share(standard_simplex(1))).pres);
        Presentation smp = *sm.pres;
        smp.set_name("smash-s2-interval");
        add("smash-s2-interval", share(std::move(smp)), {"pointed", "1-reduced"});
    }
    {
        InclusionResult horn = horn_complex(2, 1);
        PresPtr delta = share(standard_simplex(2));
        Subcomplex sub = subcomplex_from_predicate(*delta, [&](int d, int idx) {
            return horn.pres->find(d, delta->generator(d, idx).id) >= 0;
        });
        add("delta2-mod-horn", quotient(delta, sub, "delta2-mod-horn").pres, {"pointed"});
    }
    add("rp2", rp2_model(), {"pointed", "surface"});
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e;
    throw Error("no corpus entry named '" + name + "'");
}

}  // namespace sset
