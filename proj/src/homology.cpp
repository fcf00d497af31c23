#include "sset/homology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace sset {

void ChainComplexZ::check_dd_zero() const {
    for (int n = 1; n <= top_degree(); ++n) {
        if (boundary[n].rows() != dim(n - 1) || boundary[n].cols() != dim(n))
            throw Error("boundary matrix shape mismatch at degree " + std::to_string(n));
        if (n >= 1 && !boundary[n - 1].mul(boundary[n]).is_zero())
            throw Error("d o d != 0 between degrees " + std::to_string(n) + " and " +
                        std::to_string(n - 2));
    }
}

ChainComplexZ chain_complex(const Presentation& x) {
    ValidationReport rep = x.validate();
    if (!rep.ok()) throw Error("chain_complex: invalid presentation: " + rep.to_string());
    ChainComplexZ c;
    int top = x.top_dim();
    c.cells.resize(top + 1);
    c.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n)
        for (int idx = 0; idx < x.count(n); ++idx) c.cells[n].push_back(x.generator(n, idx).id);
    for (int n = 0; n <= top; ++n) {
        c.boundary[n] = IntMatrix(n >= 1 ? x.count(n - 1) : 0, x.count(n));
        if (n == 0) continue;
        for (int idx = 0; idx < x.count(n); ++idx) {
            for (int i = 0; i <= n; ++i) {
                const SimplexRef f = x.face(x.ref(n, idx), i);
                if (f.degenerate()) continue;
                c.boundary[n].at(f.tidx, idx) += (i % 2 == 0) ? 1 : -1;
            }
        }
    }
    c.check_dd_zero();
    return c;
}

void ChainMapZ::check_commutes() const {
    for (int n = 1; n < static_cast<int>(matrix.size()); ++n) {
        if (n > source.top_degree()) break;
        IntMatrix tb = n <= target.top_degree()
                           ? target.boundary[n]
                           : IntMatrix(target.dim(n - 1), target.dim(n));
        IntMatrix lhs = tb.mul(matrix[n]);
        IntMatrix rhs = matrix[n - 1].mul(source.boundary[n]);
        if (!(lhs == rhs))
            throw Error("chain map does not commute with the boundary at degree " +
                        std::to_string(n));
    }
}

ChainMapZ induced_map(const SimplicialMap& f) {
    ChainMapZ m;
    m.source = chain_complex(f.source());
    m.target = chain_complex(f.target());
    int top = m.source.top_degree();
    m.matrix.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        m.matrix[n] = IntMatrix(m.target.dim(n), m.source.dim(n));
        for (int idx = 0; idx < m.source.dim(n); ++idx) {
            const SimplexRef& im = f.image(n, idx);
            if (im.degenerate()) continue;
            m.matrix[n].at(im.tidx, idx) = 1;
        }
    }
    m.check_commutes();
    return m;
}

ChainMapZ identity_chain_map(const ChainComplexZ& c) {
    ChainMapZ m;
    m.source = c;
    m.target = c;
    for (int n = 0; n <= c.top_degree(); ++n) m.matrix.push_back(IntMatrix::identity(c.dim(n)));
    return m;
}

ChainMapZ compose(const ChainMapZ& g, const ChainMapZ& f) {
    ChainMapZ m;
    m.source = f.source;
    m.target = g.target;
    for (int n = 0; n <= f.source.top_degree(); ++n) {
        IntMatrix gm = n <= static_cast<int>(g.matrix.size()) - 1
                           ? g.matrix[n]
                           : IntMatrix(g.target.dim(n), f.target.dim(n));
        m.matrix.push_back(gm.mul(f.matrix[n]));
    }
    return m;
}

ChainComplexZ mapping_cone(const ChainMapZ& f) {
    int top = std::max(f.target.top_degree(), f.source.top_degree() + 1);
    ChainComplexZ cone;
    cone.cells.resize(top + 1);
    cone.boundary.resize(top + 1);
    auto tdim = [&](int n) { return f.target.dim(n); };
    auto sdim = [&](int n) { return f.source.dim(n); };
    for (int n = 0; n <= top; ++n) {
        for (int i = 0; i < tdim(n); ++i) cone.cells[n].push_back("t:" + f.target.cells[n][i]);
        for (int i = 0; i < sdim(n - 1); ++i)
            cone.cells[n].push_back("s:" + f.source.cells[n - 1][i]);
        cone.boundary[n] = IntMatrix(n >= 1 ? tdim(n - 1) + sdim(n - 2) : 0,
                                     tdim(n) + sdim(n - 1));
        if (n == 0) continue;
        // target block: d_target
        if (n <= f.target.top_degree())
            for (int r = 0; r < tdim(n - 1); ++r)
                for (int c = 0; c < tdim(n); ++c)
                    cone.boundary[n].at(r, c) = f.target.boundary[n].at(r, c);
        // source shifted block: f into target, then -d_source
        if (n - 1 <= f.source.top_degree() && n - 1 >= 0) {
            for (int r = 0; r < tdim(n - 1); ++r)
                for (int c = 0; c < sdim(n - 1); ++c)
                    cone.boundary[n].at(r, tdim(n) + c) = f.matrix[n - 1].at(r, c);
            if (n - 1 >= 1)
                for (int r = 0; r < sdim(n - 2); ++r)
                    for (int c = 0; c < sdim(n - 1); ++c)
                        cone.boundary[n].at(tdim(n - 1) + r, tdim(n) + c) =
                            -f.source.boundary[n - 1].at(r, c);
        }
    }
    cone.check_dd_zero();
    return cone;
}

std::vector<FGAbGroup> homology(const ChainComplexZ& c) {
    int top = c.top_degree();
    std::vector<FGAbGroup> out;
    if (top < 0) return out;
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<Int>> factors(top + 2);
    for (int n = 1; n <= top; ++n) {
        SNFResult snf = smith_normal_form(c.boundary[n]);
        factors[n] = snf.invariant_factors();
        rank[n] = static_cast<int>(factors[n].size());
    }
    for (int n = 0; n <= top; ++n) {
        int free_rank = c.dim(n) - rank[n] - rank[n + 1];
        out.push_back(group_from_invariant_factors(free_rank, factors[n + 1]));
    }
    return out;
}

std::vector<FGAbGroup> homology_Z(const Presentation& x) {
    return homology(chain_complex(x));
}

std::vector<FGAbGroup> homology_localized(const Presentation& x, const PrimeSet& p) {
    std::vector<FGAbGroup> out = homology_Z(x);
    for (auto& g : out) g = localize(g, p);
    return out;
}

LocalIsoReport local_iso_report(const ChainMapZ& f, const PrimeSet& p) {
    ChainComplexZ cone = mapping_cone(f);
    std::vector<FGAbGroup> h = homology(cone);
    LocalIsoReport rep;
    rep.holds = true;
    for (int n = 0; n < static_cast<int>(h.size()); ++n) {
        FGAbGroup loc = localize(h[n], p);
        if (!loc.trivial()) rep.holds = false;
        rep.degrees.push_back({n, h[n], loc});
    }
    return rep;
}

LocalIsoReport is_local_homology_iso(const SimplicialMap& f, const PrimeSet& p) {
    return local_iso_report(induced_map(f), p);
}

LocalIsoReport is_local_weq_one_reduced(const SimplicialMap& f, const PrimeSet& p) {
    if (!is_one_reduced(f.source()))
        throw Error("is_local_weq_one_reduced: source is not 1-reduced");
    if (!is_one_reduced(f.target()))
        throw Error("is_local_weq_one_reduced: target is not 1-reduced");
    return is_local_homology_iso(f, p);
}

// --- fundamental group -------------------------------------------------------

std::string GroupPresentation::to_string() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < generators.size(); ++i) {
        if (i) os << ", ";
        os << generators[i];
    }
    os << " | ";
    for (size_t r = 0; r < relators.size(); ++r) {
        if (r) os << ", ";
        if (relators[r].empty()) os << "1";
        for (size_t j = 0; j < relators[r].size(); ++j) {
            int l = relators[r][j];
            os << generators[std::abs(l) - 1];
            if (l < 0) os << "^-1";
            if (j + 1 < relators[r].size()) os << "*";
        }
    }
    os << ">";
    return os.str();
}

namespace {

std::vector<int> free_reduce(std::vector<int> w) {
    std::vector<int> out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

}  // namespace

GroupPresentation pi1_presentation(const Presentation& x, const std::string& base_vertex) {
    if (x.count(0) == 0) throw Error("pi1_presentation: empty complex");
    int base;
    if (!base_vertex.empty()) {
        base = x.find(0, base_vertex);
        if (base < 0) throw Error("pi1_presentation: unknown base vertex '" + base_vertex + "'");
    } else if (x.has_basepoint()) {
        base = x.basepoint();
    } else {
        base = 0;  // generators are sorted by id
    }

    // breadth-first spanning tree over the non-degenerate edges
    int nv = x.count(0);
    int ne = x.count(1);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // vertex -> (neighbor, edge idx)
    for (int e = 0; e < ne; ++e) {
        int v1 = x.face(x.ref(1, e), 1).tidx;  // source
        int v0 = x.face(x.ref(1, e), 0).tidx;  // target
        adj[v1].push_back({v0, e});
        adj[v0].push_back({v1, e});
    }
    for (auto& nbrs : adj)
        std::sort(nbrs.begin(), nbrs.end(), [&](const auto& a, const auto& b) {
            const std::string& ia = x.generator(0, a.first).id;
            const std::string& ib = x.generator(0, b.first).id;
            if (ia != ib) return ia < ib;
            return x.generator(1, a.second).id < x.generator(1, b.second).id;
        });
    std::vector<bool> seen(nv, false), in_tree(ne, false);
    std::queue<int> bfs;
    bfs.push(base);
    seen[base] = true;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (const auto& [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            in_tree[e] = true;
            ++reached;
            bfs.push(w);
        }
    }
    if (reached != nv) throw Error("pi1_presentation: complex is not connected");

    GroupPresentation g;
    std::vector<int> letter(ne, 0);
    for (int e = 0; e < ne; ++e) {
        if (in_tree[e]) continue;
        g.generators.push_back(x.generator(1, e).id);
        letter[e] = static_cast<int>(g.generators.size());
    }
    auto edge_letter = [&](const SimplexRef& r) -> int {
        if (r.degenerate()) return 0;
        return letter[r.tidx];
    };
    for (int t = 0; t < x.count(2); ++t) {
        SimplexRef r = x.ref(2, t);
        std::vector<int> w;
        if (int l = edge_letter(x.face(r, 2))) w.push_back(l);
        if (int l = edge_letter(x.face(r, 0))) w.push_back(l);
        if (int l = edge_letter(x.face(r, 1))) w.push_back(-l);
        w = free_reduce(w);
        if (!w.empty()) g.relators.push_back(std::move(w));
    }

    // eliminate generators forced trivial by single-letter relators
    while (true) {
        int kill = 0;
        for (const auto& r : g.relators)
            if (r.size() == 1) {
                kill = std::abs(r[0]);
                break;
            }
        if (kill == 0) break;
        std::vector<std::vector<int>> next;
        for (const auto& r : g.relators) {
            std::vector<int> w;
            for (int l : r) {
                int m = std::abs(l);
                if (m == kill) continue;
                if (m > kill) --m;  // indices above the removed generator shift down
                w.push_back(l > 0 ? m : -m);
            }
            w = free_reduce(w);
            if (!w.empty()) next.push_back(std::move(w));
        }
        g.relators = std::move(next);
        g.generators.erase(g.generators.begin() + (kill - 1));
    }
    return g;
}

FGAbGroup abelianization(const GroupPresentation& g) {
    int ng = static_cast<int>(g.generators.size());
    IntMatrix m(ng, static_cast<int>(g.relators.size()));
    for (int c = 0; c < m.cols(); ++c)
        for (int l : g.relators[c]) m.at(std::abs(l) - 1, c) += (l > 0 ? 1 : -1);
    SNFResult snf = smith_normal_form(m);
    std::vector<Int> factors = snf.invariant_factors();
    return group_from_invariant_factors(ng - static_cast<int>(factors.size()), factors);
}

}  // namespace sset
