#include "sset/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sset {

bool word_is_admissible(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] <= w[i + 1]) return false;
    return w.empty() || w.back() >= 0;
}

Word word_insert_degeneracy(const Word& w, int i) {
    Word out;
    out.reserve(w.size() + 1);
    size_t p = 0;
    while (p < w.size() && w[p] >= i) out.push_back(w[p++] + 1);
    out.push_back(i);
    while (p < w.size()) out.push_back(w[p++]);
    return out;
}

bool ref_less(const SimplexRef& a, const SimplexRef& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.tdim != b.tdim) return a.tdim < b.tdim;
    if (a.tidx != b.tidx) return a.tidx < b.tidx;
    return a.word < b.word;
}

std::string ValidationReport::to_string() const {
    if (issues.empty()) return "ok";
    std::ostringstream os;
    for (const auto& s : issues) os << s << "\n";
    return os.str();
}

int Presentation::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(gens_.size())) return 0;
    return static_cast<int>(gens_[dim].size());
}

int Presentation::total_generators() const {
    int n = 0;
    for (const auto& level : gens_) n += static_cast<int>(level.size());
    return n;
}

const std::vector<Generator>& Presentation::generators(int dim) const {
    static const std::vector<Generator> empty;
    if (dim < 0 || dim >= static_cast<int>(gens_.size())) return empty;
    return gens_[dim];
}

const Generator& Presentation::generator(int dim, int idx) const {
    if (dim < 0 || dim >= static_cast<int>(gens_.size()) || idx < 0 ||
        idx >= static_cast<int>(gens_[dim].size()))
        throw Error("generator reference out of range: dim " + std::to_string(dim) +
                    " index " + std::to_string(idx));
    return gens_[dim][idx];
}

int Presentation::find(int dim, const std::string& id) const {
    if (dim < 0 || dim >= static_cast<int>(gens_.size())) return -1;
    const auto& level = gens_[dim];
    auto it = std::lower_bound(level.begin(), level.end(), id,
                               [](const Generator& g, const std::string& s) { return g.id < s; });
    if (it != level.end() && it->id == id) return static_cast<int>(it - level.begin());
    return -1;
}

int Presentation::basepoint() const {
    if (!basepoint_) throw Error("presentation '" + name_ + "' has no basepoint");
    return *basepoint_;
}

const std::string& Presentation::basepoint_id() const {
    return generator(0, basepoint()).id;
}

SimplexRef Presentation::degeneracy(const SimplexRef& s, int i) const {
    if (i < 0 || i > s.dim())
        throw Error("degeneracy index " + std::to_string(i) + " out of range for dimension " +
                    std::to_string(s.dim()));
    return SimplexRef{word_insert_degeneracy(s.word, i), s.tdim, s.tidx};
}

SimplexRef Presentation::face(const SimplexRef& s, int i) const {
    int n = s.dim();
    if (n < 1) throw Error("face of a 0-simplex");
    if (i < 0 || i > n)
        throw Error("face index " + std::to_string(i) + " out of range for dimension " +
                    std::to_string(n));
    // Commute d_i through the degeneracy word; collect the degeneracies that
    // pass to the outside, then either cancel or hit the stored face data.
    std::vector<int> emitted;
    for (size_t p = 0; p < s.word.size(); ++p) {
        int j = s.word[p];
        if (i < j) {
            emitted.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
        } else if (i == j || i == j + 1) {
            // d_i s_j = id: the remaining inner word survives unchanged.
            SimplexRef out;
            out.tdim = s.tdim;
            out.tidx = s.tidx;
            out.word.assign(s.word.begin() + p + 1, s.word.end());
            for (auto it = emitted.rbegin(); it != emitted.rend(); ++it)
                out = degeneracy(out, *it);
            return out;
        } else {
            emitted.push_back(j);  // d_i s_j = s_j d_{i-1}
            i -= 1;
        }
    }
    const Generator& g = generator(s.tdim, s.tidx);
    if (s.tdim < 1 || i >= static_cast<int>(g.faces.size()))
        throw Error("face lookup out of range on generator '" + g.id + "'");
    SimplexRef out = g.faces[i];
    for (auto it = emitted.rbegin(); it != emitted.rend(); ++it) out = degeneracy(out, *it);
    return out;
}

SimplexRef Presentation::normalize(const OpWord& ops, SimplexRef s) const {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->kind == Op::Face)
            s = face(s, it->index);
        else
            s = degeneracy(s, it->index);
    }
    return s;
}

std::vector<SimplexRef> Presentation::simplices(int n) const {
    std::vector<SimplexRef> out;
    if (n < 0) return out;
    // Words of length k on a d-generator are the strictly decreasing
    // k-subsets of {0..n-1}; enumerate d from n downwards so less degenerate
    // refs come first.
    for (int d = std::min(n, top_dim()); d >= 0; --d) {
        int k = n - d;
        if (count(d) == 0) continue;
        std::vector<Word> words;
        Word cur;
        // descending subsets of {0..n-1} of size k, in lexicographic order
        auto rec = [&](auto&& self, int next_max) -> void {
            if (static_cast<int>(cur.size()) == k) {
                words.push_back(cur);
                return;
            }
            int need = k - static_cast<int>(cur.size());
            for (int v = next_max; v >= need - 1; --v) {
                cur.push_back(v);
                self(self, v - 1);
                cur.pop_back();
            }
        };
        rec(rec, n - 1);
        for (int idx = 0; idx < count(d); ++idx)
            for (const auto& w : words) out.push_back(SimplexRef{w, d, idx});
    }
    std::sort(out.begin(), out.end(), ref_less);
    return out;
}

SimplexRef Presentation::trace(const SimplexRef& s, const std::vector<int>& keep) const {
    int n = s.dim();
    std::vector<bool> kept(n + 1, false);
    for (int v : keep) {
        if (v < 0 || v > n) throw Error("trace vertex out of range");
        kept[v] = true;
    }
    SimplexRef out = s;
    for (int v = n; v >= 0; --v)
        if (!kept[v]) out = face(out, v);
    return out;
}

SimplexRef Presentation::vertex_of(const SimplexRef& s, int i) const {
    return trace(s, {i});
}

std::string Presentation::ref_string(const SimplexRef& s) const {
    std::ostringstream os;
    for (int i : s.word) os << "s" << i;
    if (!s.word.empty()) os << ":";
    os << generator(s.tdim, s.tidx).id;
    return os.str();
}

ValidationReport Presentation::validate_structure() const {
    ValidationReport rep;
    for (int d = 0; d <= top_dim(); ++d) {
        std::map<std::string, int> seen;
        for (int idx = 0; idx < count(d); ++idx) {
            const Generator& g = gens_[d][idx];
            if (g.id.empty())
                rep.issues.push_back("empty id at dimension " + std::to_string(d));
            if (++seen[g.id] == 2)
                rep.issues.push_back("duplicate id '" + g.id + "' at dimension " +
                                     std::to_string(d));
            if (d == 0 && !g.faces.empty()) {
                rep.issues.push_back("vertex '" + g.id + "' carries face data");
                continue;
            }
            if (d >= 1 && static_cast<int>(g.faces.size()) != d + 1) {
                rep.issues.push_back("generator '" + g.id + "' of dimension " +
                                     std::to_string(d) + " has " +
                                     std::to_string(g.faces.size()) + " faces, expected " +
                                     std::to_string(d + 1));
                continue;
            }
            for (int i = 0; i < static_cast<int>(g.faces.size()); ++i) {
                const SimplexRef& f = g.faces[i];
                std::string where =
                    "face d" + std::to_string(i) + " of '" + g.id + "' (dimension " +
                    std::to_string(d) + ")";
                if (!word_is_admissible(f.word)) {
                    rep.issues.push_back(where + ": word is not admissible");
                    continue;
                }
                if (f.tdim < 0 || f.tdim >= static_cast<int>(gens_.size()) || f.tidx < 0 ||
                    f.tidx >= count(f.tdim)) {
                    rep.issues.push_back(where + ": dangling target reference");
                    continue;
                }
                // word index bounds relative to the target dimension
                int len = static_cast<int>(f.word.size());
                for (int p = 0; p < len; ++p) {
                    if (f.word[p] < 0 || f.word[p] > f.tdim + (len - 1 - p)) {
                        rep.issues.push_back(where + ": degeneracy index out of range");
                        break;
                    }
                }
                if (f.dim() != d - 1)
                    rep.issues.push_back(where + ": has dimension " + std::to_string(f.dim()) +
                                         ", expected " + std::to_string(d - 1));
            }
        }
    }
    if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= count(0)))
        rep.issues.push_back("basepoint index out of range");
    return rep;
}

ValidationReport Presentation::validate() const {
    ValidationReport rep = validate_structure();
    if (!rep.ok()) return rep;  // identity checks assume sound structure
    // d_i d_j = d_{j-1} d_i for i < j, on every generator of dimension >= 2.
    for (int d = 2; d <= top_dim(); ++d) {
        for (int idx = 0; idx < count(d); ++idx) {
            SimplexRef r = ref(d, idx);
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    SimplexRef a = face(face(r, j), i);
                    SimplexRef b = face(face(r, i), j - 1);
                    if (!(a == b))
                        rep.issues.push_back("identity d" + std::to_string(i) + " d" +
                                             std::to_string(j) + " violated on '" +
                                             generator(d, idx).id + "': " + ref_string(a) +
                                             " != " + ref_string(b));
                }
            }
        }
    }
    return rep;
}

bool operator==(const Presentation& a, const Presentation& b) {
    return a.gens_ == b.gens_ && a.basepoint_ == b.basepoint_;
}

void PresentationBuilder::add_generator(int dim, std::string id,
                                        std::vector<PendingFace> faces) {
    if (dim < 0) throw Error("negative dimension");
    if (static_cast<int>(gens_.size()) <= dim) gens_.resize(dim + 1);
    gens_[dim].push_back(PendingGen{std::move(id), std::move(faces)});
}

void PresentationBuilder::set_basepoint(std::string vertex_id) {
    basepoint_ = std::move(vertex_id);
}

Presentation PresentationBuilder::build() {
    Presentation p;
    p.name_ = name_;
    p.gens_.resize(gens_.size());
    for (size_t d = 0; d < gens_.size(); ++d) {
        std::sort(gens_[d].begin(), gens_[d].end(),
                  [](const PendingGen& a, const PendingGen& b) { return a.id < b.id; });
        for (size_t i = 0; i + 1 < gens_[d].size(); ++i)
            if (gens_[d][i].id == gens_[d][i + 1].id)
                throw Error("duplicate id '" + gens_[d][i].id + "' at dimension " +
                            std::to_string(d));
        p.gens_[d].reserve(gens_[d].size());
        for (auto& g : gens_[d]) p.gens_[d].push_back(Generator{g.id, {}});
    }
    // resolve faces against the sorted tables
    for (size_t d = 0; d < gens_.size(); ++d) {
        for (size_t i = 0; i < gens_[d].size(); ++i) {
            auto& out = p.gens_[d][i].faces;
            for (const auto& pf : gens_[d][i].faces) {
                if (!word_is_admissible(pf.word)) {
                    if (!lax_)
                        throw Error("face word of '" + gens_[d][i].id +
                                    "' is not admissible (must be strictly decreasing)");
                }
                int tdim = static_cast<int>(d) - 1 - static_cast<int>(pf.word.size());
                int tidx = tdim >= 0 ? p.find(tdim, pf.target) : -1;
                if (tidx < 0) {
                    if (!lax_)
                        throw Error("face of '" + gens_[d][i].id + "' targets unknown id '" +
                                    pf.target + "' at dimension " + std::to_string(tdim));
                    // keep an out-of-range marker so validate() reports it
                    out.push_back(SimplexRef{pf.word, std::max(tdim, 0), -1});
                    continue;
                }
                out.push_back(SimplexRef{pf.word, tdim, tidx});
            }
        }
    }
    if (basepoint_) {
        int idx = p.find(0, *basepoint_);
        if (idx < 0) throw Error("basepoint '" + *basepoint_ + "' is not a vertex");
        p.basepoint_ = idx;
    }
    return p;
}

long long euler_characteristic(const Presentation& x) {
    long long chi = 0;
    for (int d = 0; d <= x.top_dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * x.count(d);
    return chi;
}

bool is_one_reduced(const Presentation& x) {
    return x.count(0) == 1 && x.count(1) == 0;
}

}  // namespace sset
