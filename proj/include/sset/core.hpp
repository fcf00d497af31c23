#ifndef SSET_CORE_HPP
#define SSET_CORE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sset {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by the search routines when an input exceeds the generator-count
// guard; exhaustive enumeration would not terminate in reasonable time.
struct TooLargeError : Error {
    using Error::Error;
};

// Degeneracy word in admissible form: strictly decreasing indices
// s_{i1} s_{i2} ... s_{ik}, i1 > i2 > ... > ik >= 0.  The empty word names a
// non-degenerate simplex.
using Word = std::vector<int>;

bool word_is_admissible(const Word& w);

// Admissible form of s_i composed with an admissible word (s_i s_j =
// s_{j+1} s_i for i <= j): entries >= i shift up by one, then i is inserted.
Word word_insert_degeneracy(const Word& w, int i);

// Canonical name of a simplex: an admissible degeneracy word applied to a
// non-degenerate generator, identified by (dimension, index) within its
// presentation.  Eilenberg-Zilber: every simplex has exactly one such name.
struct SimplexRef {
    Word word;
    int tdim = 0;  // dimension of the target generator
    int tidx = 0;  // index into the generator table at tdim

    int dim() const { return tdim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }

    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
    // structural order, used for map keys; ref_less is the enumeration order
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

// Deterministic order used everywhere simplices are enumerated: less
// degenerate first, then generator index, then word.
bool ref_less(const SimplexRef& a, const SimplexRef& b);

// A single face or degeneracy operator; OpWords are written in composition
// order (leftmost outermost) and applied right to left.
struct Op {
    enum Kind { Face, Degeneracy } kind;
    int index;

    friend bool operator==(const Op&, const Op&) = default;
};

using OpWord = std::vector<Op>;

struct Generator {
    std::string id;
    std::vector<SimplexRef> faces;  // d_0 ... d_n for an n-generator, n >= 1

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// A finite simplicial set presented by its non-degenerate simplices.
// Generators are sorted by id within each dimension; all derived
// enumerations are deterministic.  Instances are immutable once built.
class Presentation {
public:
    Presentation() = default;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int top_dim() const { return static_cast<int>(gens_.size()) - 1; }
    int count(int dim) const;
    int total_generators() const;
    const std::vector<Generator>& generators(int dim) const;
    const Generator& generator(int dim, int idx) const;

    // Index of the generator with this id at this dimension, or -1.
    int find(int dim, const std::string& id) const;

    bool has_basepoint() const { return basepoint_.has_value(); }
    // (dim 0, index) of the basepoint vertex; throws if unset.
    int basepoint() const;
    const std::string& basepoint_id() const;

    // --- simplex algebra -------------------------------------------------

    // s_i applied to a normalized ref; result is normalized.
    SimplexRef degeneracy(const SimplexRef& s, int i) const;
    // d_i applied to a normalized ref, resolved through stored face data.
    SimplexRef face(const SimplexRef& s, int i) const;
    // Apply an operator word (composition order) to a normalized ref.
    SimplexRef normalize(const OpWord& ops, SimplexRef s) const;

    // All simplices of dimension n, degenerate ones included, in ref_less
    // order.
    std::vector<SimplexRef> simplices(int n) const;

    // The non-degenerate ref of a generator.
    SimplexRef ref(int dim, int idx) const { return SimplexRef{{}, dim, idx}; }

    // Iterated face onto the vertex set `keep` (strictly increasing vertex
    // positions of an n-simplex); keep.size()-1 is the result dimension.
    SimplexRef trace(const SimplexRef& s, const std::vector<int>& keep) const;

    // i-th vertex of a simplex.
    SimplexRef vertex_of(const SimplexRef& s, int i) const;

    // Human-readable form "s1s0:id" of a ref.
    std::string ref_string(const SimplexRef& s) const;

    // Full check of the presentation invariants.  Structural defects
    // (dangling references, dimension mismatches, inadmissible words) are
    // reported alongside violated simplicial identities.
    ValidationReport validate() const;

    // Structure only (no identity checks); used as a gate before running
    // simplex algebra on untrusted data.
    ValidationReport validate_structure() const;

    // Name is ignored: two presentations are equal when their generator
    // tables, face data, and basepoint agree.
    friend bool operator==(const Presentation& a, const Presentation& b);

private:
    friend class PresentationBuilder;

    std::string name_;
    std::vector<std::vector<Generator>> gens_;
    std::optional<int> basepoint_;  // index into gens_[0]
};

// Collects generators in any order, then sorts by (dimension, id), resolves
// face targets and checks admissibility.  Dimension mismatches between a
// face slot and its ref are allowed through (validate() reports them) so
// that deliberately broken presentations can be constructed for testing;
// dangling targets and malformed words are hard errors unless `lax`.
class PresentationBuilder {
public:
    explicit PresentationBuilder(std::string name, bool lax = false)
        : name_(std::move(name)), lax_(lax) {}

    struct PendingFace {
        Word word;
        std::string target;  // id of a generator of dimension n-1-|word|
    };

    void add_generator(int dim, std::string id, std::vector<PendingFace> faces = {});
    void set_basepoint(std::string vertex_id);

    Presentation build();

private:
    struct PendingGen {
        std::string id;
        std::vector<PendingFace> faces;
    };

    std::string name_;
    bool lax_;
    std::vector<std::vector<PendingGen>> gens_;
    std::optional<std::string> basepoint_;
};

// Euler characteristic: alternating sum of generator counts.
long long euler_characteristic(const Presentation& x);

// True iff exactly one vertex and no non-degenerate 1-simplices.
bool is_one_reduced(const Presentation& x);

}  // namespace sset

#endif
