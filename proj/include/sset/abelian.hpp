#ifndef SSET_ABELIAN_HPP
#define SSET_ABELIAN_HPP

#include <set>

#include "sset/intmat.hpp"

namespace sset {

// Finitely generated abelian group in canonical primary decomposition: free
// rank plus prime-power torsion orders sorted ascending.
struct FGAbGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string to_string() const;

    friend bool operator==(const FGAbGroup&, const FGAbGroup&) = default;
};

// Primary decomposition of a list of invariant factors (> 1 entries only).
FGAbGroup group_from_invariant_factors(int rank, const std::vector<Int>& factors);

std::vector<std::pair<Int, int>> factorize(Int n);  // (prime, exponent), ascending

// The set of primes inverted by a multiplicative subset of the integers;
// "all" is the rational case.
struct PrimeSet {
    bool all = false;
    std::set<Int> primes;

    static PrimeSet rationals() { return PrimeSet{true, {}}; }
    static PrimeSet none() { return PrimeSet{false, {}}; }
    // Primes dividing the generators of the multiplicative set; generators
    // must be nonzero (inverting 0 collapses the ring).
    static PrimeSet from_multiplicative_set(const std::vector<Int>& generators);

    bool contains(const Int& p) const { return all || primes.count(p) > 0; }
    std::string to_string() const;
};

// Tensor with the localized integers: rank survives, torsion at inverted
// primes dies.
FGAbGroup localize(const FGAbGroup& g, const PrimeSet& p);

}  // namespace sset

#endif
