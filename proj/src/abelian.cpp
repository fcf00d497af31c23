#include "sset/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace sset {

std::string FGAbGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (rank == 1) {
        sep();
        os << "Z";
    } else if (rank > 1) {
        sep();
        os << "Z^" << rank;
    }
    for (const auto& t : torsion) {
        sep();
        os << "Z/" << t;
    }
    return os.str();
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw Error("factorize(0)");
    std::vector<std::pair<Int, int>> out;
    auto take = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(2);
    take(3);
    for (Int p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

FGAbGroup group_from_invariant_factors(int rank, const std::vector<Int>& factors) {
    FGAbGroup g;
    g.rank = rank;
    for (const auto& f : factors) {
        if (f <= 0) throw Error("invariant factor must be positive");
        if (f == 1) continue;
        for (const auto& [p, e] : factorize(f)) {
            Int q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            g.torsion.push_back(q);
        }
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

PrimeSet PrimeSet::from_multiplicative_set(const std::vector<Int>& generators) {
    PrimeSet ps;
    for (const auto& m : generators) {
        if (m == 0) throw Error("0 cannot be inverted");
        for (const auto& [p, e] : factorize(m)) {
            (void)e;
            ps.primes.insert(p);
        }
    }
    return ps;
}

std::string PrimeSet::to_string() const {
    if (all) return "all primes (rational coefficients)";
    if (primes.empty()) return "no primes (integral coefficients)";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& p : primes) {
        if (!first) os << ",";
        first = false;
        os << p;
    }
    os << "}";
    return os.str();
}

FGAbGroup localize(const FGAbGroup& g, const PrimeSet& ps) {
    FGAbGroup out;
    out.rank = g.rank;
    for (const auto& t : g.torsion) {
        Int p = factorize(t).front().first;
        if (!ps.contains(p)) out.torsion.push_back(t);
    }
    return out;
}

}  // namespace sset
