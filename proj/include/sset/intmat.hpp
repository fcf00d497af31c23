#ifndef SSET_INTMAT_HPP
#define SSET_INTMAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "sset/core.hpp"

namespace sset {

// All homological arithmetic is exact; Smith normal form entries can grow
// far beyond 64 bits even for small inputs.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_triplets(int rows, int cols,
                                   const std::vector<std::tuple<int, int, Int>>& trips);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    int nnz() const;

    IntMatrix mul(const IntMatrix& o) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SNFResult {
    IntMatrix u, d, v;  // u * a * v = d, u and v unimodular

    std::vector<Int> invariant_factors() const;  // nonzero diagonal, in order
    int rank() const { return static_cast<int>(invariant_factors().size()); }
};

// Diagonalization by unimodular row/column operations with the divisibility
// chain d1 | d2 | ...; diagonal entries are non-negative.
SNFResult smith_normal_form(const IntMatrix& a);

}  // namespace sset

#endif
