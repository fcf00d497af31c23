// Independent reference implementations used only by the test suites.  They
// must never call into the code paths they check.
#ifndef SSET_TEST_ORACLES_HPP
#define SSET_TEST_ORACLES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <random>
#include <vector>

#include "sset/intmat.hpp"

namespace oracles {

// --- monotone-sequence model of the standard simplex -------------------------
//
// A simplex of Delta[n] is a weakly increasing vertex sequence; d_i deletes
// position i and s_i duplicates it.  The Eilenberg-Zilber normal form is read
// off directly: the distinct values name the non-degenerate face, the repeat
// positions (descending) form the admissible word.

struct VertexSeq {
    std::vector<int> v;  // weakly increasing

    int dim() const { return static_cast<int>(v.size()) - 1; }
};

inline VertexSeq seq_face(VertexSeq s, int i) {
    s.v.erase(s.v.begin() + i);
    return s;
}

inline VertexSeq seq_degeneracy(VertexSeq s, int i) {
    s.v.insert(s.v.begin() + i, s.v[i]);
    return s;
}

struct SeqNormalForm {
    std::vector<int> word;      // descending repeat positions
    std::vector<int> vertices;  // strictly increasing
};

inline SeqNormalForm seq_normal_form(const VertexSeq& s) {
    SeqNormalForm nf;
    for (size_t t = 0; t + 1 < s.v.size(); ++t)
        if (s.v[t] == s.v[t + 1]) nf.word.push_back(static_cast<int>(t));
    std::reverse(nf.word.begin(), nf.word.end());
    for (int x : s.v)
        if (nf.vertices.empty() || nf.vertices.back() != x) nf.vertices.push_back(x);
    return nf;
}

// --- exact linear algebra oracles --------------------------------------------

using Rat = boost::rational<sset::Int>;

// Rank by straightforward Gaussian elimination over the rationals.
inline int rational_rank(const sset::IntMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a[r][c] = Rat(m.at(r, c));
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][c] != Rat(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == Rat(0)) continue;
            Rat f = a[r][c] / a[rank][c];
            for (int cc = c; cc < m.cols(); ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// Fraction-free determinant (Bareiss).
inline sset::Int bareiss_det(const sset::IntMatrix& m) {
    if (m.rows() != m.cols()) throw sset::Error("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<sset::Int>> a(n, std::vector<sset::Int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = m.at(r, c);
    sset::Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Deterministic sparse random matrices for the property suites.
inline sset::IntMatrix random_sparse(std::mt19937& rng, int max_side, int max_abs) {
    std::uniform_int_distribution<int> side(1, max_side);
    int rows = side(rng), cols = side(rng);
    sset::IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    std::uniform_int_distribution<int> density(0, 99);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (density(rng) < 30) m.at(r, c) = val(rng);
    return m;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracles

#endif
