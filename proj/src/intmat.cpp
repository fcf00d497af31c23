#include "sset/intmat.hpp"

namespace sset {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_triplets(int rows, int cols,
                                   const std::vector<std::tuple<int, int, Int>>& trips) {
    IntMatrix m(rows, cols);
    for (const auto& [r, c, v] : trips) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("triplet out of range");
        m.at(r, c) += v;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

int IntMatrix::nnz() const {
    int n = 0;
    for (const auto& v : a_)
        if (v != 0) ++n;
    return n;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& y = o.at(k, j);
                if (y != 0) out.at(i, j) += x * y;
            }
        }
    }
    return out;
}

std::vector<Int> SNFResult::invariant_factors() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) {
        if (d.at(i, i) == 0) break;
        out.push_back(d.at(i, i));
    }
    return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Worker {
    IntMatrix a, u, v;

    explicit Worker(const IntMatrix& m)
        : a(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols())) {}

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_add(int dst, int src, const Int& q) {  // row_dst += q * row_src
        if (q == 0) return;
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
    }
    void col_add(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += q * a.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += q * v.at(r, src);
    }
    void row_negate(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }

    // smallest nonzero |entry| in the submatrix at (t, t)
    bool find_pivot(int t, int& pr, int& pc) {
        bool found = false;
        Int best;
        for (int r = t; r < a.rows(); ++r) {
            for (int c = t; c < a.cols(); ++c) {
                if (a.at(r, c) == 0) continue;
                Int m = abs_int(a.at(r, c));
                if (!found || m < best) {
                    best = m;
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        }
        return found;
    }

    // quotient with |a - q b| <= |b| / 2; keeps entry growth in check
    static Int nearest_quotient(const Int& x, const Int& b) {
        Int q = x / b;
        Int r = x - q * b;
        if (2 * abs_int(r) > abs_int(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
        return q;
    }

    void run() {
        int n = std::min(a.rows(), a.cols());
        for (int t = 0; t < n; ++t) {
            while (true) {
                int pr, pc;
                if (!find_pivot(t, pr, pc)) break;
                row_swap(t, pr);
                col_swap(t, pc);
                // one reduction sweep; remainders are at most half the pivot,
                // so re-picking the pivot terminates quickly
                bool reduced = false;
                for (int r = t + 1; r < a.rows(); ++r) {
                    if (a.at(r, t) == 0) continue;
                    row_add(r, t, -nearest_quotient(a.at(r, t), a.at(t, t)));
                    reduced |= a.at(r, t) != 0;
                }
                for (int c = t + 1; c < a.cols(); ++c) {
                    if (a.at(t, c) == 0) continue;
                    col_add(c, t, -nearest_quotient(a.at(t, c), a.at(t, t)));
                    reduced |= a.at(t, c) != 0;
                }
                if (reduced) continue;
                // pivot must divide the rest of the submatrix
                bool fixed = false;
                for (int r = t + 1; r < a.rows() && !fixed; ++r)
                    for (int c = t + 1; c < a.cols() && !fixed; ++c)
                        if (a.at(r, c) % a.at(t, t) != 0) {
                            row_add(t, r, 1);
                            fixed = true;
                        }
                if (!fixed) break;
            }
            if (a.at(t, t) < 0) row_negate(t);
        }
    }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    w.run();
    return SNFResult{std::move(w.u), std::move(w.a), std::move(w.v)};
}

}  // namespace sset
