#pragma once

// Exact arithmetic over integer matrices and finitely generated abelian
// groups: Smith normal form, homology of a two-step presentation, direct
// sums in invariant-factor form. Everything here is total over arbitrary
// precision integers; elimination is deterministic (smallest-pivot rule,
// row-major ties) so results can be frozen into golden tests.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foldcalc/errors.hpp"

namespace foldcalc {

using Integer = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// IntMatrix
// ---------------------------------------------------------------------------

/// Dense row-major integer matrix. Zero-dimensional shapes (0 x k, k x 0)
/// are valid and show up as the boundary maps at the ends of a chain complex.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {
        assert(rows >= 0 && cols >= 0);
    }
    IntMatrix(int rows, int cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        assert(data_.size() == size_t(rows) * size_t(cols));
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const std::vector<Integer>& d) {
        IntMatrix m(int(d.size()), int(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
        return m;
    }
    /// Row-major initializer, e.g. from_rows({{2,4},{6,8}}).
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
        int r = int(rows.size());
        int c = rows.empty() ? 0 : int(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            assert(int(rows[i].size()) == c);
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * cols_ + j];
    }
    const Integer& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[size_t(i) * cols_ + j];
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const {
        assert(cols_ == o.rows_);
        IntMatrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Integer& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    IntMatrix transposed() const {
        IntMatrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Integer det() const {
        assert(rows_ == cols_);
        int n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Integer denom = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a.at(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a.at(i, k) != 0) {
                        p = i;
                        break;
                    }
                if (p < 0) return 0;
                for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                    a.at(i, j) = v / denom;  // exact by Bareiss
                }
                a.at(i, k) = 0;
            }
            denom = a.at(k, k);
        }
        return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
    }

    /// Rank over Q (= rank over Z), fraction-free elimination. Independent of
    /// the Smith normal form path on purpose; tests play them against each other.
    int rank_rational() const {
        IntMatrix a = *this;
        int r = 0;
        for (int c = 0; c < a.cols_ && r < a.rows_; ++c) {
            int p = -1;
            for (int i = r; i < a.rows_; ++i)
                if (a.at(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            for (int j = 0; j < a.cols_; ++j) std::swap(a.at(r, j), a.at(p, j));
            for (int i = r + 1; i < a.rows_; ++i) {
                if (a.at(i, c) == 0) continue;
                Integer g = boost::multiprecision::gcd(a.at(r, c), a.at(i, c));
                Integer fr = a.at(i, c) / g, fi = a.at(r, c) / g;
                for (int j = 0; j < a.cols_; ++j) a.at(i, j) = fi * a.at(i, j) - fr * a.at(r, j);
            }
            ++r;
        }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<Integer> data_;
};

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// U*A*V = D with U, V unimodular and D diagonal satisfying d1 | d2 | ...
/// (nonnegative, zeros trailing). v_inv carries V^-1, needed when a kernel
/// basis produced by one SNF has to absorb the image of another matrix.
struct SNFResult {
    IntMatrix U, D, V;
    IntMatrix v_inv;
    int original_rows = 0, original_cols = 0;

    int rank() const {
        int r = 0;
        int n = std::min(D.rows(), D.cols());
        while (r < n && D.at(r, r) != 0) ++r;
        return r;
    }
    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        int n = std::min(D.rows(), D.cols());
        for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
        return d;
    }
};

namespace detail {

inline Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

struct SNFWork {
    IntMatrix D, U, V, Vinv;

    void row_swap(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
        for (int j = 0; j < Vinv.cols(); ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
    }
    // R_i -= q * R_t
    void row_addmul(int i, int t, const Integer& q) {
        if (q == 0) return;
        for (int j = 0; j < D.cols(); ++j) D.at(i, j) -= q * D.at(t, j);
        for (int j = 0; j < U.cols(); ++j) U.at(i, j) -= q * U.at(t, j);
    }
    // C_j -= q * C_t;  V <- V*F,  Vinv <- F^-1 * Vinv
    void col_addmul(int j, int t, const Integer& q) {
        if (q == 0) return;
        for (int i = 0; i < D.rows(); ++i) D.at(i, j) -= q * D.at(i, t);
        for (int i = 0; i < V.rows(); ++i) V.at(i, j) -= q * V.at(i, t);
        for (int k = 0; k < Vinv.cols(); ++k) Vinv.at(t, k) += q * Vinv.at(j, k);
    }
    void row_negate(int i) {
        for (int j = 0; j < D.cols(); ++j) D.at(i, j) = -D.at(i, j);
        for (int j = 0; j < U.cols(); ++j) U.at(i, j) = -U.at(i, j);
    }
};

}  // namespace detail

/// Smith normal form. Pivot rule: smallest nonzero absolute value in the
/// remaining submatrix, ties broken by row-major position.
inline SNFResult smith_normal_form(const IntMatrix& A) {
    const int m = A.rows(), n = A.cols();
    detail::SNFWork w{A, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // pick pivot
            int pi = -1, pj = -1;
            Integer best;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Integer& v = w.D.at(i, j);
                    if (v == 0) continue;
                    Integer a = detail::abs_int(v);
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // submatrix is zero
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            const Integer p = w.D.at(t, t);
            bool clean = true;
            for (int i = t + 1; i < m; ++i)
                if (w.D.at(i, t) != 0) {
                    w.row_addmul(i, t, Integer(w.D.at(i, t) / p));
                    if (w.D.at(i, t) != 0) clean = false;  // remainder, smaller than |p|
                }
            for (int j = t + 1; j < n; ++j)
                if (w.D.at(t, j) != 0) {
                    w.col_addmul(j, t, Integer(w.D.at(t, j) / p));
                    if (w.D.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // pivot must divide the whole remaining submatrix for the
            // invariant-factor chain; if not, fold an offending row in and redo
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (w.D.at(i, j) % p != 0) {
                        w.row_addmul(t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.D.at(t, t) < 0) w.row_negate(t);
    }
done:
    SNFResult r;
    r.U = std::move(w.U);
    r.D = std::move(w.D);
    r.V = std::move(w.V);
    r.v_inv = std::move(w.Vinv);
    r.original_rows = m;
    r.original_cols = n;
    return r;
}

// ---------------------------------------------------------------------------
// FGAbelianGroup
// ---------------------------------------------------------------------------

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/dt with 2 <= d1 | d2 | ... | dt.
struct FGAbelianGroup {
    int free_rank = 0;
    std::vector<Integer> torsion;

    FGAbelianGroup() = default;
    explicit FGAbelianGroup(int rank) : free_rank(rank) {}
    FGAbelianGroup(int rank, std::vector<Integer> tors) : free_rank(rank), torsion(std::move(tors)) {
        normalize();
    }

    static FGAbelianGroup trivial() { return FGAbelianGroup(); }
    static FGAbelianGroup free(int rank) { return FGAbelianGroup(rank); }
    static FGAbelianGroup cyclic(const Integer& n) {
        return FGAbelianGroup(0, {n});
    }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    /// Number of elements, when finite.
    std::optional<Integer> order() const {
        if (free_rank > 0) return std::nullopt;
        Integer o = 1;
        for (const Integer& d : torsion) o *= d;
        return o;
    }

    int mod2_rank_local() const {
        // dim over Z/2 of (this group) tensor Z/2
        int r = free_rank;
        for (const Integer& d : torsion)
            if (d % 2 == 0) ++r;
        return r;
    }

    bool operator==(const FGAbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FGAbelianGroup& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (const Integer& d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + d.str();
        }
        return s;
    }

private:
    // Renormalize an arbitrary factor list to the invariant-factor chain by
    // running SNF on the corresponding diagonal matrix.
    void normalize() {
        std::vector<Integer> factors;
        for (Integer& d : torsion) {
            Integer a = detail::abs_int(d);
            if (a == 0) {
                ++free_rank;  // Z/0 = Z
                continue;
            }
            if (a == 1) continue;  // Z/1 = 0
            factors.push_back(a);
        }
        bool chained = true;
        for (size_t i = 0; i + 1 < factors.size(); ++i)
            if (factors[i + 1] % factors[i] != 0) {
                chained = false;
                break;
            }
        if (!chained) {
            SNFResult snf = smith_normal_form(IntMatrix::diagonal(factors));
            factors = snf.diagonal();
        }
        torsion.clear();
        for (const Integer& d : factors)
            if (d >= 2) torsion.push_back(d);
    }
};

/// Direct sum; torsion lists merge and renormalize to a divisibility chain.
inline FGAbelianGroup direct_sum(const FGAbelianGroup& g1, const FGAbelianGroup& g2) {
    std::vector<Integer> tors = g1.torsion;
    tors.insert(tors.end(), g2.torsion.begin(), g2.torsion.end());
    return FGAbelianGroup(g1.free_rank + g2.free_rank, std::move(tors));
}

// ---------------------------------------------------------------------------
// Homology of a presentation
// ---------------------------------------------------------------------------

/// H = ker(boundary_out) / im(boundary_in) for a two-step chain
///   C_in --boundary_in--> C --boundary_out--> C_out.
/// Requires boundary_out * boundary_in = 0; throws ChainConditionViolated
/// otherwise. Shapes: boundary_in is k x j, boundary_out is l x k where
/// k = rank of the middle chain group.
inline FGAbelianGroup homology_of_presentation(const IntMatrix& boundary_in,
                                               const IntMatrix& boundary_out) {
    const int k = boundary_in.rows();
    if (boundary_out.cols() != k)
        throw DimensionMismatch("homology_of_presentation: middle rank mismatch (" +
                                std::to_string(boundary_out.cols()) + " vs " + std::to_string(k) +
                                ")");
    if (!(boundary_out * boundary_in).is_zero())
        throw ChainConditionViolated("homology_of_presentation: boundary_out * boundary_in != 0");

    if (k == 0) return FGAbelianGroup::trivial();

    // Kernel of boundary_out: columns r.. of V form a basis of the saturated
    // kernel lattice, with r = rank.
    SNFResult out = smith_normal_form(boundary_out);
    const int r = out.rank();
    const int kernel_rank = k - r;

    // Express boundary_in in that kernel basis: W = V^-1 * boundary_in has
    // zero first r rows (chain condition); the rest presents the quotient.
    IntMatrix W = out.v_inv * boundary_in;
    IntMatrix P(kernel_rank, boundary_in.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < W.cols(); ++j) assert(W.at(i, j) == 0);
    for (int i = 0; i < kernel_rank; ++i)
        for (int j = 0; j < W.cols(); ++j) P.at(i, j) = W.at(r + i, j);

    SNFResult pres = smith_normal_form(P);
    std::vector<Integer> torsion;
    for (const Integer& d : pres.diagonal())
        if (d >= 2) torsion.push_back(d);
    return FGAbelianGroup(kernel_rank - pres.rank(), std::move(torsion));
}

}  // namespace foldcalc
