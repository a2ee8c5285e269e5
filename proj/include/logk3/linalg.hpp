#pragma once

#include "logk3/ints.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace logk3 {

// Small dense matrices over an exact integer type.  The definiteness kernels
// are templates so the same algorithm can run at cpp_int (public API) and at
// int64 (the exhaustive agreement sweeps, where value bounds are provable).
template <class Z>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Z> a; // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Z& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Z& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    Mat transposed() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

template <class Z>
Mat<Z> mat_mul(const Mat<Z>& x, const Mat<Z>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: dimension mismatch");
    Mat<Z> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Z& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

template <class Z>
std::vector<Z> mat_apply(const Mat<Z>& m, const std::vector<Z>& v) {
    if (m.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Z> r(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Z s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        r[i] = std::move(s);
    }
    return r;
}

// Determinant by fraction-free (Bareiss) elimination with row pivoting; all
// intermediate divisions are exact, so the result is an exact integer.
template <class Z>
Z bareiss_det(Mat<Z> m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return Z(1);
    Z prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return Z(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Z(-m.at(n - 1, n - 1));
}

// Sylvester test: g is negative definite iff the leading principal minors
// alternate in sign starting negative, i.e. (-1)^k det(g_k) > 0 for all k.
// One fraction-free elimination yields every leading minor as a pivot
// (m(k,k) before step k equals det(g_{k+1})), so a single pass suffices; a
// zero or wrong-signed pivot exits before it would ever be divided by.
template <class Z>
bool negdef_by_minors(const Mat<Z>& g) {
    if (g.rows != g.cols) return false;
    const int n = g.rows;
    if (n > 0 && g.at(0, 0) >= 0) return false; // before paying for the copy
    Mat<Z> m = g;
    Z prev(1);
    for (int k = 0; k < n; ++k) {
        const Z d = m.at(k, k); // det of the leading (k+1) x (k+1) block
        if (k % 2 == 0 ? d >= 0 : d <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * d - m.at(i, k) * m.at(k, j)) / prev;
        prev = d;
    }
    return true;
}

// Coefficients c[0..n] of det(xI - A) = c[n] x^n + ... + c[0] (monic), by the
// Faddeev-LeVerrier recursion; the trace divisions are exact over Z.
template <class Z>
std::vector<Z> char_poly(const Mat<Z>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const int n = m.rows;
    std::vector<Z> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    Mat<Z> b = Mat<Z>::identity(n);
    Mat<Z> prod(n, n); // reused across rounds: the recursion runs in two buffers
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Z s = 0;
                for (int l = 0; l < n; ++l) s += m.at(i, l) * b.at(l, j);
                prod.at(i, j) = std::move(s);
            }
        std::swap(b.a, prod.a);
        Z tr = 0;
        for (int i = 0; i < n; ++i) tr += b.at(i, i);
        Z ck = -tr / k; // exact
        for (int i = 0; i < n; ++i) b.at(i, i) += ck;
        c[n - k] = std::move(ck);
    }
    return c;
}

// Independent definiteness oracle through eigenvalue signs: a real symmetric
// matrix has all-real spectrum, and all eigenvalues are negative exactly when
// every coefficient of the monic characteristic polynomial is positive
// (then p(x) > 0 for x >= 0, and conversely all roots < 0 force positivity).
// Runs the same Faddeev-LeVerrier recursion as char_poly but stops at the
// first non-positive coefficient, which already settles the verdict.
template <class Z>
bool negdef_by_eigen_signs(const Mat<Z>& g) {
    if (g.rows != g.cols) return false;
    const int n = g.rows;
    Mat<Z> b = Mat<Z>::identity(n);
    Mat<Z> prod(n, n);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Z s = 0;
                for (int l = 0; l < n; ++l) s += g.at(i, l) * b.at(l, j);
                prod.at(i, j) = std::move(s);
            }
        std::swap(b.a, prod.a);
        Z tr = 0;
        for (int i = 0; i < n; ++i) tr += b.at(i, i);
        Z ck = -tr / k; // exact
        if (ck <= 0) return false;
        for (int i = 0; i < n; ++i) b.at(i, i) += ck;
    }
    return true;
}

// Rank over Q by fraction-free elimination with full pivoting.
template <class Z>
int rank_of(Mat<Z> m) {
    int rank = 0;
    int row = 0;
    Z prev(1);
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
        for (int i = row + 1; i < m.rows; ++i)
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) / prev;
        prev = m.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

// Exact inertia (positives, negatives, zeros) of a symmetric matrix by
// congruence diagonalization over the rationals.
std::tuple<int, int, int> signature_of(const Mat<Int>& g);

// A unimodular matrix U with f^T U = (g, 0, ..., 0), g = gcd of the entries
// of f (f must be nonzero).  Columns 2..n of U form a basis of the integer
// kernel of f as a direct summand.  When f is +/- a standard basis vector the
// completion is chosen so that the kernel basis is the identity on the
// remaining coordinates, which makes blowup followed by contraction the
// literal identity.
Mat<Int> unimodular_covector_completion(const IntVec& f);

// Exact inverse of a matrix with determinant +/-1 (throws otherwise).
Mat<Int> unimodular_inverse(const Mat<Int>& m);

using IMat = Mat<Int>;

} // namespace logk3
