#include "logk3/linalg.hpp"

namespace logk3 {

namespace {

// x*a + y*b = g = gcd(a, b) >= 0, any signs of a, b.
struct Egcd { Int g, x, y; };

Egcd ext_gcd(Int a, Int b) {
    Int old_r = std::move(a), r = std::move(b);
    Int old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

} // namespace

std::tuple<int, int, int> signature_of(const Mat<Int>& g) {
    if (g.rows != g.cols) throw std::invalid_argument("signature of non-square matrix");
    const int n = g.rows;
    Mat<Rat> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(g.at(i, j));

    int pos = 0, neg = 0, zero = 0;
    // Congruence diagonalization: at each step pick a nonzero diagonal pivot
    // if available; otherwise a nonzero off-diagonal entry g_kj makes the
    // symmetric row+column addition produce 2*g_kj on the diagonal.
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k) == 0) {
            int j = -1;
            for (int t = k + 1; t < n; ++t)
                if (m.at(k, t) != 0) { j = t; break; }
            if (j < 0) { ++zero; continue; }
            // adding row/column j puts 2*g_kj + g_jj on the diagonal, which
            // may itself vanish; subtracting gives -2*g_kj + g_jj instead,
            // and the two cannot both be zero while g_kj != 0
            const Rat sign = (2 * m.at(k, j) + m.at(j, j) != 0) ? 1 : -1;
            for (int t = k; t < n; ++t) m.at(k, t) += sign * m.at(j, t);
            for (int t = k; t < n; ++t) m.at(t, k) += sign * m.at(t, j);
        }
        const Rat pivot = m.at(k, k);
        if (pivot > 0) ++pos; else ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            const Rat factor = m.at(i, k) / pivot;
            for (int t = k; t < n; ++t) m.at(i, t) -= factor * m.at(k, t);
            for (int t = k; t < n; ++t) m.at(t, i) -= factor * m.at(t, k);
        }
    }
    return {pos, neg, zero};
}

Mat<Int> unimodular_covector_completion(const IntVec& f) {
    const int n = static_cast<int>(f.size());
    if (n == 0) throw std::invalid_argument("covector completion of empty vector");
    bool nonzero = false;
    for (const Int& x : f) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::invalid_argument("covector completion of zero vector");

    // Special case +/- standard basis vector: swap that coordinate to the
    // front and keep the rest in order, so downstream kernels are identities.
    {
        int k = -1;
        bool standard = true;
        for (int i = 0; i < n; ++i) {
            if (f[i] == 0) continue;
            if (k >= 0 || (f[i] != 1 && f[i] != -1)) { standard = false; break; }
            k = i;
        }
        if (standard) {
            Mat<Int> u(n, n);
            u.at(k, 0) = f[k]; // f^T u e_0 = f_k^2 = 1
            int col = 1;
            for (int i = 0; i < n; ++i)
                if (i != k) u.at(i, col++) = 1;
            return u;
        }
    }

    // General case: column operations driven by extended gcds fold every
    // entry of f into column 0.
    Mat<Int> u = Mat<Int>::identity(n);
    IntVec v = f; // v = f^T u, maintained through the column operations
    int lead = -1;
    for (int j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        if (lead < 0) { lead = j; continue; }
        const Egcd r = ext_gcd(v[lead], v[j]);
        // The 2x2 column block [[x, -v_j/g], [y, v_lead/g]] has determinant 1
        // and sends (v_lead, v_j) to (g, 0).
        const Int pl = v[lead] / r.g, pj = v[j] / r.g;
        for (int i = 0; i < n; ++i) {
            const Int cl = u.at(i, lead), cj = u.at(i, j);
            u.at(i, lead) = cl * r.x + cj * r.y;
            u.at(i, j) = -cl * pj + cj * pl;
        }
        v[lead] = r.g;
        v[j] = 0;
    }
    if (lead != 0)
        for (int i = 0; i < n; ++i) std::swap(u.at(i, 0), u.at(i, lead));
    return u;
}

Mat<Int> unimodular_inverse(const Mat<Int>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows;
    // Gauss-Jordan over the rationals; integrality of the result certifies
    // that the input was unimodular.
    Mat<Rat> w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = Rat(m.at(i, j));
        w.at(i, n + i) = 1;
    }
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) { p = i; break; }
        if (p < 0) throw std::invalid_argument("matrix is singular, not unimodular");
        if (p != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(w.at(col, j), w.at(p, j));
        const Rat pivot = w.at(col, col);
        for (int j = 0; j < 2 * n; ++j) w.at(col, j) /= pivot;
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            const Rat factor = w.at(i, col);
            for (int j = 0; j < 2 * n; ++j) w.at(i, j) -= factor * w.at(col, j);
        }
    }
    Mat<Int> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = w.at(i, n + j);
            if (denominator(x) != 1)
                throw std::invalid_argument("matrix is not unimodular");
            inv.at(i, j) = numerator(x);
        }
    return inv;
}

} // namespace logk3
