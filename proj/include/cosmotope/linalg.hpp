#ifndef COSMOTOPE_LINALG_HPP
#define COSMOTOPE_LINALG_HPP

// Small exact linear algebra: integer determinants (Bareiss), rational
// Gauss-Jordan inverse, rational nullspace, primitive integer scaling.

#include <optional>
#include <vector>

#include "cosmotope/rational.hpp"

namespace cosmo {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// Fraction-free elimination; exact integer determinant of a square matrix.
inline BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return BigInt(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

inline BigInt det_bareiss(const IntMat& m) {
    std::vector<std::vector<BigInt>> b(m.size());
    for (size_t i = 0; i < m.size(); ++i) b[i].assign(m[i].begin(), m[i].end());
    return det_bareiss(std::move(b));
}

// Gauss-Jordan; nullopt when singular.
inline std::optional<QMat> invert(QMat a) {
    size_t n = a.size();
    QMat inv(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Basis of the right nullspace of an (r x c) rational matrix.
inline QMat rational_nullspace(QMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        Rational d = a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back((int)col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[(size_t)c] = true;
    QMat basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < rank; ++r)
            v[(size_t)pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scale a rational vector to a primitive integer vector; the sign is fixed
// so that the first nonzero entry is positive.
inline std::vector<BigInt> primitive_integer(const QVec& v) {
    BigInt l(1);
    for (const auto& x : v) l = lcm(l, x.den());
    std::vector<BigInt> w(v.size());
    BigInt g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].num() * (l / v[i].den());
        g = gcd(g, w[i]);
    }
    if (g.is_zero()) return w;
    int flip = 1;
    for (const auto& x : w)
        if (!x.is_zero()) { flip = x.is_negative() ? -1 : 1; break; }
    for (auto& x : w) { x = x / g; if (flip < 0) x = -x; }
    return w;
}

inline Rational dot(const QVec& a, const QVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace cosmo

#endif
