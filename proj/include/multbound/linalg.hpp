#pragma once

#include <optional>

#include "multbound/numeric.hpp"

namespace multbound::linalg {

// In-place fraction-full Gauss-Jordan. Returns rank, records pivot columns.
inline int row_reduce(QMatrix& m, std::vector<int>* pivot_cols = nullptr) {
    if (pivot_cols) pivot_cols->clear();
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][c] != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][c];
        for (int j = c; j < cols; ++j) m[rank][j] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++rank;
    }
    return rank;
}

inline int rank(QMatrix m) { return row_reduce(m); }

// Any solution of A x = b with free variables set to zero; nullopt if inconsistent.
inline std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
    if (a.empty()) return QVec{};
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    QMatrix aug(rows, QVec(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    std::vector<int> pivots;
    int rk = row_reduce(aug, &pivots);
    for (int r = rk; r < rows; ++r) {
        // a zero row must have zero rhs
        bool all_zero = true;
        for (int c = 0; c < cols; ++c) {
            if (aug[r][c] != 0) { all_zero = false; break; }
        }
        if (all_zero && aug[r][cols] != 0) return std::nullopt;
    }
    for (int r = 0; r < rk; ++r) {
        if (pivots[r] >= cols) return std::nullopt;  // pivot in rhs column
    }
    QVec x(cols, Rational(0));
    for (int r = 0; r < rk; ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

// Solution of A x = b when it is unique; nullopt otherwise.
inline std::optional<QVec> solve_unique(const QMatrix& a, const QVec& b) {
    if (a.empty()) return std::nullopt;
    const int cols = static_cast<int>(a[0].size());
    QMatrix copy = a;
    if (row_reduce(copy) != cols) return std::nullopt;
    return solve(a, b);
}

// Basis of { x : A x = 0 }.
inline std::vector<QVec> nullspace(const QMatrix& a) {
    if (a.empty()) return {};
    const int cols = static_cast<int>(a[0].size());
    QMatrix m = a;
    std::vector<int> pivots;
    int rk = row_reduce(m, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rational(0));
        v[c] = 1;
        for (int r = 0; r < rk; ++r) v[pivots[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational det(QMatrix m) {
    const int n = static_cast<int>(m.size());
    Rational result = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if (m[r][c] != 0) { pivot = r; break; }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != c) { std::swap(m[pivot], m[c]); result = -result; }
        result *= m[c][c];
        Rational inv = m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / inv;
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return result;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
    const int n = static_cast<int>(a.size());
    QMatrix aug(n, QVec(2 * n, Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug[r][c] = a[r][c];
        aug[r][n + r] = 1;
    }
    if (row_reduce(aug) != n) return std::nullopt;
    QMatrix inv(n, QVec(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
    return inv;
}

inline QVec mat_vec(const QMatrix& a, const QVec& x) {
    QVec y(a.size(), Rational(0));
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < x.size(); ++c) y[r] += a[r][c] * x[c];
    return y;
}

inline Rational dot(const QVec& a, const QVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace multbound::linalg
