#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"

namespace vf {

// Dense exact linear algebra over a field K (fraction-based Gauss; fine at
// the window sizes this library works with).
template <class K>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<K> a; // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, K(0)) {}

    K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns pivot column indices.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        K inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = inv * m.at(r, j);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

// One solution of A x = b (free variables set to 0), or nullopt if inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b) {
    Matrix<K> m(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols) = b[i];
    }
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt; // row [0..0 | 1]
    std::vector<K> x(A.cols, K(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m.at(i, A.cols);
    return x;
}

// Basis of the right kernel of A.
template <class K>
std::vector<std::vector<K>> kernel(Matrix<K> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<K> v(m.cols, K(0));
        v[c] = K(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] < c) v[pivots[i]] = -m.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace vf
