#pragma once

#include <vector>

#include "errors.hpp"

namespace l2zeta {

template <class T>
struct Matrix {
    int n = 0;
    std::vector<T> data;

    Matrix() = default;
    explicit Matrix(int size) : n(size), data(size * size, T(0)) {}

    T& at(int i, int j) { return data[i * n + j]; }
    const T& at(int i, int j) const { return data[i * n + j]; }

    static Matrix identity(int size) {
        Matrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = T(1);
        return m;
    }
};

namespace detail {

template <class T>
T det_cofactor(const Matrix<T>& m, std::vector<int>& rows, std::vector<int>& cols) {
    size_t k = rows.size();
    if (k == 0) return T(1);
    if (k == 1) return m.at(rows[0], cols[0]);
    T acc(0);
    int col = cols[0];
    std::vector<int> subcols(cols.begin() + 1, cols.end());
    for (size_t i = 0; i < k; ++i) {
        const T& pivot = m.at(rows[i], col);
        if (is_zero(pivot)) continue;
        std::vector<int> subrows;
        subrows.reserve(k - 1);
        for (size_t j = 0; j < k; ++j)
            if (j != i) subrows.push_back(rows[j]);
        T minor = det_cofactor(m, subrows, subcols);
        if (i % 2 == 0)
            acc += pivot * minor;
        else
            acc -= pivot * minor;
    }
    return acc;
}

}  // namespace detail

template <class T>
T det_cofactor(const Matrix<T>& m) {
    std::vector<int> rows(m.n), cols(m.n);
    for (int i = 0; i < m.n; ++i) rows[i] = cols[i] = i;
    return detail::det_cofactor(m, rows, cols);
}

/// Fraction-free elimination; every division is exact in the coefficient
/// ring. Requires exact_div(T, T).
template <class T>
T det_bareiss(Matrix<T> m) {
    int n = m.n;
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(m.at(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(m.at(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0) return T(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

/// Exact determinant. Cofactor expansion for small sizes, Bareiss above;
/// both return the unit for the empty matrix.
template <class T>
T det_exact(const Matrix<T>& m) {
    if (m.n <= 4) return det_cofactor(m);
    return det_bareiss(m);
}

}  // namespace l2zeta
