#pragma once

#include "qgt/field.hpp"

#include <utility>
#include <vector>

namespace qgt {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/*
 * Bareiss fraction-free elimination.  Each step divides exactly by the
 * previous pivot, so intermediate entries stay minors of the input and
 * no cancellation work piles up in the rationals.  Row swaps flip sign.
 */
inline mpq_class det_bareiss(Matrix<mpq_class> m) {
    const std::size_t n = m.size();
    if (n == 0) return mpq_class(1);
    int sign = 1;
    mpq_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m[p][k]) == 0) ++p;
            if (p == n) return mpq_class(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    mpq_class d = m[n - 1][n - 1];
    return sign < 0 ? mpq_class(-d) : d;
}

// Gaussian elimination with partial pivoting on magnitude.
template <class T>
T det_pivot(Matrix<T> m) {
    const std::size_t n = m.size();
    T det = from_long<T>(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = magnitude(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            double mag = magnitude(m[i][k]);
            if (mag > best) {
                best = mag;
                p = i;
            }
        }
        if (is_zero(m[p][k])) return from_long<T>(0);
        if (p != k) {
            std::swap(m[k], m[p]);
            det = -det;
        }
        det = det * m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            T f = m[i][k] / m[k][k];
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return det;
}

template <class T>
T det(Matrix<T> m) {
    if constexpr (is_exact_v<T>) {
        return det_bareiss(std::move(m));
    } else {
        return det_pivot(std::move(m));
    }
}

template <class T>
Matrix<T> make_matrix(std::size_t n, std::size_t m) {
    return Matrix<T>(n, std::vector<T>(m, from_long<T>(0)));
}

}  // namespace qgt
