#pragma once

// Division-free linear algebra over commutative rings. Works for any T with
// +, -, * (RingElement and Polynomial both qualify).

#include <cstddef>
#include <vector>

namespace wittcft {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

/// Characteristic polynomial det(x I - A) by Berkowitz's algorithm, returned
/// highest power first: result[k] is the coefficient of x^(n-k), result[0] == one.
template <typename T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a, const T& zero, const T& one) {
    const std::size_t n = a.size();
    std::vector<T> c{one};
    if (n == 0) return c;
    c.push_back(zero - a[0][0]);
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S with M the
        // leading r x r block, R the row segment and S the column segment.
        std::vector<T> toeplitz;
        toeplitz.reserve(r + 2);
        toeplitz.push_back(one);
        toeplitz.push_back(zero - a[r][r]);
        std::vector<T> v(r, zero);
        for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            T acc = zero;
            for (std::size_t j = 0; j < r; ++j) acc += a[r][j] * v[j];
            toeplitz.push_back(zero - acc);
            if (k + 1 == r) break;
            std::vector<T> next(r, zero);
            for (std::size_t i = 0; i < r; ++i) {
                T s = zero;
                for (std::size_t j = 0; j < r; ++j) s += a[i][j] * v[j];
                next[i] = std::move(s);
            }
            v = std::move(next);
        }
        std::vector<T> out(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= i && j < c.size(); ++j) out[i] += toeplitz[i - j] * c[j];
        }
        c = std::move(out);
    }
    return c;
}

/// Determinant via the constant term of the characteristic polynomial.
template <typename T>
T determinant(const Matrix<T>& a, const T& zero, const T& one) {
    if (a.empty()) return one;
    auto c = berkowitz_charpoly(a, zero, one);
    T d = c.back();
    return (a.size() % 2 == 0) ? d : zero - d;
}

template <typename T>
Matrix<T> matrix_product(const Matrix<T>& x, const Matrix<T>& y, const T& zero) {
    const std::size_t n = x.size(), m = y.empty() ? 0 : y[0].size(), inner = y.size();
    Matrix<T> out(n, std::vector<T>(m, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
}

} // namespace wittcft
