#include "surfcore/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace surfcore::linalg {

std::vector<Integer> leading_principal_minors(const IntMatrix& a) {
    const std::size_t n = a.size();
    IntMatrix m = a;
    std::vector<Integer> minors;
    minors.reserve(n);
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // After k Bareiss steps without pivoting, m(k, k) is the (k+1)-th
        // leading principal minor.
        minors.push_back(m(k, k));
        if (m(k, k) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return minors;
}

namespace {

// Bareiss elimination with pivoting on [A | B]; returns the sign of the row
// permutation, or 0 when A is singular.
int eliminate(std::vector<std::vector<Integer>>& rows, std::size_t n) {
    int sign = 1;
    Integer prev = 1;
    const std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && rows[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(rows[pivot], rows[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) / prev;
            }
            rows[i][k] = 0;
        }
        prev = rows[k][k];
    }
    return sign;
}

std::vector<std::vector<Integer>> to_rows(const IntMatrix& a, std::size_t extra) {
    const std::size_t n = a.size();
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n + extra));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    return rows;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    auto rows = to_rows(a, 0);
    const int sign = eliminate(rows, n);
    if (sign == 0) return 0;
    return sign * rows[n - 1][n - 1];
}

std::vector<Rational> solve(const IntMatrix& a, const std::vector<Integer>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    auto rows = to_rows(a, 1);
    for (std::size_t i = 0; i < n; ++i) rows[i][n] = b[i];
    if (n > 0 && eliminate(rows, n) == 0) throw std::domain_error("solve: singular matrix");

    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc = Rational(rows[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(rows[ii][j]) * x[j];
        x[ii] = acc / Rational(rows[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

}  // namespace surfcore::linalg
