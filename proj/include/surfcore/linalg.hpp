#pragma once

#include <cstddef>
#include <vector>

#include "surfcore/exact.hpp"

namespace surfcore::linalg {

/// Dense square matrix over the integers, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<Integer> data_;
};

/// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1, computed by
/// fraction-free (Bareiss) elimination without pivoting. Elimination stops at
/// the first vanishing minor; the returned vector is then shorter than n and
/// its last entry is 0.
std::vector<Integer> leading_principal_minors(const IntMatrix& a);

/// Exact determinant (Bareiss with row pivoting).
Integer determinant(const IntMatrix& a);

/// Exact solution of A x = b for nonsingular A. Throws std::domain_error when A
/// is singular.
std::vector<Rational> solve(const IntMatrix& a, const std::vector<Integer>& b);

}  // namespace surfcore::linalg
