#pragma once

#include "surfpts/integer.hpp"
#include "surfpts/polynomial.hpp"

#include <Eigen/Core>

#include <vector>

namespace surfpts {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using PolyMatrix = Eigen::Matrix<IntPolynomial, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix identity(Eigen::Index n);
IntMatrix diagonal(const std::vector<Integer>& entries);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant.
template <typename Derived>
Integer determinant(const Eigen::MatrixBase<Derived>& m) {
  IntMatrix a = m;
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

IntMatrix adjugate(const IntMatrix& m);

/// det(t I - A), via Faddeev-LeVerrier with exact divisions.
template <typename Derived>
IntPolynomial charpoly(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::Index n = a.rows();
  const IntMatrix A = a;
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix M = IntMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    M = A * M;
    for (Eigen::Index i = 0; i < n; ++i) M(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Integer tr = (A * M).trace();
    c[static_cast<std::size_t>(n - k)] = -tr / Integer(k);
  }
  return IntPolynomial(std::move(c));
}

/// Evaluates a polynomial at a square matrix (Horner).
IntMatrix evaluate(const IntPolynomial& f, const IntMatrix& a);

struct SnfResult {
  std::vector<Integer> invariants;  // s_1 | s_2 | ... , nonnegative; zeros trail
  IntMatrix U;
  IntMatrix V;  // U * M * V = diag(invariants)
};

/// Smith normal form with unimodular transforms. Pivots on the entry of
/// least absolute value.
SnfResult snf(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice generated by the columns
/// of `generators` (which must span a full-rank lattice): upper triangular,
/// positive diagonal, entries right of the diagonal reduced into [0, h_ii).
IntMatrix hnf_columns(const IntMatrix& generators);

bool is_unimodular(const IntMatrix& m);

/// H^{-1} A H, which must be integral (asserted).
IntMatrix conjugate_by(const IntMatrix& a, const IntMatrix& h);

}  // namespace surfpts
