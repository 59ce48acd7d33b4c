#pragma once

#include "surfpts/abgroup.hpp"
#include "surfpts/matrix.hpp"
#include "surfpts/polynomial.hpp"

namespace surfpts {

/// A pair (X, Y) of polynomial matrices with Y X = f1 I and det X = char(A).
struct MatrixFactorization {
  PolyMatrix X;
  PolyMatrix Y;
};

PolyMatrix to_poly_matrix(const IntMatrix& a);
IntMatrix evaluate_at(const PolyMatrix& m, const Integer& t);
/// Laplace expansion along the first row.
IntPolynomial poly_determinant(const PolyMatrix& m);

/// X = t I - A, Y = sum_j b_j sum_{i<j} t^i A^{j-1-i} for f1 = sum_j b_j t^j.
/// Throws Errc::invalid_argument unless f1(A) = 0.
MatrixFactorization mf_build(const IntMatrix& a, const IntPolynomial& f1);

/// f1 ≡ t^{deg f1} (mod ell).
bool mf1_hypothesis(const IntPolynomial& f1, const Integer& ell);

/// Cokernel exponents of Y(0). Requires f1(A) = 0 and f1(0) != 0.
HodgeVector mf_dual_hp(const IntMatrix& a, const IntPolynomial& f1, const Integer& ell);

struct NormalizedFactor {
  PolyMatrix X;  // U X V, with X(0) diagonal
  IntMatrix U;
  IntMatrix V;
};

/// Diagonalizes X(0) by unimodular integer transforms (the SNF of X(0)).
/// Throws Errc::invalid_argument if X(0) is singular.
NormalizedFactor mf_normalize(const PolyMatrix& x, const Integer& ell);

}  // namespace surfpts
