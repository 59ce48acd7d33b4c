#include "surfpts/mf.hpp"

#include "surfpts/error.hpp"
#include "surfpts/lattice.hpp"
#include "surfpts/numeric.hpp"

namespace surfpts {

PolyMatrix to_poly_matrix(const IntMatrix& a) { return a.unaryExpr([](const Integer& x) { return IntPolynomial(x); }); }

IntMatrix evaluate_at(const PolyMatrix& m, const Integer& t) {
  return m.unaryExpr([&](const IntPolynomial& p) { return p(t); });
}

IntPolynomial poly_determinant(const PolyMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) fail(Errc::invalid_argument, "poly_determinant: matrix must be square");
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  IntPolynomial det;
  PolyMatrix minor(n - 1, n - 1);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const IntPolynomial term = m(0, j) * poly_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

MatrixFactorization mf_build(const IntMatrix& a, const IntPolynomial& f1) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) fail(Errc::invalid_argument, "mf_build: matrix must be square");
  if (!all_zero(evaluate(f1, a))) fail(Errc::invalid_argument, "mf_build: f1(A) != 0");

  const IntPolynomial t = IntPolynomial::monomial(1);
  MatrixFactorization mf;
  mf.X = to_poly_matrix(identity(n)) * t - to_poly_matrix(a);

  // Y = sum_j b_j (t^{j-1} + t^{j-2} A + ... + A^{j-1})
  std::vector<IntMatrix> powers{identity(n)};
  for (int j = 1; j < f1.degree(); ++j) powers.push_back(a * powers.back());
  mf.Y = PolyMatrix::Constant(n, n, IntPolynomial());
  for (int j = 1; j <= f1.degree(); ++j) {
    const Integer bj = f1.coeff(j);
    if (bj.is_zero()) continue;
    for (int i = 0; i < j; ++i) {
      mf.Y += to_poly_matrix(powers[static_cast<std::size_t>(j - 1 - i)] * bj) * IntPolynomial::monomial(i);
    }
  }

  const PolyMatrix yx = mf.Y * mf.X;
  ensure(yx == to_poly_matrix(identity(n)) * f1, "mf_build: Y X != f1 I");
  return mf;
}

bool mf1_hypothesis(const IntPolynomial& f1, const Integer& ell) {
  for (int i = 0; i < f1.degree(); ++i) {
    if (!(f1.coeff(i) % ell).is_zero()) return false;
  }
  return f1.degree() >= 0 && !(f1.leading() % ell).is_zero();
}

HodgeVector mf_dual_hp(const IntMatrix& a, const IntPolynomial& f1, const Integer& ell) {
  if (f1.coeff(0).is_zero()) fail(Errc::invalid_argument, "mf_dual_hp: f1(0) = 0");
  const auto mf = mf_build(a, f1);
  return cokernel_exponents(evaluate_at(mf.Y, 0), ell);
}

NormalizedFactor mf_normalize(const PolyMatrix& x, const Integer& ell) {
  (void)ell;
  const IntMatrix x0 = evaluate_at(x, 0);
  if (determinant(x0).is_zero()) fail(Errc::invalid_argument, "mf_normalize: X(0) is singular");
  NormalizedFactor out;
  if (is_diagonal(x0)) {
    out.U = identity(x.rows());
    out.V = identity(x.cols());
    out.X = x;
    return out;
  }
  const SnfResult s = snf(x0);
  out.U = s.U;
  out.V = s.V;
  out.X = to_poly_matrix(s.U) * x * to_poly_matrix(s.V);
  return out;
}

}  // namespace surfpts
