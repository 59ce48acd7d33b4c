#pragma once

#include "surfpts/integer.hpp"

#include <Eigen/Core>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surfpts {

/// Dense univariate polynomial over the integers, coefficients in ascending
/// degree. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(const Integer& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  IntPolynomial(T constant) : IntPolynomial(Integer(constant)) {}  // NOLINT
  IntPolynomial(std::initializer_list<Integer> ascending);
  explicit IntPolynomial(std::vector<Integer> ascending);

  static IntPolynomial from_descending(std::span<const Integer> descending);
  /// t^k
  static IntPolynomial monomial(int k, const Integer& coefficient = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }
  std::vector<Integer> descending() const;
  /// Coefficient of t^i; zero outside the stored range.
  Integer coeff(int i) const;
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  IntPolynomial derivative() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form such as "t^4 + 3*t^2 + 4".
  std::string str() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f);

IntPolynomial pow(const IntPolynomial& f, unsigned k);

Integer poly_eval(const IntPolynomial& f, const Integer& x);

/// g(t) = f(1 - t).
IntPolynomial substitute_one_minus_t(const IntPolynomial& f);

Integer content(const IntPolynomial& f);
IntPolynomial primitive_part(const IntPolynomial& f);
/// Primitive gcd over Z[t]; equals the rational gcd up to a unit and content.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// True iff gcd(f, f') over Q is constant. Throws on the zero polynomial.
bool is_squarefree(const IntPolynomial& f);

/// Exact quotient by a monic divisor; throws if the remainder is nonzero.
IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& monic_divisor);

/// Comma-separated coefficients in descending degree, e.g. "1,3,4,12,16".
std::vector<Integer> parse_coefficients(std::string_view text);
std::string format_coefficients(std::span<const Integer> coefficients);

// ---------------------------------------------------------------------------
// Weil polynomials of abelian surfaces

/// t^4 + a1 t^3 + a2 t^2 + a1 q t + q^2 with q = p^n.
struct WeilPolynomial {
  Integer q;
  Integer p;
  int n = 0;
  Integer a1;
  Integer a2;

  IntPolynomial poly() const;
  Integer value_at_one() const;  // f(1) = |A(k)|
};

/// Accepts [1, a1, a2, a3, a4] (descending) iff q is a prime power, the
/// functional equation holds and the real Weil polynomial
/// t^2 + a1 t + (a2 - 2q) has both roots in [-2 sqrt q, 2 sqrt q].
/// Throws Error with not_prime_power, form_violation or root_bound_violation.
WeilPolynomial validate_weil(const Integer& q, std::span<const Integer> descending);

struct Case1 {
  IntPolynomial f;
};
/// f = P^2, P square-free quadratic.
struct Case2 {
  IntPolynomial P;
};
/// f = P (t + sigma s)^2, s = sqrt q, P square-free with P(-sigma s) != 0.
struct Case3 {
  IntPolynomial P;
  int sigma = 1;
  Integer s;
};
/// f = (t + sigma s)^4.
struct Case4 {
  int sigma = 1;
  Integer s;
};
using IsogenyShape = std::variant<Case1, Case2, Case3, Case4>;

int case_number(const IsogenyShape& shape) noexcept;

/// Tests Case4, Case2, Case3, Case1 in that order; the first match wins.
IsogenyShape detect_shape(const WeilPolynomial& f);

/// b in the convention P = t^2 - b t + c.
Integer trace_of(const IntPolynomial& quadratic);

}  // namespace surfpts

namespace Eigen {
template <>
struct NumTraits<surfpts::IntPolynomial> : GenericNumTraits<surfpts::IntPolynomial> {
  using Real = surfpts::IntPolynomial;
  using NonInteger = surfpts::IntPolynomial;
  using Literal = surfpts::IntPolynomial;
  using Nested = surfpts::IntPolynomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};
}  // namespace Eigen
