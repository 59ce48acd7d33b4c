#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "surfpts/matrix.hpp"
#include "surfpts/polynomial.hpp"

#include <cmath>
#include <random>

using namespace surfpts;
using surfpts::testing::error_code_of;
using surfpts::testing::weil;

namespace {

IntPolynomial desc(std::initializer_list<std::int64_t> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPolynomial::from_descending(v);
}

/// Resultant of f and f' through the Sylvester matrix; zero iff f has a
/// repeated root.
Integer discriminant_core(const IntPolynomial& f) {
  const IntPolynomial g = f.derivative();
  const int m = f.degree(), n = g.degree();
  if (n < 0) return 0;
  IntMatrix s = IntMatrix::Zero(m + n, m + n);
  const auto fd = f.descending(), gd = g.descending();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = fd[static_cast<std::size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = gd[static_cast<std::size_t>(k)];
  return determinant(s);
}

}  // namespace

TEST_CASE("poly_eval") {
  CHECK(poly_eval(desc({1, 0, 3, 0, 4}), 1) == Integer(8));
  CHECK(poly_eval(IntPolynomial::monomial(4), 0) == Integer(0));
  CHECK(poly_eval(pow(desc({1, 2}), 4), 1) == Integer(81));
}

TEST_CASE("substitute_one_minus_t") {
  CHECK(substitute_one_minus_t(IntPolynomial::monomial(2)) == desc({1, -2, 1}));
  CHECK(substitute_one_minus_t(desc({1, 0, 3, 0, 4})) == desc({1, -4, 9, -10, 8}));
  CHECK(substitute_one_minus_t(desc({1, 1, 2})) == desc({1, -3, 4}));
}

TEST_CASE("substitute_one_minus_t is an involution") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20), deg(0, 7);
  for (int i = 0; i < 300; ++i) {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    const IntPolynomial f(c);
    const IntPolynomial g = substitute_one_minus_t(f);
    CHECK(substitute_one_minus_t(g) == f);
    CHECK(g(0) == f(1));
    CHECK(g.degree() == f.degree());
  }
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(desc({1, 1, 2})));
  CHECK_FALSE(is_squarefree(pow(desc({1, 2}), 2)));
  CHECK(is_squarefree(desc({1, 0, 3, 0, 4})));
  CHECK(error_code_of([] { is_squarefree(IntPolynomial()); }) == Errc::invalid_argument);
}

TEST_CASE("is_squarefree agrees with the discriminant") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-4, 4), deg(1, 5);
  int repeated = 0;
  for (int i = 0; i < 2000; ++i) {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    c.back() = 1;
    const IntPolynomial f(c);
    const bool sf = is_squarefree(f);
    if (!sf) ++repeated;
    CHECK(sf == !discriminant_core(f).is_zero());
  }
  CHECK(repeated > 0);
}

TEST_CASE("validate_weil") {
  const auto f = weil(2, "1,0,3,0,4");
  CHECK(f.a1 == Integer(0));
  CHECK(f.a2 == Integer(3));
  CHECK(f.p == Integer(2));
  CHECK(f.n == 1);
  CHECK(error_code_of([] { weil(2, "1,1,1,5,4"); }) == Errc::form_violation);
  CHECK(error_code_of([] { weil(2, "1,6,14,12,4"); }) == Errc::root_bound_violation);
  CHECK(error_code_of([] { weil(6, "1,0,0,0,36"); }) == Errc::not_prime_power);
  CHECK(error_code_of([] { weil(2, "1,0,3,0"); }) == Errc::form_violation);
  CHECK(error_code_of([] { weil(2, "1,0,3,0,5"); }) == Errc::form_violation);
  CHECK(error_code_of([] { weil(2, "1,0,x,0,4"); }) == Errc::parse_error);
}

TEST_CASE("root bound agrees with a numeric root check") {
  // Numeric oracle: h(x) = x^2 + a1 x + a2 - 2q must have real roots with
  // |x| <= 2 sqrt q. Borderline cases within 1e-9 are skipped.
  int accepted = 0, rejected = 0;
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (std::int64_t a1 = -4 * q; a1 <= 4 * q; ++a1) {
      for (std::int64_t a2 = -6 * q; a2 <= 6 * q; ++a2) {
        const long double b = static_cast<long double>(a2 - 2 * q);
        const long double disc = static_cast<long double>(a1 * a1) - 4 * b;
        const long double bound = 2 * std::sqrt(static_cast<long double>(q));
        bool inside = disc >= 0;
        bool borderline = std::fabs(disc) < 1e-9L;
        if (disc > 0) {
          const long double r = (std::fabs(static_cast<long double>(a1)) + std::sqrt(disc)) / 2;
          inside = r <= bound;
          borderline = borderline || std::fabs(r - bound) < 1e-9L;
        }
        if (borderline) continue;
        const std::vector<Integer> c{1, a1, a2, a1 * q, q * q};
        bool ok = true;
        try {
          const auto f = validate_weil(Integer(q), c);
          CHECK(f.value_at_one() >= Integer(1));
        } catch (const Error& e) {
          CHECK(e.code() == Errc::root_bound_violation);
          ok = false;
        }
        CHECK_MESSAGE(ok == inside, "q=" << q << " a1=" << a1 << " a2=" << a2);
        (ok ? accepted : rejected) += 1;
      }
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("detect_shape examples") {
  CHECK(std::holds_alternative<Case1>(detect_shape(weil(2, "1,0,3,0,4"))));

  const auto s2 = detect_shape(weil(2, "1,2,5,4,4"));
  REQUIRE(std::holds_alternative<Case2>(s2));
  CHECK(std::get<Case2>(s2).P == desc({1, 1, 2}));

  const auto s3 = detect_shape(weil(4, "1,3,4,12,16"));
  REQUIRE(std::holds_alternative<Case3>(s3));
  CHECK(std::get<Case3>(s3).P == desc({1, -1, 4}));
  CHECK(std::get<Case3>(s3).sigma == 1);
  CHECK(std::get<Case3>(s3).s == Integer(2));

  const auto s2e = detect_shape(weil(4, "1,0,-8,0,16"));
  REQUIRE(std::holds_alternative<Case2>(s2e));
  CHECK(std::get<Case2>(s2e).P == desc({1, 0, -4}));

  const auto s4 = detect_shape(weil(9, "1,-12,54,-108,81"));
  REQUIRE(std::holds_alternative<Case4>(s4));
  CHECK(std::get<Case4>(s4).sigma == -1);
  CHECK(std::get<Case4>(s4).s == Integer(3));
  CHECK(case_number(s4) == 4);
}

TEST_CASE("detect_shape is exhaustive and reconstructs f") {
  int counts[5] = {0, 0, 0, 0, 0};
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (const auto& f : testing::weil_sweep(q)) {
      IsogenyShape shape;
      REQUIRE_NOTHROW(shape = detect_shape(f));
      ++counts[case_number(shape)];
      const IntPolynomial poly = f.poly();
      if (const auto* s = std::get_if<Case1>(&shape)) {
        CHECK(s->f == poly);
        CHECK(!discriminant_core(poly).is_zero());
      } else if (const auto* s = std::get_if<Case2>(&shape)) {
        CHECK(s->P * s->P == poly);
        CHECK(is_squarefree(s->P));
      } else if (const auto* s = std::get_if<Case3>(&shape)) {
        const IntPolynomial lin{Integer(s->sigma) * s->s, 1};
        CHECK(s->P * lin * lin == poly);
        CHECK(s->s * s->s == Integer(q));
        CHECK(!s->P(-Integer(s->sigma) * s->s).is_zero());
      } else {
        const auto& s4 = std::get<Case4>(shape);
        CHECK(pow(IntPolynomial{Integer(s4.sigma) * s4.s, 1}, 4) == poly);
      }
    }
  }
  for (int c = 1; c <= 4; ++c) CHECK(counts[c] > 0);
}

TEST_CASE("polynomial text") {
  CHECK(desc({1, 3, 4, 12, 16}).str() == "t^4 + 3*t^3 + 4*t^2 + 12*t + 16");
  CHECK(desc({1, -1, 4}).str() == "t^2 - t + 4");
  CHECK(IntPolynomial().str() == "0");
  const auto c = parse_coefficients("1, -12,54,-108,81");
  CHECK(format_coefficients(c) == "1,-12,54,-108,81");
  CHECK(error_code_of([] { parse_coefficients("1,,2"); }) == Errc::parse_error);
}

TEST_CASE("gcd and exact division") {
  const IntPolynomial a = desc({1, 1, 2}), b = desc({1, 2});
  CHECK(gcd(a * b, b * b) == b);
  CHECK(divide_exact(a * b, b) == a);
  CHECK(error_code_of([&] { divide_exact(a, b); }) == Errc::invalid_argument);
  CHECK(trace_of(desc({1, -1, 4})) == Integer(1));
}
