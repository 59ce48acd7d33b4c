#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "surfpts/numeric.hpp"

#include <random>

using namespace surfpts;
using surfpts::testing::error_code_of;

TEST_CASE("ord") {
  CHECK(ord(2, 8) == Valuation(3));
  CHECK(ord(3, 36) == Valuation(2));
  CHECK(ord(5, 0) == Valuation::infinity());
  CHECK(ord(7, -49) == Valuation(2));
  CHECK(error_code_of([] { ord(4, 8); }) == Errc::invalid_argument);
}

TEST_CASE("valuation order and addition") {
  const auto inf = Valuation::infinity();
  CHECK(Valuation(1000000) < inf);
  CHECK(inf + Valuation(3) == inf);
  CHECK(Valuation(2) + Valuation(3) == Valuation(5));
  CHECK(5 <= inf);
  CHECK(inf.str() == "inf");
  CHECK_THROWS(inf.value());
}

TEST_CASE("ord divides exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Integer n = dist(rng);
    if (n.is_zero()) continue;
    for (int ell : {2, 3, 5, 7}) {
      const auto e = static_cast<unsigned>(ord(ell, n).value());
      CHECK((n % pow(Integer(ell), e)).is_zero());
      CHECK(!(n % pow(Integer(ell), e + 1)).is_zero());
    }
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(36) == Factorization{{2, 2}, {3, 2}});
  CHECK(factorize(1).empty());
  CHECK(factorize(16) == Factorization{{2, 4}});
  CHECK(error_code_of([] { factorize(0); }) == Errc::invalid_argument);
  CHECK(error_code_of([] { factorize(-6); }) == Errc::invalid_argument);

  const Integer big = Integer(1000003) * Integer(1000033) * Integer(999983);
  CHECK(factorize(big) == Factorization{{999983, 1}, {1000003, 1}, {1000033, 1}});
  const Integer p61 = pow(Integer(2), 61) - 1;
  CHECK(factorize(p61 * p61 * 3) == Factorization{{3, 1}, {p61, 2}});
}

TEST_CASE("factorize inverts expand") {
  for (std::int64_t n = 1; n <= 3000; ++n) {
    const auto fac = factorize(n);
    CHECK(expand(fac) == Integer(n));
    for (std::size_t i = 0; i < fac.size(); ++i) {
      CHECK(is_prime(fac[i].prime));
      if (i) CHECK(fac[i - 1].prime < fac[i].prime);
    }
  }
}

TEST_CASE("is_prime agrees with a sieve") {
  constexpr int kLimit = 100000;
  std::vector<bool> composite(kLimit + 1, false);
  composite[0] = composite[1] = true;
  for (int i = 2; i * i <= kLimit; ++i)
    if (!composite[i])
      for (int j = i * i; j <= kLimit; j += i) composite[j] = true;
  for (int n = 0; n <= kLimit; ++n) CHECK_MESSAGE(is_prime(n) == !composite[n], n);
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(Integer(3215031751LL)));
  CHECK_FALSE(is_prime(*Integer::parse("3317044064679887385961981")));
  CHECK(is_prime(pow(Integer(2), 127) - 1));
  CHECK_FALSE(is_prime(pow(Integer(2), 128) + 1));
}

TEST_CASE("prime_power_decompose") {
  CHECK(prime_power_decompose(4) == PrimePowerDecomposition{2, 2});
  CHECK(prime_power_decompose(9) == PrimePowerDecomposition{3, 2});
  CHECK(prime_power_decompose(6) == std::nullopt);
  CHECK(prime_power_decompose(1) == std::nullopt);
  CHECK(prime_power_decompose(2) == PrimePowerDecomposition{2, 1});
}

TEST_CASE("integer_sqrt_exact") {
  CHECK(integer_sqrt_exact(4) == Integer(2));
  CHECK(integer_sqrt_exact(2) == std::nullopt);
  CHECK(integer_sqrt_exact(0) == Integer(0));
  CHECK(error_code_of([] { integer_sqrt_exact(-1); }) == Errc::invalid_argument);
}

TEST_CASE("prime power is a square iff the exponent is even") {
  for (std::int64_t q = 2; q <= 5000; ++q) {
    const auto pp = prime_power_decompose(q);
    if (!pp) continue;
    CHECK(integer_sqrt_exact(q).has_value() == (pp->n % 2 == 0));
  }
}

TEST_CASE("integer parsing and arithmetic") {
  CHECK(Integer::parse("-12") == Integer(-12));
  CHECK(Integer::parse("+7") == Integer(7));
  CHECK_FALSE(Integer::parse("1.5").has_value());
  CHECK_FALSE(Integer::parse("").has_value());
  CHECK_FALSE(Integer::parse("12a").has_value());
  CHECK(floor_div(-7, 2) == Integer(-4));
  CHECK(mod_floor(-7, 2) == Integer(1));
  CHECK(Integer(-7) / Integer(2) == Integer(-3));
  const auto e = extended_gcd(240, 46);
  CHECK(e.g == Integer(2));
  CHECK(Integer(240) * e.x + Integer(46) * e.y == e.g);
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
}
