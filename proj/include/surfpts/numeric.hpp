#pragma once

#include "surfpts/integer.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfpts {

using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational to_rational(const Integer& n) { return Rational(n.rep()); }
Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& r);

/// An ℓ-adic valuation: a nonnegative integer or infinity (the valuation of 0).
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::int64_t v) : value_(v), finite_(true) {}
  static constexpr Valuation infinity() { return Valuation(0, false); }

  constexpr bool is_finite() const noexcept { return finite_; }
  /// Requires is_finite().
  std::int64_t value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend constexpr bool operator<=(std::int64_t a, const Valuation& b) { return Valuation(a) <= b; }

  std::string str() const;

 private:
  constexpr Valuation(std::int64_t v, bool finite) : value_(v), finite_(finite) {}
  std::int64_t value_ = 0;
  bool finite_ = true;
};

/// Deterministic primality: Miller-Rabin with the first thirteen prime bases
/// below 3.3e24, strong Baillie-PSW above.
bool is_prime(const Integer& n);

/// ord_ℓ(n). Throws Errc::invalid_argument unless ell is prime.
Valuation ord(const Integer& ell, const Integer& n);

/// Finite-valued ord for callers that know n != 0.
int ord_finite(const Integer& ell, const Integer& n);

struct PrimePower {
  Integer prime;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};
using Factorization = std::vector<PrimePower>;

/// Complete factorization with strictly increasing primes.
/// Trial division to 10^6, then Pollard-Brent with fixed seeds.
Factorization factorize(const Integer& n);
Integer expand(const Factorization& factors);

struct PrimePowerDecomposition {
  Integer p;
  int n = 0;
  friend bool operator==(const PrimePowerDecomposition&, const PrimePowerDecomposition&) = default;
};
std::optional<PrimePowerDecomposition> prime_power_decompose(const Integer& q);

std::optional<Integer> integer_sqrt_exact(const Integer& q);

}  // namespace surfpts
