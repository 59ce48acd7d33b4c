#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace surfpts {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over boost::multiprecision::cpp_int. The wrapper exists
/// so that the type can serve as an Eigen scalar: the raw cpp_int trips
/// Eigen's scalar-promotion probes in Boost 1.74.
class Integer {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Integer() = default;
  template <std::integral T>
  Integer(T v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(Rep v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal literal; nullopt on malformed text.
  static std::optional<Integer> parse(std::string_view text);

  const Rep& rep() const noexcept { return v_; }

  int sign() const noexcept { return v_.sign(); }
  bool is_zero() const noexcept { return v_.is_zero(); }
  bool fits_int64() const noexcept;
  std::int64_t to_int64() const;  // throws std::overflow_error
  std::string str() const { return v_.str(); }

  Integer operator-() const { return Integer(Rep(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  /// Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
  Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  Rep v_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned exponent);
/// Floor division and the matching nonnegative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
/// Largest s with s*s <= a, for a >= 0.
Integer isqrt(const Integer& a);

struct ExtendedGcd {
  Integer g, x, y;  // g = x*a + y*b, g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace surfpts

namespace Eigen {
template <>
struct NumTraits<surfpts::Integer> : GenericNumTraits<surfpts::Integer> {
  using Real = surfpts::Integer;
  using NonInteger = surfpts::Integer;
  using Literal = surfpts::Integer;
  using Nested = surfpts::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};
}  // namespace Eigen
