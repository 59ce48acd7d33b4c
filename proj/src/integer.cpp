#include "surfpts/integer.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace surfpts {

std::optional<Integer> Integer::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return std::nullopt;
  Rep value = 0;
  for (; i < text.size(); ++i) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (!std::isdigit(ch)) return std::nullopt;
    value = value * 10 + (ch - '0');
  }
  return Integer(negative ? Rep(-value) : value);
}

bool Integer::fits_int64() const noexcept {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return v_.convert_to<std::int64_t>();
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(Integer::Rep(boost::multiprecision::gcd(a.rep(), b.rep())));
}

Integer pow(const Integer& base, unsigned exponent) {
  return Integer(Integer::Rep(boost::multiprecision::pow(base.rep(), exponent)));
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer isqrt(const Integer& a) {
  if (a.sign() < 0) throw std::domain_error("isqrt of negative integer");
  return Integer(Integer::Rep(boost::multiprecision::sqrt(a.rep())));
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    const Integer q = floor_div(old_r, r);
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace surfpts
