#include "surfpts/numeric.hpp"

#include "surfpts/error.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace surfpts {

namespace {

using Rep = Integer::Rep;
namespace mp = boost::multiprecision;

constexpr std::array<unsigned, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
// Miller-Rabin with kWitnessBases is deterministic below this bound.
const Rep kMillerRabinBound("3317044064679887385961981");

bool strong_probable_prime(const Rep& n, const Rep& base) {
  Rep d = n - 1;
  unsigned s = 0;
  while (!mp::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  Rep x = mp::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

int jacobi(Rep a, Rep n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (!mp::bit_test(a, 0)) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Rep half_mod(Rep x, const Rep& n) {
  if (mp::bit_test(x, 0)) x += n;
  return (x >> 1) % n;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_probable_prime(const Rep& n) {
  const Rep root = mp::sqrt(n);
  if (root * root == n) return false;
  Rep d = 5;
  while (true) {
    const int j = jacobi(d, n);
    if (j == -1) break;
    if (j == 0 && mp::abs(d) != n) return false;
    d = d > 0 ? Rep(-(d + 2)) : Rep(-d + 2);
  }
  const Rep p = 1;
  const Rep q = (1 - d) / 4;
  Rep k = n + 1;
  unsigned s = 0;
  while (!mp::bit_test(k, 0)) {
    k >>= 1;
    ++s;
  }
  auto norm = [&](Rep x) {
    x %= n;
    if (x < 0) x += n;
    return x;
  };
  // Binary ladder for U_k, V_k, Q^k.
  Rep u = 0, v = 2, qk = 1;
  const unsigned bits = static_cast<unsigned>(mp::msb(k)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    u = norm(u * v);
    v = norm(v * v - 2 * qk);
    qk = norm(qk * qk);
    if (mp::bit_test(k, i)) {
      const Rep u_next = half_mod(norm(p * u + v), n);
      const Rep v_next = half_mod(norm(d * u + p * v), n);
      u = u_next;
      v = v_next;
      qk = norm(qk * q);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    v = norm(v * v - 2 * qk);
    qk = norm(qk * qk);
    if (v == 0) return true;
  }
  return false;
}

Rep pollard_brent(const Rep& n) {
  if (!mp::bit_test(n, 0)) return 2;
  for (Rep c = 1;; ++c) {
    auto step = [&](const Rep& x) { return (x * x + c) % n; };
    Rep y = 2, x = 2, g = 1, ys = 2, prod = 1;
    std::size_t run = 1;
    constexpr std::size_t kBatch = 64;
    while (g == 1) {
      x = y;
      for (std::size_t i = 0; i < run; ++i) y = step(y);
      for (std::size_t done = 0; done < run && g == 1; done += kBatch) {
        ys = y;
        for (std::size_t i = 0; i < std::min(kBatch, run - done); ++i) {
          y = step(y);
          prod = (prod * mp::abs(x - y)) % n;
        }
        g = mp::gcd(prod, n);
      }
      run *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = mp::gcd(mp::abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Rep& n, std::map<Rep, int>& out) {
  if (n == 1) return;
  if (is_prime(Integer(n))) {
    ++out[n];
    return;
  }
  // rho is slow on p^2 with p large
  if (const Rep r = mp::sqrt(n); r * r == n) {
    factor_into(r, out);
    factor_into(r, out);
    return;
  }
  const Rep d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) fail(Errc::invalid_argument, "zero denominator");
  if (den.sign() < 0) return Rational(-num.rep(), -den.rep());
  return Rational(num.rep(), den.rep());
}

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::int64_t Valuation::value() const {
  if (!finite_) fail(Errc::invalid_argument, "value() of infinite valuation");
  return value_;
}

std::string Valuation::str() const { return finite_ ? std::to_string(value_) : "inf"; }

bool is_prime(const Integer& n) {
  const Rep& v = n.rep();
  if (v < 2) return false;
  for (unsigned p : kWitnessBases) {
    if (v == p) return true;
    if (v % p == 0) return false;
  }
  if (v < kMillerRabinBound) {
    return std::all_of(kWitnessBases.begin(), kWitnessBases.end(),
                       [&](unsigned b) { return strong_probable_prime(v, Rep(b)); });
  }
  return strong_probable_prime(v, Rep(2)) && strong_lucas_probable_prime(v);
}

Valuation ord(const Integer& ell, const Integer& n) {
  if (!is_prime(ell)) fail(Errc::invalid_argument, "ord: " + ell.str() + " is not prime");
  if (n.is_zero()) return Valuation::infinity();
  Rep m = mp::abs(n.rep());
  std::int64_t e = 0;
  while (m % ell.rep() == 0) {
    m /= ell.rep();
    ++e;
  }
  return Valuation(e);
}

int ord_finite(const Integer& ell, const Integer& n) {
  return static_cast<int>(ord(ell, n).value());
}

Factorization factorize(const Integer& n) {
  if (n.sign() <= 0) fail(Errc::invalid_argument, "factorize: input must be positive, got " + n.str());
  Rep m = n.rep();
  std::map<Rep, int> primes;
  for (unsigned p = 2; p <= 1'000'000u; p += (p == 2 ? 1 : 2)) {
    if (Rep(p) * p > m) break;
    while (m % p == 0) {
      m /= p;
      ++primes[Rep(p)];
    }
  }
  factor_into(m, primes);
  Factorization out;
  out.reserve(primes.size());
  for (const auto& [p, e] : primes) out.push_back({Integer(p), e});
  return out;
}

Integer expand(const Factorization& factors) {
  Integer product = 1;
  for (const auto& f : factors) product *= pow(f.prime, static_cast<unsigned>(f.exponent));
  return product;
}

std::optional<PrimePowerDecomposition> prime_power_decompose(const Integer& q) {
  if (q < Integer(2)) return std::nullopt;
  const auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return PrimePowerDecomposition{factors.front().prime, factors.front().exponent};
}

std::optional<Integer> integer_sqrt_exact(const Integer& q) {
  if (q.sign() < 0) fail(Errc::invalid_argument, "integer_sqrt_exact: negative input " + q.str());
  Integer s = isqrt(q);
  if (s * s == q) return s;
  return std::nullopt;
}

}  // namespace surfpts
