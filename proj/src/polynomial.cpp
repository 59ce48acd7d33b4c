#include "surfpts/polynomial.hpp"

#include "surfpts/error.hpp"
#include "surfpts/numeric.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace surfpts {

IntPolynomial::IntPolynomial(const Integer& constant) : c_{constant} { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<Integer> ascending) : c_(ascending) { trim(); }

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::from_descending(std::span<const Integer> descending) {
  return IntPolynomial(std::vector<Integer>(descending.rbegin(), descending.rend()));
}

IntPolynomial IntPolynomial::monomial(int k, const Integer& coefficient) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1, Integer(0));
  c.back() = coefficient;
  return IntPolynomial(std::move(c));
}

std::vector<Integer> IntPolynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

Integer IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (c_.empty()) fail(Errc::invalid_argument, "leading coefficient of the zero polynomial");
  return c_.back();
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Integer(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Integer(1)) os << mag << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f) { return os << f.str(); }

IntPolynomial pow(const IntPolynomial& f, unsigned k) {
  IntPolynomial r = 1;
  for (unsigned i = 0; i < k; ++i) r *= f;
  return r;
}

Integer poly_eval(const IntPolynomial& f, const Integer& x) { return f(x); }

IntPolynomial substitute_one_minus_t(const IntPolynomial& f) {
  const IntPolynomial one_minus_t{1, -1};
  IntPolynomial g;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) g = g * one_minus_t + IntPolynomial(*it);
  return g;
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coefficients()) g = gcd(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (f.leading().sign() < 0) g = -g;
  std::vector<Integer> c = f.coefficients();
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

namespace {

IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const Integer lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const IntPolynomial shift = IntPolynomial::monomial(a.degree() - b.degree(), a.leading());
    a = IntPolynomial(lb) * a - shift * b;
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_squarefree(const IntPolynomial& f) {
  if (f.is_zero()) fail(Errc::invalid_argument, "is_squarefree: zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

IntPolynomial divide_exact(const IntPolynomial& f, const IntPolynomial& monic_divisor) {
  if (monic_divisor.is_zero() || monic_divisor.leading() != Integer(1)) {
    fail(Errc::invalid_argument, "divide_exact: divisor must be monic");
  }
  IntPolynomial rem = f;
  std::vector<Integer> quotient(
      static_cast<std::size_t>(std::max(0, f.degree() - monic_divisor.degree() + 1)), Integer(0));
  while (!rem.is_zero() && rem.degree() >= monic_divisor.degree()) {
    const int shift = rem.degree() - monic_divisor.degree();
    quotient[static_cast<std::size_t>(shift)] = rem.leading();
    rem -= IntPolynomial::monomial(shift, rem.leading()) * monic_divisor;
  }
  if (!rem.is_zero()) fail(Errc::invalid_argument, "divide_exact: nonzero remainder");
  return IntPolynomial(std::move(quotient));
}

std::vector<Integer> parse_coefficients(std::string_view text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const auto value = Integer::parse(token);
    if (!value) fail(Errc::parse_error, "bad coefficient '" + std::string(token) + "'");
    out.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_coefficients(std::span<const Integer> coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ',';
    out += coefficients[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------

IntPolynomial WeilPolynomial::poly() const { return IntPolynomial{q * q, a1 * q, a2, a1, 1}; }

Integer WeilPolynomial::value_at_one() const { return 1 + a1 + a2 + a1 * q + q * q; }

WeilPolynomial validate_weil(const Integer& q, std::span<const Integer> descending) {
  const auto pp = prime_power_decompose(q);
  if (!pp) fail(Errc::not_prime_power, "q = " + q.str() + " is not a prime power");
  if (descending.size() != 5 || descending[0] != Integer(1)) {
    fail(Errc::form_violation, "expected 5 coefficients with leading coefficient 1");
  }
  const Integer& a1 = descending[1];
  const Integer& a2 = descending[2];
  if (descending[3] != a1 * q) {
    fail(Errc::form_violation, "coefficient of t is " + descending[3].str() + ", expected a1*q = " + (a1 * q).str());
  }
  if (descending[4] != q * q) {
    fail(Errc::form_violation, "constant term is " + descending[4].str() + ", expected q^2 = " + (q * q).str());
  }
  const Integer shifted = a2 + 2 * q;
  const bool real_roots = a1 * a1 - 4 * (a2 - 2 * q) >= Integer(0);
  const bool bounded = shifted >= Integer(0) && 4 * a1 * a1 * q <= shifted * shifted && a1 * a1 <= 16 * q;
  if (!real_roots || !bounded) {
    fail(Errc::root_bound_violation, "real Weil polynomial has a root outside [-2 sqrt q, 2 sqrt q]");
  }
  return WeilPolynomial{q, pp->p, pp->n, a1, a2};
}

int case_number(const IsogenyShape& shape) noexcept { return static_cast<int>(shape.index()) + 1; }

Integer trace_of(const IntPolynomial& quadratic) { return -quadratic.coeff(1); }

IsogenyShape detect_shape(const WeilPolynomial& w) {
  const IntPolynomial f = w.poly();
  const auto s = integer_sqrt_exact(w.q);

  if (s) {
    for (int sigma : {1, -1}) {
      const IntPolynomial root_factor{Integer(sigma) * *s, 1};
      if (f == pow(root_factor, 4)) return Case4{sigma, *s};
    }
  }

  // f = (t^2 + u t + v)^2 = t^4 + 2u t^3 + (u^2 + 2v) t^2 + 2uv t + v^2
  if ((w.a1 % 2).is_zero()) {
    const Integer u = w.a1 / 2;
    const Integer twice_v = w.a2 - u * u;
    if ((twice_v % 2).is_zero()) {
      const Integer v = twice_v / 2;
      if (2 * u * v == w.a1 * w.q && v * v == w.q * w.q) {
        IntPolynomial P{v, u, 1};
        if (is_squarefree(P)) return Case2{std::move(P)};
      }
    }
  }

  if (s) {
    const IntPolynomial df = f.derivative();
    for (int sigma : {1, -1}) {
      const Integer root = -Integer(sigma) * *s;
      if (!f(root).is_zero() || !df(root).is_zero()) continue;
      const IntPolynomial factor = pow(IntPolynomial{-root, 1}, 2);
      IntPolynomial P = divide_exact(f, factor);
      if (is_squarefree(P) && !P(root).is_zero()) return Case3{std::move(P), sigma, *s};
    }
  }

  if (is_squarefree(f)) return Case1{f};
  fail(Errc::internal_invariant, "no isogeny shape matches " + f.str());
}

}  // namespace surfpts
