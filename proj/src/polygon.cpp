#include "surfpts/polygon.hpp"

#include "surfpts/error.hpp"

#include <algorithm>
#include <map>

namespace surfpts {

namespace {

// Sign of the turn o -> a -> b; positive for a left (counter-clockwise) turn.
Integer cross(const Vertex& o, const Vertex& a, const Vertex& b) {
  return Integer(a.x - o.x) * Integer(b.y - o.y) - Integer(a.y - o.y) * Integer(b.x - o.x);
}

}  // namespace

Polygon::Polygon(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) fail(Errc::invalid_argument, "polygon needs at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].x <= vertices_[i - 1].x) fail(Errc::invalid_argument, "polygon abscissae must increase");
  }
  for (std::size_t i = 2; i < vertices_.size(); ++i) {
    ensure(cross(vertices_[i - 2], vertices_[i - 1], vertices_[i]) >= Integer(0), "polygon is not convex");
  }
}

std::vector<Vertex> Polygon::corners() const {
  std::vector<Vertex> out;
  for (const auto& v : vertices_) {
    while (out.size() >= 2 && cross(out[out.size() - 2], out.back(), v).is_zero()) out.pop_back();
    out.push_back(v);
  }
  return out;
}

Rational Polygon::height_at(std::int64_t x) const {
  if (x < left() || x > right()) fail(Errc::invalid_argument, "abscissa outside polygon range");
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                                   [](const Vertex& v, std::int64_t value) { return v.x < value; });
  if (it->x == x) return to_rational(Integer(it->y));
  const Vertex& b = *it;
  const Vertex& a = *(it - 1);
  return to_rational(Integer(a.y)) + make_rational(Integer(b.y - a.y) * Integer(x - a.x), Integer(b.x - a.x));
}

NewtonPolygon newton_polygon(const IntPolynomial& Q, const Integer& ell) {
  if (Q.is_zero() || Q.coeff(0).is_zero()) fail(Errc::invalid_argument, "newton_polygon: Q(0) must be nonzero");
  std::vector<Vertex> hull;
  for (int i = 0; i <= Q.degree(); ++i) {
    const Valuation v = ord(ell, Q.coeff(i));
    if (!v.is_finite()) continue;
    const Vertex p{i, v.value()};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= Integer(0)) hull.pop_back();
    hull.push_back(p);
  }
  return NewtonPolygon(std::move(hull));
}

std::vector<Slope> slope_multiset(const Polygon& polygon) {
  std::map<Rational, std::int64_t> slopes;
  const auto& v = polygon.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const std::int64_t dx = v[i].x - v[i - 1].x;
    slopes[make_rational(Integer(v[i].y - v[i - 1].y), Integer(dx))] += dx;
  }
  std::vector<Slope> out;
  out.reserve(slopes.size());
  for (const auto& [s, m] : slopes) out.push_back({s, m});
  return out;
}

bool np_product_property_check(const IntPolynomial& Q1, const IntPolynomial& Q2, const Integer& ell) {
  std::map<Rational, std::int64_t> expected;
  for (const auto& s : slope_multiset(newton_polygon(Q1, ell))) expected[s.slope] += s.multiplicity;
  for (const auto& s : slope_multiset(newton_polygon(Q2, ell))) expected[s.slope] += s.multiplicity;
  std::vector<Slope> merged;
  for (const auto& [s, m] : expected) merged.push_back({s, m});
  return slope_multiset(newton_polygon(Q1 * Q2, ell)) == merged;
}

HodgePolygon hodge_polygon(std::span<const int> exponents) {
  if (!std::is_sorted(exponents.begin(), exponents.end())) {
    fail(Errc::invalid_argument, "hodge_polygon: exponents must be sorted ascending");
  }
  if (!exponents.empty() && exponents.front() < 0) fail(Errc::invalid_argument, "hodge_polygon: negative exponent");
  const std::size_t r = exponents.size();
  std::vector<Vertex> vertices;
  vertices.reserve(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    std::int64_t height = 0;
    for (std::size_t j = 0; j < r - i; ++j) height += exponents[j];
    vertices.push_back({static_cast<std::int64_t>(i), height});
  }
  return HodgePolygon(std::vector<int>(exponents.begin(), exponents.end()), std::move(vertices));
}

bool lies_on_or_above(const Polygon& upper, const Polygon& lower) {
  if (upper.left() != lower.left() || upper.right() != lower.right()) {
    fail(Errc::invalid_argument, "lies_on_or_above: polygons have different x-ranges");
  }
  if (upper.vertices().front() != lower.vertices().front() || upper.vertices().back() != lower.vertices().back()) {
    return false;
  }
  for (std::int64_t x = upper.left(); x <= upper.right(); ++x) {
    if (upper.height_at(x) < lower.height_at(x)) return false;
  }
  return true;
}

}  // namespace surfpts
