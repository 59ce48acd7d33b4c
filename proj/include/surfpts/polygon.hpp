#pragma once

#include "surfpts/numeric.hpp"
#include "surfpts/polynomial.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace surfpts {

struct Vertex {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Convex piecewise-linear graph over [x_0, x_last] given by its vertices.
/// Evaluation between vertices is exact rational interpolation.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  /// Vertices with collinear interior points removed.
  std::vector<Vertex> corners() const;
  std::int64_t left() const { return vertices_.front().x; }
  std::int64_t right() const { return vertices_.back().x; }
  Rational height_at(std::int64_t x) const;

 private:
  std::vector<Vertex> vertices_;
};

class NewtonPolygon : public Polygon {
 public:
  using Polygon::Polygon;
};

class HodgePolygon : public Polygon {
 public:
  HodgePolygon() = default;
  HodgePolygon(std::vector<int> exponents, std::vector<Vertex> vertices)
      : Polygon(std::move(vertices)), exponents_(std::move(exponents)) {}
  const std::vector<int>& exponents() const noexcept { return exponents_; }

 private:
  std::vector<int> exponents_;
};

/// Lower convex hull of (i, ord_ell(Q_i)) over the nonzero coefficients.
/// Throws Errc::invalid_argument when Q(0) = 0.
NewtonPolygon newton_polygon(const IntPolynomial& Q, const Integer& ell);

struct Slope {
  Rational slope;
  std::int64_t multiplicity = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
};
/// Ascending slopes; multiplicities sum to the width of the polygon.
std::vector<Slope> slope_multiset(const Polygon& polygon);

/// Whether the slopes of NP(Q1 Q2) are the multiset union of those of NP(Q1)
/// and NP(Q2).
bool np_product_property_check(const IntPolynomial& Q1, const IntPolynomial& Q2, const Integer& ell);

/// Vertices (i, m_1 + ... + m_{r-i}) for sorted exponents m_1 <= ... <= m_r.
HodgePolygon hodge_polygon(std::span<const int> exponents);

/// True iff the polygons share both endpoints and `upper` is pointwise >=
/// `lower` at every integer abscissa. Throws on mismatched x-ranges.
bool lies_on_or_above(const Polygon& upper, const Polygon& lower);

}  // namespace surfpts
