#pragma once

#include "surfpts/error.hpp"
#include "surfpts/lattice.hpp"
#include "surfpts/matrix.hpp"
#include "surfpts/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace surfpts::testing {

inline WeilPolynomial weil(std::int64_t q, const std::string& coeffs) {
  return validate_weil(Integer(q), parse_coefficients(coeffs));
}

inline HodgeVector hv(std::int64_t ell, std::vector<int> e) { return {Integer(ell), std::move(e)}; }

inline IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (auto v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Errc error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an Error");
}

/// Every (a1, a2) with t^4 + a1 t^3 + a2 t^2 + a1 q t + q^2 accepted by validate_weil.
inline std::vector<WeilPolynomial> weil_sweep(std::int64_t q) {
  std::vector<WeilPolynomial> out;
  for (std::int64_t a1 = -4 * q; a1 <= 4 * q; ++a1) {
    for (std::int64_t a2 = -2 * q; a2 <= a1 * a1 / 4 + 2 * q + 1; ++a2) {
      const std::vector<Integer> c{1, a1, a2, a1 * q, q * q};
      try {
        out.push_back(validate_weil(Integer(q), c));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

/// Solves H x = v for upper-triangular H; true iff x is integral.
inline bool in_lattice(const IntMatrix& h, const IntVector& v) {
  IntVector r = v;
  for (Eigen::Index i = h.rows() - 1; i >= 0; --i) {
    if (!(r(i) % h(i, i)).is_zero()) return false;
    const Integer x = r(i) / h(i, i);
    for (Eigen::Index k = 0; k <= i; ++k) r(k) -= x * h(k, i);
  }
  return true;
}

/// Brute force over every reduced upper-triangular matrix with ell-power
/// diagonal; keeps those whose lattice contains ell^depth Z^n and is F-stable.
inline std::vector<IntMatrix> naive_stable_lattices(const IntMatrix& F, std::int64_t ell, int depth) {
  const Eigen::Index n = F.rows();
  const Integer top = pow(Integer(ell), static_cast<unsigned>(depth));
  std::vector<IntMatrix> out;
  IntMatrix h = IntMatrix::Zero(n, n);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) cells.emplace_back(i, j);

  auto accept = [&] {
    for (Eigen::Index j = 0; j < n; ++j) {
      IntVector e = IntVector::Zero(n);
      e(j) = top;
      if (!in_lattice(h, e)) return;
    }
    const IntMatrix fh = F * h;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_lattice(h, fh.col(j))) return;
    }
    out.push_back(h);
  };
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      accept();
      return;
    }
    const auto [i, j] = cells[c];
    for (Integer x = 0; x < h(i, i); x += 1) {
      h(i, j) = x;
      fill(c + 1);
    }
    h(i, j) = 0;
  };
  std::function<void(Eigen::Index)> diag = [&](Eigen::Index i) {
    if (i == n) {
      fill(0);
      return;
    }
    Integer d = 1;
    for (int e = 0; e <= depth; ++e, d *= ell) {
      h(i, i) = d;
      diag(i + 1);
    }
  };
  diag(0);
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace surfpts::testing
