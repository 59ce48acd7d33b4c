#include "surfpts/matrix.hpp"

#include "surfpts/error.hpp"

#include <algorithm>
#include <optional>

namespace surfpts {

IntMatrix identity(Eigen::Index n) { return IntMatrix::Identity(n, n); }

IntMatrix diagonal(const std::vector<Integer>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  IntMatrix d = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

IntMatrix adjugate(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return identity(1);
  IntMatrix adj(n, n);
  IntMatrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Integer cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

IntMatrix evaluate(const IntPolynomial& f, const IntMatrix& a) {
  IntMatrix acc = IntMatrix::Zero(a.rows(), a.cols());
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = a * acc;
    for (Eigen::Index i = 0; i < a.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

namespace {

struct Position {
  Eigen::Index row;
  Eigen::Index col;
};

std::optional<Position> min_abs_entry(const IntMatrix& a, Eigen::Index t) {
  std::optional<Position> best;
  Integer best_abs;
  for (Eigen::Index i = t; i < a.rows(); ++i) {
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      const Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix U = identity(m.rows());
  IntMatrix V = identity(m.cols());
  const Eigen::Index steps = std::min(a.rows(), a.cols());

  for (Eigen::Index t = 0; t < steps; ++t) {
    const auto start = min_abs_entry(a, t);
    if (!start) break;
    a.row(t).swap(a.row(start->row));
    U.row(t).swap(U.row(start->row));
    a.col(t).swap(a.col(start->col));
    V.col(t).swap(V.col(start->col));

    while (true) {
      // Move the smallest entry of row t / column t onto the diagonal.
      Eigen::Index best_r = t, best_c = t;
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (!a(i, t).is_zero() && abs(a(i, t)) < abs(a(best_r, best_c))) best_r = i, best_c = t;
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (!a(t, j).is_zero() && abs(a(t, j)) < abs(a(best_r, best_c))) best_r = t, best_c = j;
      }
      if (best_r != t) {
        a.row(t).swap(a.row(best_r));
        U.row(t).swap(U.row(best_r));
      }
      if (best_c != t) {
        a.col(t).swap(a.col(best_c));
        V.col(t).swap(V.col(best_c));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        const Integer q = floor_div(a(i, t), a(t, t));
        a.row(i) -= q * a.row(t);
        U.row(i) -= q * U.row(t);
        clean = clean && a(i, t).is_zero();
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        const Integer q = floor_div(a(t, j), a(t, t));
        a.col(j) -= q * a.col(t);
        V.col(j) -= q * V.col(t);
        clean = clean && a(t, j).is_zero();
      }
      if (!clean) continue;

      std::optional<Eigen::Index> offending;
      for (Eigen::Index i = t + 1; i < a.rows() && !offending; ++i) {
        for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
          if (!(a(i, j) % a(t, t)).is_zero()) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      a.row(t) += a.row(*offending);
      U.row(t) += U.row(*offending);
    }

    if (a(t, t).sign() < 0) {
      a.row(t) = -a.row(t);
      U.row(t) = -U.row(t);
    }
  }

  SnfResult result;
  for (Eigen::Index i = 0; i < steps; ++i) result.invariants.push_back(a(i, i));
  result.U = std::move(U);
  result.V = std::move(V);
  return result;
}

IntMatrix hnf_columns(const IntMatrix& generators) {
  const Eigen::Index n = generators.rows();
  std::vector<IntVector> active;
  for (Eigen::Index j = 0; j < generators.cols(); ++j) active.emplace_back(generators.col(j));

  IntMatrix h = IntMatrix::Zero(n, n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    std::optional<IntVector> pivot;
    std::vector<IntVector> rest;
    for (auto& v : active) {
      if (v(i).is_zero()) {
        rest.push_back(std::move(v));
        continue;
      }
      if (!pivot) {
        pivot = std::move(v);
        continue;
      }
      const Integer a = (*pivot)(i), b = v(i);
      const auto [g, x, y] = extended_gcd(a, b);
      IntVector combined = x * *pivot + y * v;
      IntVector cleared = (b / g) * *pivot - (a / g) * v;
      pivot = std::move(combined);
      if (!all_zero(cleared)) rest.push_back(std::move(cleared));
    }
    if (!pivot) fail(Errc::invalid_argument, "hnf_columns: generators do not span a full-rank lattice");
    if ((*pivot)(i).sign() < 0) *pivot = -*pivot;
    h.col(i) = *pivot;
    active = std::move(rest);
  }

  for (Eigen::Index j = 1; j < n; ++j) {
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      const Integer q = floor_div(h(i, j), h(i, i));
      if (!q.is_zero()) h.col(j) -= q * h.col(i);
    }
  }
  return h;
}

bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == Integer(1); }

IntMatrix conjugate_by(const IntMatrix& a, const IntMatrix& h) {
  const Integer det = determinant(h);
  if (det.is_zero()) fail(Errc::invalid_argument, "conjugate_by: singular basis");
  IntMatrix p = adjugate(h) * a * h;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      ensure((p(i, j) % det).is_zero(), "conjugate_by: lattice is not stable");
      p(i, j) /= det;
    }
  }
  return p;
}

}  // namespace surfpts
