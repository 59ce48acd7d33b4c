#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "surfpts/matrix.hpp"

#include <numeric>
#include <random>

using namespace surfpts;
using surfpts::testing::in_lattice;
using surfpts::testing::mat;
using surfpts::testing::random_matrix;

namespace {

std::vector<Integer> ints(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

/// Leibniz expansion over all permutations.
Integer leibniz(const IntMatrix& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(static_cast<Eigen::Index>(i), perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntMatrix diag_of(const std::vector<Integer>& d, Eigen::Index rows, Eigen::Index cols) {
  IntMatrix m = IntMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

}  // namespace

TEST_CASE("determinant matches Leibniz") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < 60; ++i) {
      const IntMatrix m = random_matrix(rng, n, -6, 6);
      CHECK(determinant(m) == leibniz(m));
    }
  }
  CHECK(determinant(IntMatrix(0, 0)) == Integer(1));
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == Integer(-1));
}

TEST_CASE("charpoly evaluates to det(tI - A)") {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 5; ++n) {
    for (int i = 0; i < 40; ++i) {
      const IntMatrix a = random_matrix(rng, n, -9, 9);
      const IntPolynomial cp = charpoly(a);
      CHECK(cp.degree() == n);
      for (int t = -3; t <= 3; ++t) CHECK(cp(t) == leibniz(identity(n) * Integer(t) - a));
      // Cayley-Hamilton
      CHECK(all_zero(evaluate(cp, a)));
    }
  }
  CHECK(charpoly(mat({{3, -4}, {1, 0}})) == IntPolynomial{4, -3, 1});
}

TEST_CASE("adjugate") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 40; ++i) {
      const IntMatrix a = random_matrix(rng, n, -9, 9);
      const IntMatrix prod = a * adjugate(a);
      CHECK(prod == identity(n) * determinant(a));
    }
  }
}

TEST_CASE("snf examples") {
  CHECK(snf(identity(4)).invariants == ints({1, 1, 1, 1}));
  CHECK(snf(mat({{4, 0}, {0, 2}})).invariants == ints({2, 4}));
  CHECK(snf(mat({{3, -4}, {1, 0}})).invariants == ints({1, 4}));
  CHECK(snf(mat({{0, 0}, {0, 0}})).invariants == ints({0, 0}));
  CHECK(snf(mat({{2, 4}, {4, 8}})).invariants == ints({2, 0}));
}

TEST_CASE("snf properties") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 400; ++i) {
    const Eigen::Index rows = 1 + i % 5, cols = 1 + (i / 5) % 5;
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> dist(-12, 12);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = (i % 7 == 0) ? dist(rng) * 6 : dist(rng);
    const auto s = snf(m);
    CHECK(s.U * m * s.V == diag_of(s.invariants, rows, cols));
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    for (std::size_t k = 0; k < s.invariants.size(); ++k) {
      CHECK(s.invariants[k] >= Integer(0));
      if (k > 0 && !s.invariants[k - 1].is_zero()) CHECK((s.invariants[k] % s.invariants[k - 1]).is_zero());
      if (k > 0 && s.invariants[k - 1].is_zero()) CHECK(s.invariants[k].is_zero());
    }
    if (rows == cols) {
      Integer prod = 1;
      for (const auto& d : s.invariants) prod *= d;
      CHECK(prod == abs(determinant(m)));
    }
  }
}

TEST_CASE("hnf_columns") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Eigen::Index n = 1 + i % 4;
    IntMatrix g = random_matrix(rng, n, -9, 9);
    if (determinant(g).is_zero()) continue;
    IntMatrix gens(n, 2 * n);
    gens << g, g * random_matrix(rng, n, -3, 3);
    const IntMatrix h = hnf_columns(gens);
    for (Eigen::Index r = 0; r < n; ++r) {
      CHECK(h(r, r) > Integer(0));
      for (Eigen::Index c = 0; c < r; ++c) CHECK(h(r, c).is_zero());
      for (Eigen::Index c = r + 1; c < n; ++c) {
        CHECK(h(r, c) >= Integer(0));
        CHECK(h(r, c) < h(r, r));
      }
    }
    // same lattice: each generator lies in span(h) and |det h| = |det g|
    for (Eigen::Index c = 0; c < gens.cols(); ++c) CHECK(in_lattice(h, gens.col(c)));
    CHECK(determinant(h) == abs(determinant(g)));
    // canonical under a change of basis
    IntMatrix u = random_matrix(rng, n, -2, 2);
    if (is_unimodular(u)) CHECK(hnf_columns(g * u) == hnf_columns(g));
  }
  CHECK_THROWS_AS(hnf_columns(mat({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("conjugate_by") {
  const IntMatrix F = mat({{0, -2}, {1, 0}});
  const IntMatrix h = mat({{2, 0}, {0, 1}});
  // F maps (2,0) to (0,2) and (0,1) to (-2,0): both in the lattice.
  CHECK(conjugate_by(F, h) == mat({{0, -1}, {2, 0}}));
  CHECK_THROWS_AS(conjugate_by(mat({{0, 1}, {1, 0}}), h), Error);
}
