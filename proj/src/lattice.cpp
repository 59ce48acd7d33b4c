#include "surfpts/lattice.hpp"

#include "surfpts/error.hpp"
#include "surfpts/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <thread>

namespace surfpts {

IntMatrix companion(const IntPolynomial& monic) {
  const int d = monic.degree();
  if (d < 1 || monic.leading() != Integer(1)) fail(Errc::invalid_argument, "companion: polynomial must be monic of degree >= 1");
  IntMatrix c = IntMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) c(0, j) = -monic.coeff(d - 1 - j);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  return c;
}

IntMatrix frobenius_model(const IsogenyShape& shape, const WeilPolynomial& f) {
  if (const auto* s = std::get_if<Case1>(&shape)) return companion(s->f);
  if (const auto* s = std::get_if<Case2>(&shape)) {
    const IntMatrix c = companion(s->P);
    return block_diagonal(c, c);
  }
  if (const auto* s = std::get_if<Case3>(&shape)) {
    const IntMatrix scalar = identity(2) * Integer(-s->sigma * s->s);
    return block_diagonal(companion(s->P), scalar);
  }
  const auto& s4 = std::get<Case4>(shape);
  (void)f;
  return identity(4) * Integer(-s4.sigma * s4.s);
}

HodgeVector cokernel_exponents(const IntMatrix& m, const Integer& ell) {
  if (m.rows() != m.cols()) fail(Errc::invalid_argument, "cokernel_exponents: matrix must be square");
  const SnfResult s = snf(m);
  HodgeVector hv{ell, {}};
  for (const auto& d : s.invariants) {
    if (d.is_zero()) fail(Errc::invalid_argument, "cokernel_exponents: singular matrix");
    hv.exponents.push_back(ord_finite(ell, d));
  }
  std::sort(hv.exponents.begin(), hv.exponents.end());
  return hv;
}

bool is_stable(const IntMatrix& h, const IntMatrix& F) {
  const Integer det = determinant(h);
  if (det.is_zero()) fail(Errc::invalid_argument, "is_stable: singular basis");
  const IntMatrix p = adjugate(h) * F * h;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (!(p(i, j) % det).is_zero()) return false;
    }
  }
  return true;
}

namespace {

using Row = std::vector<std::int64_t>;
using Subspace = std::vector<Row>;  // reduced row echelon basis

std::int64_t small_prime(const Integer& ell) {
  if (!is_prime(ell)) fail(Errc::invalid_argument, "ell must be prime");
  if (!ell.fits_int64() || ell.to_int64() > (std::int64_t{1} << 31)) {
    fail(Errc::unsupported_prime, "lattice enumeration needs ell < 2^31");
  }
  return ell.to_int64();
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  const auto e = extended_gcd(Integer(a), Integer(p));
  return mod_floor(e.x, Integer(p)).to_int64();
}

Subspace rref(Subspace rows, std::int64_t p) {
  Subspace out;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::int64_t inv = inverse_mod(rows[r][col], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const std::int64_t c = rows[i][col];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = ((rows[i][k] - c * rows[r][k]) % p + p) % p;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool in_span(const Subspace& s, Row v, std::int64_t p) {
  for (const auto& row : s) {
    const auto pivot = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; }) - row.begin());
    const std::int64_t c = v[pivot];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = ((v[k] - c * row[k]) % p + p) % p;
  }
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

Row apply(const std::vector<Row>& m, const Row& v, std::int64_t p) {
  Row w(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) w[i] = (w[i] + m[i][j] * v[j]) % p;
  }
  return w;
}

/// Nonzero vectors of F_p^n with leading nonzero entry 1.
std::vector<Row> projective_points(std::size_t n, std::int64_t p) {
  std::vector<Row> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
      Row v(n, 0);
      v[lead] = 1;
      std::size_t c = code;
      for (std::size_t k = lead + 1; k < n; ++k) {
        v[k] = static_cast<std::int64_t>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

/// All F-stable subspaces of F_p^n, closing the zero space under adding
/// cyclic subspaces.
std::vector<Subspace> stable_subspaces(const std::vector<Row>& fbar, std::int64_t p) {
  const std::size_t n = fbar.size();
  const auto points = projective_points(n, p);
  std::vector<Subspace> cyclic;
  for (const auto& v : points) {
    Subspace gens{v};
    for (std::size_t k = 1; k < n; ++k) gens.push_back(apply(fbar, gens.back(), p));
    cyclic.push_back(rref(std::move(gens), p));
  }

  std::set<Subspace> seen{Subspace{}};
  std::deque<Subspace> queue{Subspace{}};
  while (!queue.empty()) {
    const Subspace s = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (in_span(s, points[i], p)) continue;
      Subspace gens = s;
      gens.insert(gens.end(), cyclic[i].begin(), cyclic[i].end());
      Subspace next = rref(std::move(gens), p);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

struct LatticeKey {
  std::vector<int> exponents;
  std::vector<Integer> entries;
  auto operator<=>(const LatticeKey&) const = default;
  bool operator==(const LatticeKey&) const = default;
};

LatticeKey key_of(const IntMatrix& h, const Integer& ell) {
  LatticeKey key;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    const int e = ord_finite(ell, h(i, i));
    ensure(h(i, i) == pow(ell, static_cast<unsigned>(e)), "HNF diagonal is not a power of ell");
    key.exponents.push_back(e);
  }
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) key.entries.push_back(h(i, j));
  }
  return key;
}

std::vector<Row> reduce_mod(const IntMatrix& m, std::int64_t p) {
  std::vector<Row> out(static_cast<std::size_t>(m.rows()), Row(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mod_floor(m(i, j), Integer(p)).to_int64();
    }
  }
  return out;
}

}  // namespace

std::vector<StableLattice> enumerate_stable_lattices(const IntMatrix& F, const Integer& ell, int depth) {
  if (depth < 0) fail(Errc::invalid_argument, "depth must be nonnegative");
  if (F.rows() != F.cols()) fail(Errc::invalid_argument, "F must be square");
  const std::int64_t p = small_prime(ell);
  const Eigen::Index n = F.rows();

  std::map<LatticeKey, IntMatrix> all;
  std::map<std::vector<Row>, std::vector<Subspace>> cache;
  const IntMatrix start = identity(n);
  all.emplace(key_of(start, ell), start);
  std::vector<IntMatrix> frontier{start};

  // T' = T_W + ell T for an F-stable W ⊆ T / ell T; every lattice containing
  // ell^k Z^n is reached within k steps.
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<IntMatrix> next;
    for (const auto& h : frontier) {
      auto fbar = reduce_mod(conjugate_by(F, h), p);
      auto it = cache.find(fbar);
      if (it == cache.end()) it = cache.emplace(fbar, stable_subspaces(fbar, p)).first;
      for (const auto& w : it->second) {
        IntMatrix gens(n, static_cast<Eigen::Index>(w.size()) + n);
        for (std::size_t k = 0; k < w.size(); ++k) {
          IntVector v(n);
          for (Eigen::Index i = 0; i < n; ++i) v(i) = w[k][static_cast<std::size_t>(i)];
          gens.col(static_cast<Eigen::Index>(k)) = h * v;
        }
        gens.rightCols(n) = h * ell;
        IntMatrix child = hnf_columns(gens);
        auto key = key_of(child, ell);
        if (all.emplace(std::move(key), child).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  std::vector<StableLattice> out;
  out.reserve(all.size());
  for (auto& [key, h] : all) {
    ensure(is_stable(h, F), "enumerated lattice is not F-stable");
    out.push_back({std::move(h), key.exponents});
  }
  return out;
}

Integer lattice_count_between(const Integer& ell, int depth, int rank) {
  if (depth < 0 || rank < 0) fail(Errc::invalid_argument, "depth and rank must be nonnegative");
  auto gaussian = [&](int a, int b) {
    Integer num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
      num *= pow(ell, static_cast<unsigned>(a - i)) - 1;
      den *= pow(ell, static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
  };
  // Birkhoff: sum over conjugate types k >= mu'_1 >= ... >= mu'_depth >= 0.
  Integer total = 0;
  std::vector<int> mu(static_cast<std::size_t>(depth) + 1, 0);
  auto rec = [&](auto&& self, int i, int bound) -> void {
    if (i == depth) {
      Integer term = 1;
      for (int j = 0; j < depth; ++j) {
        const int cur = mu[static_cast<std::size_t>(j)], nxt = mu[static_cast<std::size_t>(j) + 1];
        term *= pow(ell, static_cast<unsigned>(nxt * (rank - cur))) * gaussian(rank - nxt, cur - nxt);
      }
      total += term;
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      mu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, rank);
  return total;
}

std::vector<HodgeVector> OracleReport::realized_vectors() const {
  std::vector<HodgeVector> out;
  for (const auto& [exps, lattice] : realized) out.push_back({ell, exps});
  return out;
}

int default_depth(const WeilPolynomial& f, const Integer& ell) { return ord_finite(ell, f.value_at_one()) + 1; }

namespace {

struct ScalarTail {
  IntMatrix head;
  Integer c;
  int k = 0;
};

/// F = head ⊕ c I_k with k maximal and chi_head(c) prime to ell.
std::optional<ScalarTail> split_scalar_tail(const IntMatrix& F, const Integer& ell) {
  const Eigen::Index n = F.rows();
  const Integer c = F(n - 1, n - 1);
  Eigen::Index k = 0;
  while (k < n) {
    const Eigen::Index i = n - 1 - k;
    bool ok = F(i, i) == c;
    for (Eigen::Index j = 0; j < n && ok; ++j) {
      if (j != i && (!F(i, j).is_zero() || !F(j, i).is_zero())) ok = false;
    }
    if (!ok) break;
    ++k;
  }
  if (k == 0) return std::nullopt;
  ScalarTail tail{F.topLeftCorner(n - k, n - k), c, static_cast<int>(k)};
  if (tail.head.rows() > 0 && ord(ell, charpoly(tail.head)(c)) != Valuation(0)) return std::nullopt;
  return tail;
}

void check_oracle_args(const WeilPolynomial& f, const Integer& ell, int depth, const OracleOptions& options) {
  if (!is_prime(ell)) fail(Errc::invalid_argument, "ell must be prime");
  if (depth < 0) fail(Errc::invalid_argument, "depth must be nonnegative");
  if (!options.allow_char_prime && (f.q % ell).is_zero()) {
    fail(Errc::unsupported_prime, "ell divides q; the lattice model covers ell != p only");
  }
}

std::vector<std::vector<int>> cokernels_parallel(const IntMatrix& F, const std::vector<StableLattice>& lattices,
                                                 const Integer& ell, unsigned jobs) {
  std::vector<std::vector<int>> out(lattices.size());
  const IntMatrix one = identity(F.rows());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < lattices.size(); i += stride) {
      out[i] = cokernel_exponents(one - conjugate_by(F, lattices[i].basis), ell).exponents;
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(lattices.size(), 1))));
  if (jobs == 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
  return out;
}

}  // namespace

OracleReport oracle_realized_set(const WeilPolynomial& f, const Integer& ell, int depth, const OracleOptions& options) {
  check_oracle_args(f, ell, depth, options);
  const IntMatrix F = frobenius_model(detect_shape(f), f);
  OracleReport report;
  report.ell = ell;
  report.depth = depth;

  std::optional<ScalarTail> tail;
  if (options.split_scalar_block) tail = split_scalar_tail(F, ell);

  if (!tail) {
    auto lattices = enumerate_stable_lattices(F, ell, depth);
    const auto exps = cokernels_parallel(F, lattices, ell, options.jobs);
    report.lattice_count = static_cast<std::int64_t>(lattices.size());
    for (std::size_t i = 0; i < lattices.size(); ++i) report.realized.try_emplace(exps[i], std::move(lattices[i]));
    return report;
  }

  // Stable lattices of head ⊕ c I_k split as T_head ⊕ T_k, and 1 - c acts on
  // T_k by a scalar, so the scalar part contributes k copies of ord(1 - c).
  const Integer one_minus_c = 1 - tail->c;
  ensure(!one_minus_c.is_zero(), "1 - F is singular");
  const int v = ord_finite(ell, one_minus_c);
  std::vector<StableLattice> heads;
  if (tail->head.rows() > 0) {
    heads = enumerate_stable_lattices(tail->head, ell, depth);
  } else {
    heads.push_back({IntMatrix(0, 0), {}});
  }
  const auto exps = tail->head.rows() > 0 ? cokernels_parallel(tail->head, heads, ell, options.jobs)
                                          : std::vector<std::vector<int>>{{}};
  report.lattice_count = Integer(static_cast<std::int64_t>(heads.size())) * lattice_count_between(ell, depth, tail->k);
  for (std::size_t i = 0; i < heads.size(); ++i) {
    std::vector<int> e = exps[i];
    e.insert(e.end(), static_cast<std::size_t>(tail->k), v);
    std::sort(e.begin(), e.end());
    if (report.realized.contains(e)) continue;
    StableLattice full{block_diagonal(heads[i].basis, identity(tail->k)), heads[i].exponents};
    full.exponents.insert(full.exponents.end(), static_cast<std::size_t>(tail->k), 0);
    ensure(is_stable(full.basis, F), "split witness lattice is not F-stable");
    report.realized.emplace(std::move(e), std::move(full));
  }
  return report;
}

IntMatrix witness_case2(const IntPolynomial& P, const Integer& ell, std::array<int, 2> pair) {
  if (P.degree() != 2) fail(Errc::invalid_argument, "witness_case2: P must be quadratic");
  const Integer b = trace_of(P);
  const Integer p1 = P(1);
  const int m = ord_finite(ell, p1);
  if (pair[0] < 0 || pair[0] > pair[1] || pair[0] + pair[1] != m || Valuation(pair[0]) > ord(ell, b - 2)) {
    fail(Errc::invalid_argument, "witness_case2: pair violates n1 <= n2, n1 + n2 = ord P(1), n1 <= ord(b - 2)");
  }
  const Integer l1 = pow(ell, static_cast<unsigned>(pair[0]));
  IntMatrix w(2, 2);
  w << -(b - 2), -(p1 / l1), l1, 0;
  return w;
}

IntMatrix witness_case3(const Case3& shape, const Integer& ell, const HodgeVector& hv) {
  const Case3Data d = case3_data(shape, ell);
  if (!decide_case3(d, hv)) fail(Errc::invalid_argument, "witness_case3: vector is not admissible");
  const int m1 = hv.exponents[0], m2 = hv.exponents[1];
  const int mb = case3_mb(d, hv);
  const Integer alpha = 1 + Integer(shape.sigma) * shape.s;
  // Trace of 1 - F on the P-block is 2 - b.
  const Integer beta = 2 - d.b;
  const Integer p1 = shape.P(1);
  auto lp = [&](int e) { return pow(ell, static_cast<unsigned>(e)); };
  auto exact = [](const Integer& num, const Integer& den) {
    ensure((num % den).is_zero(), "case-3 witness entry is not integral");
    return num / den;
  };
  IntMatrix w = IntMatrix::Zero(4, 4);
  w.col(0) << beta + alpha, lp(m1), lp(mb), 0;
  w.col(1) << exact(-beta * alpha, lp(m1)), 0, exact(-lp(mb) * alpha, lp(m1)), 0;
  w.col(2) << exact(-p1, lp(mb)), 0, alpha, lp(m2);
  w.col(3) << exact(p1 * alpha, lp(m2 + mb)), 0, 0, 0;
  return w;
}

StableLattice witness_search_case1(const WeilPolynomial& f, const Integer& ell, const HodgeVector& hv, int depth) {
  const IntMatrix F = frobenius_model(detect_shape(f), f);
  const IntMatrix one = identity(F.rows());
  for (auto& lattice : enumerate_stable_lattices(F, ell, depth)) {
    if (cokernel_exponents(one - conjugate_by(F, lattice.basis), ell) == hv) return std::move(lattice);
  }
  fail(Errc::depth_exhausted, "no stable lattice realizes (" + [&] {
    std::string s;
    for (std::size_t i = 0; i < hv.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(hv.exponents[i]);
    return s;
  }() + ") at depth " + std::to_string(depth) + "; try a larger depth");
}

Witness witness_for(const WeilPolynomial& f, const Integer& ell, const HodgeVector& hv, int depth) {
  const IsogenyShape shape = detect_shape(f);
  const auto admissible = admissible_vectors(f, shape, ell);
  if (std::find(admissible.begin(), admissible.end(), hv) == admissible.end()) {
    fail(Errc::invalid_argument, "witness: vector is not admissible");
  }

  Witness w;
  if (std::holds_alternative<Case1>(shape)) {
    w.lattice = witness_search_case1(f, ell, hv, depth);
    const IntMatrix F = frobenius_model(shape, f);
    w.matrix = identity(4) - conjugate_by(F, w.lattice->basis);
  } else if (const auto* s2 = std::get_if<Case2>(&shape)) {
    const auto split = decide_case2(s2->P, ell, hv);
    ensure(split.has_value(), "admissible case-2 vector without a splitting");
    w.matrix = block_diagonal(witness_case2(s2->P, ell, split->first), witness_case2(s2->P, ell, split->second));
  } else if (const auto* s3 = std::get_if<Case3>(&shape)) {
    w.matrix = witness_case3(*s3, ell, hv);
  } else {
    const auto& s4 = std::get<Case4>(shape);
    w.matrix = identity(4) * (1 + Integer(s4.sigma) * s4.s);
  }
  ensure(charpoly(w.matrix) == substitute_one_minus_t(f.poly()), "witness characteristic polynomial is not f(1 - t)");
  ensure(cokernel_exponents(w.matrix, ell) == hv, "witness cokernel differs from the target");
  return w;
}

}  // namespace surfpts
