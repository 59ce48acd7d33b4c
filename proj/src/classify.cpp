#include "surfpts/classify.hpp"

#include "surfpts/error.hpp"

#include <algorithm>

namespace surfpts {

namespace {

void require_four_slots(const HodgeVector& hv) {
  if (hv.slots() != 4) fail(Errc::invalid_argument, "Hodge vector must have 4 slots");
  if (!std::is_sorted(hv.exponents.begin(), hv.exponents.end()) || hv.exponents.front() < 0) {
    fail(Errc::invalid_argument, "Hodge vector must be sorted and nonnegative");
  }
}

bool pair_fits(const NewtonPolygon& np, int total, std::array<int, 2> pair) {
  if (pair[0] + pair[1] != total) return false;
  return lies_on_or_above(np, hodge_polygon(pair));
}

}  // namespace

Case3Data case3_data(const Case3& shape, const Integer& ell) {
  Case3Data d;
  d.b = trace_of(shape.P);
  d.sigma = shape.sigma;
  d.s = shape.s;
  d.ell = ell;
  d.m = ord_finite(ell, shape.P(1));
  d.m_q = ord_finite(ell, 1 + Integer(shape.sigma) * shape.s);
  d.ord_b_minus_2 = ord(ell, d.b - 2);
  return d;
}

int case3_mb(const Case3Data& data, const HodgeVector& hv) {
  return hv.exponents[0] + hv.exponents[2] - data.m_q;
}

bool decide_case1(const NewtonPolygon& np, const HodgeVector& hv) {
  require_four_slots(hv);
  if (to_rational(Integer(hv.total())) != np.height_at(np.left())) {
    fail(Errc::invalid_argument, "decide_case1: exponent total differs from ord f_A(1)");
  }
  return lies_on_or_above(np, hodge_polygon(hv.exponents));
}

std::vector<PairSplit> case2_splittings(const IntPolynomial& P, const Integer& ell, const HodgeVector& hv) {
  require_four_slots(hv);
  const int m = ord_finite(ell, P(1));
  if (hv.total() % 2 != 0 || hv.total() != 2 * m) {
    fail(Errc::invalid_argument, "decide_case2: exponent total must equal 2 ord P(1)");
  }
  const NewtonPolygon np = newton_polygon(substitute_one_minus_t(P), ell);
  const auto& e = hv.exponents;
  constexpr std::array<std::array<int, 4>, 3> kPairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::vector<PairSplit> out;
  for (const auto& idx : kPairings) {
    PairSplit split{{e[idx[0]], e[idx[1]]}, {e[idx[2]], e[idx[3]]}};
    if (split.second < split.first) std::swap(split.first, split.second);
    if (std::find(out.begin(), out.end(), split) != out.end()) continue;
    if (pair_fits(np, m, split.first) && pair_fits(np, m, split.second)) out.push_back(split);
  }
  return out;
}

std::optional<PairSplit> decide_case2(const IntPolynomial& P, const Integer& ell, const HodgeVector& hv) {
  auto splits = case2_splittings(P, ell, hv);
  if (splits.empty()) return std::nullopt;
  return splits.front();
}

bool case3_conditions(int m, int m_q, Valuation ord_b_minus_2, std::span<const int> hv) {
  const int mb = hv[0] + hv[2] - m_q;
  const bool a = mb >= 0 && mb <= ord_b_minus_2;
  const bool b = std::min(mb, m_q) >= hv[0];
  const bool c = std::min(m - mb, m_q) >= hv[1];
  return a && b && c;
}

bool case3_inequality_list(int m, int m_q, Valuation ord_b_minus_2, std::span<const int> hv) {
  const int mb = hv[0] + hv[2] - m_q;
  return mb >= 0 && mb <= ord_b_minus_2 && hv[0] <= mb && hv[0] <= m_q && hv[1] <= m_q && hv[1] <= m - mb;
}

bool decide_case3(const Case3Data& data, const HodgeVector& hv) {
  require_four_slots(hv);
  if (hv.total() != data.m + 2 * data.m_q) {
    fail(Errc::invalid_argument, "decide_case3: exponent total must equal m + 2 m_q");
  }
  return case3_conditions(data.m, data.m_q, data.ord_b_minus_2, hv.exponents);
}

bool decide_case4(const Integer& q, int sigma, const FiniteAbelianGroup& G) {
  const auto s = integer_sqrt_exact(q);
  if (!s) fail(Errc::invalid_argument, "decide_case4: q is not a perfect square");
  const Integer n = abs(1 + Integer(sigma) * *s);
  return G.rank() <= 4 && G.invariants(4) == std::vector<Integer>(4, n);
}

std::vector<HodgeVector> admissible_vectors(const WeilPolynomial& f, const IsogenyShape& shape, const Integer& ell) {
  const int e = ord_finite(ell, f.value_at_one());
  std::vector<HodgeVector> out;
  std::optional<NewtonPolygon> np;
  if (std::holds_alternative<Case1>(shape)) np = newton_polygon(substitute_one_minus_t(f.poly()), ell);
  std::optional<Case3Data> c3;
  if (const auto* s3 = std::get_if<Case3>(&shape)) c3 = case3_data(*s3, ell);

  for (auto& exps : partitions_with_slots(e, 4)) {
    HodgeVector hv{ell, std::move(exps)};
    bool ok = false;
    if (np) {
      ok = decide_case1(*np, hv);
    } else if (const auto* s2 = std::get_if<Case2>(&shape)) {
      ok = decide_case2(s2->P, ell, hv).has_value();
    } else if (c3) {
      ok = decide_case3(*c3, hv);
    } else {
      const auto& s4 = std::get<Case4>(shape);
      const int v = ord_finite(ell, 1 + Integer(s4.sigma) * s4.s);
      ok = hv.exponents == std::vector<int>(4, v);
    }
    if (ok) out.push_back(std::move(hv));
  }
  return out;
}

Decision decide_group(const WeilPolynomial& f, const FiniteAbelianGroup& G) {
  const Integer order = f.value_at_one();
  if (G.order() != order) return {false, "order-mismatch", std::nullopt, std::nullopt};
  const IsogenyShape shape = detect_shape(f);
  const std::string failure = "case-" + std::to_string(case_number(shape)) + "-condition";

  std::vector<std::pair<Integer, HodgeVector>> parts;
  for (const auto& [ell, exponent] : factorize(order)) {
    try {
      parts.emplace_back(ell, primary_part(G, ell, 4));
    } catch (const Error& e) {
      if (e.code() != Errc::too_many_generators) throw;
      return {false, "too-many-generators", ell, std::nullopt};
    }
  }
  if (const auto* s4 = std::get_if<Case4>(&shape); s4 && decide_case4(f.q, s4->sigma, G)) return {true, "ok", std::nullopt, std::nullopt};

  for (const auto& [ell, hv] : parts) {
    const auto admissible = admissible_vectors(f, shape, ell);
    if (std::find(admissible.begin(), admissible.end(), hv) == admissible.end()) {
      return {false, failure, ell, hv};
    }
  }
  ensure(!std::holds_alternative<Case4>(shape), "case 4 per-prime check disagrees with decide_case4");
  return {true, "ok", std::nullopt, std::nullopt};
}

ClassificationResult enumerate_groups(const WeilPolynomial& f) {
  ClassificationResult result;
  result.shape = detect_shape(f);
  result.order = f.value_at_one();

  std::vector<std::vector<HodgeVector>> choices;
  for (const auto& [ell, exponent] : factorize(result.order)) {
    PrimeDetail detail;
    detail.admissible = admissible_vectors(f, result.shape, ell);
    if (detail.admissible.empty()) {
      fail(Errc::internal_invariant, "no admissible group structure at ell = " + ell.str());
    }
    if (const auto* s2 = std::get_if<Case2>(&result.shape)) {
      for (const auto& hv : detail.admissible) detail.splittings.push_back(case2_splittings(s2->P, ell, hv));
    }
    choices.push_back(detail.admissible);
    result.per_prime.emplace(ell, std::move(detail));
  }

  if (const auto* s4 = std::get_if<Case4>(&result.shape)) {
    const Integer n = abs(1 + Integer(s4->sigma) * s4->s);
    const std::vector<Integer> orders(4, n);
    result.groups.push_back(FiniteAbelianGroup::from_cyclic_orders(orders));
    return result;
  }

  std::vector<HodgeVector> pick(choices.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == choices.size()) {
      result.groups.push_back(assemble_from_primary(pick));
      return;
    }
    for (const auto& hv : choices[i]) {
      pick[i] = hv;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(result.groups.begin(), result.groups.end());
  ensure(!result.groups.empty(), "enumerate_groups produced no groups");
  for (const auto& g : result.groups) ensure(g.order() == result.order, "enumerated group has wrong order");
  return result;
}

}  // namespace surfpts
