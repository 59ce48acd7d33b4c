#include "surfpts/abgroup.hpp"

#include "surfpts/error.hpp"
#include "surfpts/numeric.hpp"
#include "surfpts/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace surfpts {

int HodgeVector::total() const noexcept { return std::accumulate(exponents.begin(), exponents.end(), 0); }

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(std::span<const Integer> orders) {
  std::map<Integer, std::vector<int>> by_prime;
  for (const auto& d : orders) {
    if (d.sign() <= 0) fail(Errc::invalid_argument, "cyclic order must be positive, got " + d.str());
    for (const auto& [p, e] : factorize(d)) by_prime[p].push_back(e);
  }
  std::size_t slots = 0;
  for (const auto& [p, exps] : by_prime) slots = std::max(slots, exps.size());
  std::vector<HodgeVector> parts;
  for (auto& [p, exps] : by_prime) {
    exps.resize(slots, 0);
    std::sort(exps.begin(), exps.end());
    parts.push_back({p, exps});
  }
  return assemble_from_primary(parts);
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::vector<Integer> FiniteAbelianGroup::invariants(std::size_t slots) const {
  std::vector<Integer> out;
  if (factors_.size() < slots) out.assign(slots - factors_.size(), Integer(1));
  out.insert(out.end(), factors_.begin(), factors_.end());
  return out;
}

std::strong_ordering operator<=>(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  const std::size_t slots = std::max<std::size_t>({4, a.rank(), b.rank()});
  const auto x = a.invariants(slots);
  const auto y = b.invariants(slots);
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

HodgeVector primary_part(const FiniteAbelianGroup& G, const Integer& ell, std::size_t slots) {
  std::vector<int> exps;
  for (const auto& d : G.factors()) {
    const int e = ord_finite(ell, d);
    if (e > 0) exps.push_back(e);
  }
  if (exps.size() > slots) {
    fail(Errc::too_many_generators, "the " + ell.str() + "-part needs " + std::to_string(exps.size()) +
                                        " generators, more than " + std::to_string(slots));
  }
  exps.insert(exps.begin(), slots - exps.size(), 0);
  std::sort(exps.begin(), exps.end());
  return {ell, std::move(exps)};
}

FiniteAbelianGroup assemble_from_primary(std::span<const HodgeVector> parts) {
  if (parts.empty()) return {};
  const std::size_t slots = parts.front().slots();
  std::set<Integer> seen;
  for (const auto& part : parts) {
    if (!seen.insert(part.ell).second) fail(Errc::invalid_argument, "duplicate prime " + part.ell.str());
    if (part.slots() != slots) fail(Errc::invalid_argument, "primary parts have different slot counts");
    if (!std::is_sorted(part.exponents.begin(), part.exponents.end())) {
      fail(Errc::invalid_argument, "primary exponents must be sorted");
    }
  }
  std::vector<Integer> chain(slots, Integer(1));
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < slots; ++k) {
      chain[k] *= pow(part.ell, static_cast<unsigned>(part.exponents[k]));
    }
  }
  std::erase_if(chain, [](const Integer& d) { return d == Integer(1); });
  return FiniteAbelianGroup(std::move(chain));
}

std::vector<std::vector<int>> partitions_with_slots(int total, int slots) {
  std::vector<std::vector<int>> out;
  if (total < 0 || slots < 1) return out;
  std::vector<int> current;
  // Fill left to right with non-decreasing parts; `remaining` must fit in the
  // slots still open using parts >= the last one chosen.
  auto rec = [&](auto&& self, int remaining, int min_part, int open) -> void {
    if (open == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int part = min_part; part * open <= remaining; ++part) {
      if (open == 1 && part != remaining) continue;
      current.push_back(part);
      self(self, remaining - part, part, open - 1);
      current.pop_back();
    }
  };
  rec(rec, total, 0, slots);
  return out;
}

FiniteAbelianGroup parse_group(std::string_view text) {
  std::vector<Integer> orders;
  try {
    orders = parse_coefficients(text);
  } catch (const Error&) {
    fail(Errc::parse_error, "group must be comma-separated positive integers: '" + std::string(text) + "'");
  }
  for (const auto& d : orders) {
    if (d.sign() <= 0) fail(Errc::parse_error, "group factors must be positive, got " + d.str());
  }
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

std::string format_group(const FiniteAbelianGroup& G) {
  if (G.factors().empty()) return "1";
  return format_coefficients(G.factors());
}

}  // namespace surfpts
