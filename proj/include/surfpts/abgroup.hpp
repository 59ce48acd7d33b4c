#pragma once

#include "surfpts/integer.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfpts {

/// Exponent type (m_1 <= ... <= m_r) of an ℓ-primary group with r slots.
struct HodgeVector {
  Integer ell;
  std::vector<int> exponents;

  std::size_t slots() const noexcept { return exponents.size(); }
  int total() const noexcept;
  friend bool operator==(const HodgeVector&, const HodgeVector&) = default;
};

/// Finite abelian group as an invariant-factor chain d_1 | d_2 | ... | d_k
/// with every d_i > 1. The trivial group has an empty chain.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Canonicalizes any multiset of positive integers (the orders of cyclic
  /// summands) into the invariant-factor chain of their direct sum.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const Integer> orders);

  const std::vector<Integer>& factors() const noexcept { return factors_; }
  Integer order() const;
  std::size_t rank() const noexcept { return factors_.size(); }
  /// Chain padded on the left with 1s to at least `slots` entries.
  std::vector<Integer> invariants(std::size_t slots) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
  /// Canonical order: compare the 4-slot padded chains lexicographically.
  friend std::strong_ordering operator<=>(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

 private:
  explicit FiniteAbelianGroup(std::vector<Integer> chain) : factors_(std::move(chain)) {}
  std::vector<Integer> factors_;
  friend FiniteAbelianGroup assemble_from_primary(std::span<const HodgeVector> parts);
};

/// Sorted ℓ-exponents of G, zero-padded to `slots`. Throws
/// Errc::too_many_generators if G_ℓ needs more than `slots` generators.
HodgeVector primary_part(const FiniteAbelianGroup& G, const Integer& ell, std::size_t slots);

/// CRT recombination; at most one vector per prime, all with equal slots.
FiniteAbelianGroup assemble_from_primary(std::span<const HodgeVector> parts);

/// All 0 <= m_1 <= ... <= m_r with sum `total`, in lexicographic order.
std::vector<std::vector<int>> partitions_with_slots(int total, int slots);

FiniteAbelianGroup parse_group(std::string_view text);
/// "d1,d2,..." omitting 1s; the trivial group formats as "1".
std::string format_group(const FiniteAbelianGroup& G);

}  // namespace surfpts
