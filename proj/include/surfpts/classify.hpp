#pragma once

#include "surfpts/abgroup.hpp"
#include "surfpts/numeric.hpp"
#include "surfpts/polygon.hpp"
#include "surfpts/polynomial.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surfpts {

/// Per-prime valuation data for f_A = P (t + sigma s)^2 with P = t^2 - b t + q.
struct Case3Data {
  Integer b;
  int sigma = 1;
  Integer s;
  Integer ell;
  int m = 0;             // ord_ell(P(1))
  int m_q = 0;           // ord_ell(1 + sigma s)
  Valuation ord_b_minus_2;  // infinite when b = 2
};

Case3Data case3_data(const Case3& shape, const Integer& ell);

/// m_b = m_1 + m_3 - m_q.
int case3_mb(const Case3Data& data, const HodgeVector& hv);

/// Case 1: NP_ell(f_A(1-t)) lies on or above HP(G_ell).
bool decide_case1(const NewtonPolygon& np, const HodgeVector& hv);

/// A splitting of four exponents into two rank-2 parts.
struct PairSplit {
  std::array<int, 2> first;
  std::array<int, 2> second;
  friend bool operator==(const PairSplit&, const PairSplit&) = default;
};

/// Every splitting of hv into two pairs, each with total ord_ell(P(1)) and
/// Hodge polygon on or below NP_ell(P(1-t)). Distinct splittings only.
std::vector<PairSplit> case2_splittings(const IntPolynomial& P, const Integer& ell, const HodgeVector& hv);

/// Case 2 decision; returns a witness splitting when hv is admissible.
std::optional<PairSplit> decide_case2(const IntPolynomial& P, const Integer& ell, const HodgeVector& hv);

/// Case 3 conditions (a) 0 <= m_b <= ord(b-2), (b) min(m_b, m_q) >= m_1,
/// (c) min(m - m_b, m_q) >= m_2.
bool decide_case3(const Case3Data& data, const HodgeVector& hv);

/// The same three conditions stated on bare valuations.
bool case3_conditions(int m, int m_q, Valuation ord_b_minus_2, std::span<const int> hv);

/// The alternative list: 0 <= m_b <= ord(b-2), m_1 <= m_b, m_1 <= m_q,
/// m_2 <= m_q, m_2 <= m - m_b.
bool case3_inequality_list(int m, int m_q, Valuation ord_b_minus_2, std::span<const int> hv);

/// Case 4: G = (Z / |1 + sigma sqrt q|)^4.
bool decide_case4(const Integer& q, int sigma, const FiniteAbelianGroup& G);

/// Admissible 4-slot vectors at ell for the given shape, in lexicographic order.
std::vector<HodgeVector> admissible_vectors(const WeilPolynomial& f, const IsogenyShape& shape, const Integer& ell);

struct Decision {
  bool accepted = false;
  /// "ok", "order-mismatch", "too-many-generators" or "case-<k>-condition".
  std::string reason = "ok";
  std::optional<Integer> prime;
  std::optional<HodgeVector> vector;
};

Decision decide_group(const WeilPolynomial& f, const FiniteAbelianGroup& G);

struct PrimeDetail {
  std::vector<HodgeVector> admissible;
  /// Case 2 only: all admissible splittings for each admissible vector.
  std::vector<std::vector<PairSplit>> splittings;
};

struct ClassificationResult {
  IsogenyShape shape;
  Integer order;
  std::vector<FiniteAbelianGroup> groups;
  std::map<Integer, PrimeDetail> per_prime;
};

ClassificationResult enumerate_groups(const WeilPolynomial& f);

}  // namespace surfpts
