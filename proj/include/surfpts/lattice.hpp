#pragma once

#include "surfpts/abgroup.hpp"
#include "surfpts/classify.hpp"
#include "surfpts/matrix.hpp"
#include "surfpts/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace surfpts {

/// Companion matrix of a monic polynomial: first row holds the negated lower
/// coefficients, ones on the subdiagonal.
IntMatrix companion(const IntPolynomial& monic);

/// A semisimple integer matrix with characteristic polynomial f_A.
/// Case1 companion(f); Case2 companion(P)^2; Case3 companion(P) + (-sigma s) I_2;
/// Case4 (-sigma s) I_4.
IntMatrix frobenius_model(const IsogenyShape& shape, const WeilPolynomial& f);

/// Sorted ell-adic valuations of the Smith invariants of a nonsingular M.
HodgeVector cokernel_exponents(const IntMatrix& m, const Integer& ell);

/// A sublattice T with ell^N Z^n ⊆ T ⊆ Z^n, given by its column HNF.
struct StableLattice {
  IntMatrix basis;             // diagonal (ell^e_1, ..., ell^e_n)
  std::vector<int> exponents;  // e_i
};

/// F-stability of the lattice spanned by the columns of h:
/// adj(h) F h ≡ 0 (mod det h).
bool is_stable(const IntMatrix& h, const IntMatrix& F);

/// Every F-stable lattice between ell^depth Z^n and Z^n, each exactly once,
/// ordered by (diagonal exponents, entries).
std::vector<StableLattice> enumerate_stable_lattices(const IntMatrix& F, const Integer& ell, int depth);

/// Number of lattices between ell^depth Z^rank and Z^rank, i.e. the number
/// of subgroups of (Z/ell^depth)^rank.
Integer lattice_count_between(const Integer& ell, int depth, int rank);

struct OracleOptions {
  unsigned jobs = 1;
  /// Run at ell | q on the semisimple model (a lattice-level statement only).
  bool allow_char_prime = false;
  /// Reduce a trailing scalar block of F that is coprime mod ell to the rest.
  bool split_scalar_block = true;
};

struct OracleReport {
  Integer ell;
  int depth = 0;
  Integer lattice_count;
  std::map<std::vector<int>, StableLattice> realized;  // vector -> first witness lattice

  std::vector<HodgeVector> realized_vectors() const;
};

int default_depth(const WeilPolynomial& f, const Integer& ell);

/// Union of cokernel types of 1 - F over all F-stable lattices at the given
/// depth, for the Frobenius model of f. Throws Errc::unsupported_prime when
/// ell | q unless allowed.
OracleReport oracle_realized_set(const WeilPolynomial& f, const Integer& ell, int depth,
                                 const OracleOptions& options = {});

/// [[-(b-2), -P(1)/ell^n1], [ell^n1, 0]] for P = t^2 - b t + c: characteristic
/// polynomial P(1-t), ell-cokernel (n1, n2).
IntMatrix witness_case2(const IntPolynomial& P, const Integer& ell, std::array<int, 2> pair);

/// Matrix of 1 - F in the basis u_1..u_4 built from an admissible case-3 vector.
IntMatrix witness_case3(const Case3& shape, const Integer& ell, const HodgeVector& hv);

/// First lattice in enumeration order whose 1 - F cokernel has type hv.
/// Throws Errc::depth_exhausted when none exists at this depth.
StableLattice witness_search_case1(const WeilPolynomial& f, const Integer& ell, const HodgeVector& hv, int depth);

struct Witness {
  IntMatrix matrix;                     // integral matrix of 1 - F
  std::optional<StableLattice> lattice;  // set when found by search
};

/// Witness for any shape; checks char poly f_A(1-t) and cokernel type hv.
/// Throws Errc::invalid_argument for inadmissible hv.
Witness witness_for(const WeilPolynomial& f, const Integer& ell, const HodgeVector& hv, int depth);

}  // namespace surfpts
