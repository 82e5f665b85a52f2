#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solvtm/exact/polynomial.hpp"

namespace solvtm::classify {

/// P = f0 h with h = gcd(P, rev P) collecting the roots closed under
/// inversion.
struct SplitCheckResult {
  exact::RationalPolynomial h_candidate;
  exact::RationalPolynomial f0_candidate;
  bool split_ok = false;
  bool self_reciprocal_ok = false;
  bool integrality_ok = false;
  bool degree_ok = false;
  /// f0 has exactly one positive real root, counted with multiplicity, and it is not 1.
  bool f0_root_ok = false;
  std::vector<std::string> warnings;
};

/// Needs a monic integer P of odd degree 2n+1 >= 5 with P(0) = -1.
SplitCheckResult split_check(const exact::RationalPolynomial& p);

/// Complex roots of p on the unit circle, with multiplicity. Exact: the
/// palindromic part of each squarefree factor is rewritten in y = x + 1/x
/// and its roots in (-2, 2) are counted by Sturm.
std::size_t unit_circle_root_count(const exact::RationalPolynomial& p);

/// All but one conjugate pair of the 2n non-real roots of the
/// characteristic polynomial lie on the unit circle (the last pair then has
/// alpha |beta|^2 = 1 since det M = 1).
bool unit_circle_condition(const exact::RationalPolynomial& p);

}  // namespace solvtm::classify
