#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/exact/polynomial.hpp"
#include "solvtm/exact/sturm.hpp"

namespace solvtm::spectrum {

struct AdmissibilityReport {
  std::size_t size = 0;
  std::size_t n = 0;
  bool det_ok = false;
  std::size_t real_root_count = 0;
  exact::RationalInterval alpha_interval;
  bool alpha_positive = false;
  bool alpha_not_one = false;
  bool admissible = false;
  std::vector<std::string> reasons;
  /// Characteristic polynomial; empty when M is not square-odd-sized enough
  /// to be worth computing.
  exact::RationalPolynomial char_poly;
};

/// Exact admissibility certificate: odd size >= 5, det M = 1, exactly one
/// real eigenvalue, simple, positive and different from 1. Failures are
/// reported in `reasons`, never thrown.
AdmissibilityReport check_admissible(const exact::IntegerMatrix& m);

/// q(M) = 0 for the squarefree part q of the characteristic polynomial.
bool is_diagonalizable(const exact::IntegerMatrix& m);

}  // namespace solvtm::spectrum
