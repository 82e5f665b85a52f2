#pragma once

#include <complex>
#include <vector>

#include "solvtm/exact/polynomial.hpp"
#include "solvtm/exact/sturm.hpp"

namespace solvtm::spectrum {

/// One distinct non-real eigenvalue with Im > 0.
struct BetaClass {
  std::complex<double> value;
  unsigned multiplicity = 1;
  /// Jordan block sizes, descending. Empty until Jordan data is attached.
  std::vector<unsigned> blocks;
};

struct SpectrumReport {
  double alpha = 0;
  exact::RationalInterval alpha_interval;
  /// Distinct classes in canonical order: descending |beta|, then real
  /// part, then imaginary part.
  std::vector<BetaClass> classes;
  /// The n eigenvalues beta_1..beta_n, classes expanded by multiplicity.
  std::vector<std::complex<double>> betas;
  double precision = 0;
};

/// All complex roots of a squarefree rational polynomial, each within eps
/// of a true root. Aberth iteration at 50 digits, certified by pairwise
/// disjoint Weierstrass inclusion disks of radius <= eps. Throws
/// PrecisionError otherwise. Real roots (counted exactly by Sturm) are
/// returned with zero imaginary part.
std::vector<std::complex<double>> squarefree_roots(const exact::RationalPolynomial& q,
                                                   double eps);

/// True when a sorts before b in the canonical beta order.
bool canonical_before(std::complex<double> a, std::complex<double> b);

/// Roots of an admissible characteristic polynomial: alpha and the beta
/// classes with exact multiplicities from the squarefree decomposition.
SpectrumReport isolate_roots(const exact::RationalPolynomial& p, double eps);

}  // namespace solvtm::spectrum
