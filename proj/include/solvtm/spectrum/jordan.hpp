#pragma once

#include <vector>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/exact/polynomial.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace solvtm::spectrum {

/// Every root of `factor` is an eigenvalue of algebraic multiplicity
/// `multiplicity` with Jordan blocks `blocks` (descending).
struct JordanFactor {
  exact::RationalPolynomial factor;
  unsigned multiplicity = 0;
  std::vector<unsigned> blocks;
};

struct JordanData {
  std::vector<JordanFactor> factors;

  bool diagonalizable() const;
};

/// Jordan partitions from exact ranks of q(M)^j. The squarefree
/// decomposition of the characteristic polynomial is refined by gcds with
/// the squarefree decomposition of the minimal polynomial and with any
/// caller-supplied factors. Throws DomainError when a factor's roots turn
/// out to have different partitions (supply a finer factorization).
JordanData jordan_structure(const exact::IntegerMatrix& m,
                            const std::vector<exact::RationalPolynomial>& hints = {});

/// Isolates alpha and the betas of an admissible M and attaches the Jordan
/// partitions to each beta class.
SpectrumReport analyze_spectrum(const exact::IntegerMatrix& m, double eps,
                                const JordanData& jordan);
SpectrumReport analyze_spectrum(const exact::IntegerMatrix& m, double eps);

}  // namespace solvtm::spectrum
