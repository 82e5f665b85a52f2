#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvtm/exact/polynomial.hpp"
#include "solvtm/spectrum/admissibility.hpp"

namespace solvtm::classify {

enum class FactorRole { Untagged, F0, H };

struct FactorSpec {
  exact::RationalPolynomial poly;
  unsigned multiplicity = 1;
  FactorRole role = FactorRole::Untagged;
};

struct GenerationResult {
  exact::IntegerMatrix matrix;
  spectrum::AdmissibilityReport admissibility;
  /// Degree 3, f0(0) = -1, a single real root which is positive and not 1.
  /// Set only when some factor is tagged F0.
  std::optional<bool> f0_hypotheses;
  /// No real roots and self-reciprocal. Set only when some factor is tagged H.
  std::optional<bool> h_hypotheses;
  std::vector<std::string> notes;
};

/// Block-diagonal matrix of companion blocks, one per factor and
/// multiplicity. Throws DomainError for a non-squarefree or non-monic
/// integer factor and InadmissibleError when the product is not admissible.
GenerationResult generate_from_factors(const std::vector<FactorSpec>& factors);

}  // namespace solvtm::classify
