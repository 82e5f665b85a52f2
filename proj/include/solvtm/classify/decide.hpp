#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvtm/classify/split.hpp"
#include "solvtm/cohomology/betti.hpp"
#include "solvtm/error.hpp"
#include "solvtm/spectrum/admissibility.hpp"
#include "solvtm/spectrum/delta.hpp"
#include "solvtm/spectrum/jordan.hpp"

namespace solvtm::classify {

class InadmissibleError : public DomainError {
 public:
  explicit InadmissibleError(spectrum::AdmissibilityReport report);
  const spectrum::AdmissibilityReport& report() const noexcept { return report_; }

 private:
  spectrum::AdmissibilityReport report_;
};

enum class Verdict { Yes, No, UndeterminedByPaper };
std::string to_string(Verdict v);

struct Options {
  double precision = 1e-12;
  double tol = 1e-9;
  std::optional<std::size_t> max_k;
  /// Extra factors of the characteristic polynomial for the Jordan split.
  std::vector<exact::RationalPolynomial> hints;
};

/// One criterion evaluated for one decision.
struct Criterion {
  std::string decision;
  std::string name;
  std::string outcome;
};

struct PluriclosedEvidence {
  bool diagonalizable = false;
  std::size_t unit_circle_roots = 0;
  /// Diagonalizable and 2n-2 roots on the unit circle. Decides the verdict.
  bool exact = false;
  std::optional<std::size_t> g2;
  /// g2 = n-1; empty when g2 was not computed.
  std::optional<bool> g2_criterion;
  SplitCheckResult split;
  /// |beta_i| = 1 within tol except one i0 with alpha |beta_i0|^2 = 1.
  bool numeric = false;
  /// dd^c of the standard metric vanishes; diagonalizable M only.
  std::optional<bool> dga;
  double dga_residual = 0;
};

struct MetricDecisions {
  Verdict kaehler = Verdict::No;
  Verdict balanced = Verdict::No;
  Verdict lcK = Verdict::No;
  Verdict lcb = Verdict::Yes;
  std::optional<double> lee_coefficient;
  Verdict pluriclosed = Verdict::No;
  Verdict astheno_kaehler = Verdict::No;
  PluriclosedEvidence evidence;
  std::vector<Criterion> criteria;
  std::vector<std::string> warnings;
};

/// Everything decide_metrics needs that the report computes anyway.
struct Precomputed {
  spectrum::AdmissibilityReport admissibility;
  spectrum::JordanData jordan;
  spectrum::SpectrumReport spectrum;
  spectrum::DeltaMatrix delta;
  cohomology::GeomMultTable g;
};

/// Admissibility, Jordan data, spectrum, Delta and g (capped by max_k).
/// Throws InadmissibleError.
Precomputed precompute(const exact::IntegerMatrix& m, const Options& options);

MetricDecisions decide_metrics(const exact::IntegerMatrix& m, const Options& options = {});
MetricDecisions decide_metrics(const Precomputed& data, const Options& options);

}  // namespace solvtm::classify
