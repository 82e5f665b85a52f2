#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "solvtm/classify/decide.hpp"
#include "solvtm/cohomology/betti.hpp"
#include "solvtm/spectrum/admissibility.hpp"
#include "solvtm/spectrum/jordan.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace solvtm::classify {

struct LieSummary {
  double jacobi_residual = 0;
  bool solvable = false;
  bool nilpotent = false;
  double trace_adA = 0;
};

/// Verifications run on the standard metric i(eta^eta-bar + sum theta_j^theta_j-bar).
struct DgaSummary {
  /// max |d d g| over the generators.
  double dd_residual = 0;
  double ddc_standard = 0;
  double astheno_standard = 0;
  double lee_residual = 0;
  bool standard_positive = false;
};

struct ClassificationReport {
  spectrum::AdmissibilityReport admissibility;
  std::optional<spectrum::SpectrumReport> spectrum;
  std::optional<spectrum::JordanData> jordan;
  std::optional<bool> diagonalizable;
  std::optional<cohomology::GeomMultTable> geometric_multiplicities;
  std::optional<cohomology::BettiTable> betti;
  std::optional<MetricDecisions> metrics;
  std::optional<LieSummary> lie;
  std::optional<DgaSummary> dga;
  std::vector<std::string> warnings;
  /// Seconds per stage.
  std::map<std::string, double> timing;
};

/// Inadmissible input gives a report with only the admissibility section.
ClassificationReport full_report(const exact::IntegerMatrix& m, const Options& options = {});

/// Rounds to 12 significant digits.
double round12(double x);

nlohmann::ordered_json admissibility_json(const spectrum::AdmissibilityReport& a);
nlohmann::ordered_json spectrum_json(const spectrum::SpectrumReport& s, const spectrum::JordanData* jordan);
nlohmann::ordered_json betti_json(const cohomology::BettiTable& b);
nlohmann::ordered_json multiplicities_json(const cohomology::GeomMultTable& g);
nlohmann::ordered_json metrics_json(const MetricDecisions& d);
nlohmann::ordered_json lie_json(const LieSummary& l);
nlohmann::ordered_json report_json(const ClassificationReport& r, bool with_timing = false);
std::string report_text(const ClassificationReport& r, bool with_timing = false);

}  // namespace solvtm::classify
