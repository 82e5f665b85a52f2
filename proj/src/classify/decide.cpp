#include "solvtm/classify/decide.hpp"

#include <cmath>
#include <sstream>

#include "solvtm/forms/dga.hpp"
#include "solvtm/forms/metric.hpp"

namespace solvtm::classify {
namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

std::string yes_no(bool b) { return b ? "holds" : "fails"; }

bool numeric_condition(const spectrum::SpectrumReport& s, double tol) {
  std::size_t off = 0;
  bool off_ok = false;
  for (const auto& b : s.betas) {
    const double lr = std::log(std::abs(b));
    if (std::abs(lr) <= tol) continue;
    ++off;
    off_ok = std::abs(std::log(s.alpha) + 2 * lr) <= tol;
  }
  return off == 1 && off_ok;
}

}  // namespace

InadmissibleError::InadmissibleError(spectrum::AdmissibilityReport report)
    : DomainError("matrix is not admissible: " + join(report.reasons)), report_(std::move(report)) {}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "Yes";
    case Verdict::No:
      return "No";
    case Verdict::UndeterminedByPaper:
      return "UndeterminedByPaper";
  }
  return "?";
}

Precomputed precompute(const exact::IntegerMatrix& m, const Options& options) {
  Precomputed d;
  d.admissibility = spectrum::check_admissible(m);
  if (!d.admissibility.admissible) throw InadmissibleError(d.admissibility);
  d.jordan = spectrum::jordan_structure(m, options.hints);
  d.spectrum = spectrum::analyze_spectrum(m, options.precision, d.jordan);
  d.delta = spectrum::compute_delta(d.spectrum);
  d.g = cohomology::geometric_multiplicities(m, options.max_k);
  return d;
}

MetricDecisions decide_metrics(const exact::IntegerMatrix& m, const Options& options) {
  auto capped = options;
  capped.max_k = std::min<std::size_t>(options.max_k.value_or(2), 2);
  return decide_metrics(precompute(m, capped), options);
}

MetricDecisions decide_metrics(const Precomputed& data, const Options& options) {
  const auto& p = data.admissibility.char_poly;
  const std::size_t n = data.admissibility.n;
  const double alpha = data.spectrum.alpha;
  MetricDecisions d;
  auto record = [&d](std::string decision, std::string name, std::string outcome) {
    d.criteria.push_back({std::move(decision), std::move(name), std::move(outcome)});
  };

  record("kaehler", "h^1 = 1 is odd", "No");
  record("balanced", "no invariant balanced metric exists for any admissible M", "No");
  record("lcK", "no lcK metric exists for any admissible M", "No");
  record("lcb", "the standard metric is lcb for every admissible M", "Yes");

  const auto standard = forms::standard_metric(n).to_form();
  if (const auto lee = forms::lcb_verify(standard, data.delta, alpha, options.tol)) {
    d.lee_coefficient = lee->lee_coefficient;
    std::ostringstream os;
    os.precision(12);
    os << "Lee form " << lee->lee_coefficient << " (eta + eta-bar), residual " << lee->residual;
    record("lcb", "d omega^n = theta ^ omega^n solved in the DGA", os.str());
  } else {
    record("lcb", "d omega^n = theta ^ omega^n solved in the DGA", "no solution within tol");
    d.warnings.push_back("lcb verification of the standard metric failed at tol");
  }

  auto& ev = d.evidence;
  ev.diagonalizable = data.jordan.diagonalizable();
  ev.unit_circle_roots = unit_circle_root_count(p);
  ev.exact = ev.diagonalizable && ev.unit_circle_roots == 2 * n - 2;
  record("pluriclosed", "M diagonalizable (exact ranks of q(M))", ev.diagonalizable ? "Yes" : "No");
  record("pluriclosed", "roots of P on the unit circle = 2n-2 (exact)",
         std::to_string(ev.unit_circle_roots) + " of " + std::to_string(2 * n - 2));

  if (data.g.g.size() > 2 && data.g.g[2]) {
    ev.g2 = *data.g.g[2];
    ev.g2_criterion = *ev.g2 == n - 1;
    record("pluriclosed", "g_2 = n-1", "g_2 = " + std::to_string(*ev.g2) + ", " + yes_no(*ev.g2_criterion));
  } else {
    record("pluriclosed", "g_2 = n-1", "not computed");
  }
  ev.split = split_check(p);
  record("pluriclosed", "P = f0 h with h self-reciprocal of degree 2n-2",
         ev.split.split_ok ? "f0 = " + ev.split.f0_candidate.to_string() + ", h = " + ev.split.h_candidate.to_string()
                           : "fails: " + join(ev.split.warnings));
  ev.numeric = numeric_condition(data.spectrum, options.tol);
  record("pluriclosed", "|beta_i| = 1 except one i0 with alpha |beta_i0|^2 = 1 (numeric)", yes_no(ev.numeric));
  if (ev.diagonalizable) {
    ev.dga_residual = forms::ddc(standard, data.delta, alpha).max_abs();
    ev.dga = ev.dga_residual <= options.tol;
    std::ostringstream os;
    os.precision(3);
    os << yes_no(*ev.dga) << " (|dd^c omega| = " << ev.dga_residual << ")";
    record("pluriclosed", "dd^c of the standard metric vanishes", os.str());
  } else {
    record("pluriclosed", "dd^c of the standard metric vanishes", "not applicable (M not diagonalizable)");
  }

  d.pluriclosed = ev.exact ? Verdict::Yes : Verdict::No;
  auto check = [&](std::optional<bool> v, const std::string& what) {
    if (v && *v != ev.exact)
      d.warnings.push_back(what + " disagrees with the exact pluriclosed verdict (" + to_string(d.pluriclosed) + ")");
  };
  check(ev.g2_criterion, "g_2 = n-1 criterion");
  if (ev.diagonalizable) {
    check(ev.split.split_ok, "split_check");
    check(ev.numeric, "numeric eigenvalue condition");
    check(ev.dga, "DGA check of the standard metric");
  }

  if (ev.diagonalizable) {
    d.astheno_kaehler = d.pluriclosed;
    record("astheno_kaehler", "equivalent to pluriclosed for diagonalizable M", to_string(d.astheno_kaehler));
  } else {
    d.astheno_kaehler = Verdict::UndeterminedByPaper;
    record("astheno_kaehler", "no criterion for non-diagonalizable M", to_string(d.astheno_kaehler));
  }
  return d;
}

}  // namespace solvtm::classify
