#include "solvtm/classify/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "solvtm/forms/dga.hpp"
#include "solvtm/forms/metric.hpp"
#include "solvtm/lie/structure.hpp"

namespace solvtm::classify {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

ordered_json optional_table(const std::vector<std::optional<std::size_t>>& v) {
  auto out = ordered_json::array();
  for (const auto& x : v) out.push_back(x ? ordered_json(*x) : ordered_json(nullptr));
  return out;
}

std::string table_text(const std::vector<std::optional<std::size_t>>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + (v[i] ? std::to_string(*v[i]) : std::string("?"));
  return out + ")";
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string complex_text(std::complex<double> z) {
  return fmt(round12(z.real())) + (z.imag() < 0 ? " - " : " + ") + fmt(round12(std::abs(z.imag()))) + "i";
}

void cross_checks(ClassificationReport& r) {
  if (r.betti) {
    const auto& h = r.betti->h;
    if (h.size() > 1 && h[1] && *h[1] != 1) r.warnings.push_back("h^1 = " + std::to_string(*h[1]) + ", expected 1");
    if (r.betti->complete()) {
      long euler = 0;
      for (std::size_t k = 0; k < h.size(); ++k) euler += (k % 2 ? -1L : 1L) * static_cast<long>(*h[k]);
      if (euler != 0) r.warnings.push_back("Euler characteristic " + std::to_string(euler) + " != 0");
      for (std::size_t k = 0; k < h.size(); ++k)
        if (*h[k] != *h[h.size() - 1 - k]) r.warnings.push_back("Poincare duality fails in degree " + std::to_string(k));
    }
  }
  if (r.lie) {
    if (r.lie->jacobi_residual > 1e-10) r.warnings.push_back("Jacobi residual " + fmt(r.lie->jacobi_residual));
    if (std::abs(r.lie->trace_adA) > 1e-8) r.warnings.push_back("trace ad_A = " + fmt(r.lie->trace_adA));
    if (!r.lie->solvable || r.lie->nilpotent) r.warnings.push_back("Lie algebra is not solvable and non-nilpotent");
  }
  if (r.dga) {
    if (r.dga->dd_residual > 1e-10) r.warnings.push_back("d o d residual " + fmt(r.dga->dd_residual));
    if (!r.dga->standard_positive) r.warnings.push_back("standard metric failed the positivity check");
  }
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x) || x == 0) return x;
  return std::stod(fmt(x));
}

ClassificationReport full_report(const exact::IntegerMatrix& m, const Options& options) {
  ClassificationReport r;
  auto t0 = Clock::now();
  r.admissibility = spectrum::check_admissible(m);
  r.timing["admissibility"] = seconds_since(t0);
  if (!r.admissibility.admissible) return r;

  Precomputed data;
  data.admissibility = r.admissibility;
  t0 = Clock::now();
  data.jordan = spectrum::jordan_structure(m, options.hints);
  data.spectrum = spectrum::analyze_spectrum(m, options.precision, data.jordan);
  data.delta = spectrum::compute_delta(data.spectrum);
  r.timing["spectrum"] = seconds_since(t0);
  r.jordan = data.jordan;
  r.spectrum = data.spectrum;
  r.diagonalizable = data.jordan.diagonalizable();
  if (*r.diagonalizable != spectrum::is_diagonalizable(m))
    r.warnings.push_back("Jordan partitions disagree with the squarefree-part test for diagonalizability");

  t0 = Clock::now();
  data.g = cohomology::geometric_multiplicities(m, options.max_k);
  r.geometric_multiplicities = data.g;
  r.betti = cohomology::betti_numbers(data.g);
  if (*r.diagonalizable && data.g.complete()) {
    try {
      (void)cohomology::invariant_basis(m, data.spectrum, options.tol, data.g);
    } catch (const DomainError& e) {
      r.warnings.push_back(std::string("invariant cohomology basis: ") + e.what());
    }
  }
  r.timing["cohomology"] = seconds_since(t0);

  t0 = Clock::now();
  const double alpha = data.spectrum.alpha;
  const auto tensor = lie::structure_constants(data.delta, alpha);
  const auto profile = lie::solvability_profile(tensor);
  r.lie = LieSummary{lie::jacobi_residual(tensor), profile.solvable, profile.nilpotent, profile.trace_adA};
  r.timing["lie"] = seconds_since(t0);

  t0 = Clock::now();
  const std::size_t n = r.admissibility.n;
  DgaSummary dga;
  for (std::size_t g = 0; g < 2 * n + 2; ++g) {
    const auto dd = forms::differential(forms::differential(forms::InvariantForm::generator(n, g), data.delta, alpha),
                                        data.delta, alpha);
    dga.dd_residual = std::max(dga.dd_residual, dd.max_abs());
  }
  const auto standard = forms::standard_metric(n).to_form();
  dga.ddc_standard = forms::ddc(standard, data.delta, alpha).max_abs();
  dga.astheno_standard = forms::astheno_residual_dga(standard, data.delta, alpha);
  if (const auto lee = forms::lcb_verify(standard, data.delta, alpha, options.tol)) dga.lee_residual = lee->residual;
  dga.standard_positive = forms::positivity_check(standard, options.tol);
  r.dga = dga;
  r.timing["forms"] = seconds_since(t0);

  t0 = Clock::now();
  r.metrics = decide_metrics(data, options);
  for (const auto& w : r.metrics->warnings) r.warnings.push_back(w);
  r.timing["metrics"] = seconds_since(t0);

  cross_checks(r);
  return r;
}

ordered_json admissibility_json(const spectrum::AdmissibilityReport& a) {
  ordered_json j;
  j["admissible"] = a.admissible;
  j["size"] = a.size;
  j["n"] = a.n;
  j["det_ok"] = a.det_ok;
  j["real_root_count"] = a.real_root_count;
  j["alpha_positive"] = a.alpha_positive;
  j["alpha_not_one"] = a.alpha_not_one;
  j["char_poly"] = a.char_poly.is_zero() ? ordered_json(nullptr) : ordered_json(a.char_poly.to_string());
  j["reasons"] = a.reasons;
  return j;
}

ordered_json spectrum_json(const spectrum::SpectrumReport& s, const spectrum::JordanData* jordan) {
  ordered_json j;
  j["alpha"] = round12(s.alpha);
  auto betas = ordered_json::array();
  for (const auto& b : s.betas) betas.push_back({{"re", round12(b.real())}, {"im", round12(b.imag())}});
  j["betas"] = betas;
  auto jd = ordered_json::array();
  if (jordan)
    for (const auto& f : jordan->factors)
      jd.push_back({{"factor", f.factor.to_string()}, {"multiplicity", f.multiplicity}, {"blocks", f.blocks}});
  j["jordan"] = jd;
  return j;
}

ordered_json betti_json(const cohomology::BettiTable& b) { return optional_table(b.h); }
ordered_json multiplicities_json(const cohomology::GeomMultTable& g) { return optional_table(g.g); }

ordered_json metrics_json(const MetricDecisions& d) {
  const auto& ev = d.evidence;
  ordered_json j;
  j["kaehler"] = to_string(d.kaehler);
  j["balanced"] = to_string(d.balanced);
  j["lcK"] = to_string(d.lcK);
  j["lcb"] = {{"verdict", to_string(d.lcb)},
              {"lee_coefficient", d.lee_coefficient ? ordered_json(round12(*d.lee_coefficient)) : ordered_json(nullptr)}};
  ordered_json split = {{"ok", ev.split.split_ok},
                        {"f0", ev.split.f0_candidate.to_string()},
                        {"h", ev.split.h_candidate.to_string()},
                        {"self_reciprocal", ev.split.self_reciprocal_ok},
                        {"integral", ev.split.integrality_ok},
                        {"degree", ev.split.degree_ok},
                        {"f0_root", ev.split.f0_root_ok}};
  ordered_json evidence;
  evidence["exact"] = {{"holds", ev.exact},
                       {"diagonalizable", ev.diagonalizable},
                       {"unit_circle_roots", ev.unit_circle_roots}};
  evidence["g2"] = {{"value", ev.g2 ? ordered_json(*ev.g2) : ordered_json(nullptr)},
                    {"holds", ev.g2_criterion ? ordered_json(*ev.g2_criterion) : ordered_json(nullptr)}};
  evidence["split"] = split;
  evidence["numeric"] = ev.numeric;
  evidence["dga"] = {{"holds", ev.dga ? ordered_json(*ev.dga) : ordered_json(nullptr)},
                     {"residual", round12(ev.dga_residual)}};
  j["pluriclosed"] = {{"verdict", to_string(d.pluriclosed)}, {"evidence", evidence}};
  j["astheno"] = {{"verdict", to_string(d.astheno_kaehler)}};
  auto criteria = ordered_json::array();
  for (const auto& c : d.criteria)
    criteria.push_back({{"decision", c.decision}, {"criterion", c.name}, {"outcome", c.outcome}});
  j["criteria"] = criteria;
  return j;
}

ordered_json lie_json(const LieSummary& l) {
  return {{"jacobi_residual", round12(l.jacobi_residual)},
          {"solvable", l.solvable},
          {"nilpotent", l.nilpotent},
          {"trace_adA", round12(l.trace_adA)}};
}

ordered_json report_json(const ClassificationReport& r, bool with_timing) {
  ordered_json j;
  j["admissibility"] = admissibility_json(r.admissibility);
  if (r.spectrum) j["spectrum"] = spectrum_json(*r.spectrum, r.jordan ? &*r.jordan : nullptr);
  if (r.diagonalizable) j["diagonalizable"] = *r.diagonalizable;
  if (r.betti) j["betti"] = betti_json(*r.betti);
  if (r.geometric_multiplicities) j["geometric_multiplicities"] = multiplicities_json(*r.geometric_multiplicities);
  if (r.metrics) j["metrics"] = metrics_json(*r.metrics);
  if (r.lie) j["lie"] = lie_json(*r.lie);
  if (r.dga)
    j["dga"] = {{"dd_residual", round12(r.dga->dd_residual)},
                {"ddc_standard", round12(r.dga->ddc_standard)},
                {"astheno_standard", round12(r.dga->astheno_standard)},
                {"lee_residual", round12(r.dga->lee_residual)},
                {"standard_positive", r.dga->standard_positive}};
  j["warnings"] = r.warnings;
  if (with_timing) {
    ordered_json t;
    for (const auto& [stage, s] : r.timing) t[stage] = round12(s);
    j["timing"] = t;
  }
  return j;
}

std::string report_text(const ClassificationReport& r, bool with_timing) {
  std::ostringstream os;
  const auto& a = r.admissibility;
  os << "matrix size " << a.size << ", n = " << a.n << "\n";
  os << "admissible: " << (a.admissible ? "yes" : "no") << "\n";
  for (const auto& why : a.reasons) os << "  " << why << "\n";
  if (!a.char_poly.is_zero()) os << "char poly: " << a.char_poly.to_string() << "\n";
  if (r.spectrum) {
    os << "alpha: " << fmt(round12(r.spectrum->alpha)) << "\n";
    for (std::size_t i = 0; i < r.spectrum->betas.size(); ++i)
      os << "beta_" << i + 1 << ": " << complex_text(r.spectrum->betas[i]) << "\n";
  }
  if (r.jordan)
    for (const auto& f : r.jordan->factors) {
      os << "jordan: " << f.factor.to_string() << " multiplicity " << f.multiplicity << " blocks";
      for (unsigned b : f.blocks) os << " " << b;
      os << "\n";
    }
  if (r.diagonalizable) os << "diagonalizable: " << (*r.diagonalizable ? "yes" : "no") << "\n";
  if (r.geometric_multiplicities) os << "geometric multiplicities: " << table_text(r.geometric_multiplicities->g) << "\n";
  if (r.betti) os << "betti: " << table_text(r.betti->h) << "\n";
  if (r.metrics) {
    const auto& d = *r.metrics;
    os << "kaehler: " << to_string(d.kaehler) << "\n";
    os << "balanced: " << to_string(d.balanced) << "\n";
    os << "lcK: " << to_string(d.lcK) << "\n";
    os << "lcb: " << to_string(d.lcb);
    if (d.lee_coefficient) os << " (Lee coefficient " << fmt(round12(*d.lee_coefficient)) << ")";
    os << "\n";
    os << "pluriclosed: " << to_string(d.pluriclosed) << "\n";
    os << "astheno-kaehler: " << to_string(d.astheno_kaehler) << "\n";
    for (const auto& c : d.criteria) os << "  [" << c.decision << "] " << c.name << ": " << c.outcome << "\n";
  }
  if (r.lie)
    os << "lie: jacobi residual " << fmt(round12(r.lie->jacobi_residual)) << ", solvable "
       << (r.lie->solvable ? "yes" : "no") << ", nilpotent " << (r.lie->nilpotent ? "yes" : "no") << ", trace ad_A "
       << fmt(round12(r.lie->trace_adA)) << "\n";
  if (r.dga)
    os << "dga: d o d " << fmt(round12(r.dga->dd_residual)) << ", dd^c standard " << fmt(round12(r.dga->ddc_standard))
       << ", astheno standard " << fmt(round12(r.dga->astheno_standard)) << ", standard metric positive "
       << (r.dga->standard_positive ? "yes" : "no") << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  if (with_timing)
    for (const auto& [stage, s] : r.timing) os << "time " << stage << ": " << fmt(s) << " s\n";
  return os.str();
}

}  // namespace solvtm::classify
