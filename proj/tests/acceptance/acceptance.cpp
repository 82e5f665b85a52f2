// Acceptance suite: one PASS/FAIL line per criterion 1-10.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "solvtm/classify/decide.hpp"
#include "solvtm/classify/report.hpp"
#include "solvtm/classify/split.hpp"
#include "solvtm/cohomology/betti.hpp"
#include "solvtm/forms/dga.hpp"
#include "solvtm/forms/metric.hpp"
#include "solvtm/lie/group.hpp"
#include "solvtm/lie/structure.hpp"
#include "support/group_oracle.hpp"
#include "support/oracles.hpp"

using namespace solvtm;
using Cd = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      lines.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { lines.push_back(what); }
};

struct Prepared {
  oracle::SuiteMatrix sm;
  spectrum::SpectrumReport spec;
  spectrum::DeltaMatrix delta;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string table(const std::vector<std::optional<std::size_t>>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + (v[i] ? std::to_string(*v[i]) : std::string("?"));
  return s + ")";
}

std::string factors_text(const oracle::SuiteMatrix& sm) {
  std::string s;
  for (const auto& f : sm.factors) {
    std::vector<exact::Rational> c(f.begin(), f.end());
    s += "(" + exact::RationalPolynomial(c).to_string() + ")";
  }
  return s;
}

forms::MetricCoefficients random_metric(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g;
  const auto m = static_cast<Eigen::Index>(n);
  forms::MetricCoefficients mc;
  Eigen::MatrixXcd x(m, m);
  mc.c = Eigen::VectorXcd(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    mc.c(i) = {g(rng), g(rng)};
    for (Eigen::Index j = 0; j < m; ++j) x(i, j) = {g(rng), g(rng)};
  }
  mc.a = 0.5 * (x - x.adjoint());
  mc.b = {0, g(rng)};
  return mc;
}

forms::InvariantForm random_form(std::mt19937& rng, std::size_t n, int p, int q) {
  std::normal_distribution<double> g;
  forms::InvariantForm f(n);
  for (forms::InvariantForm::Word w = 0; w < (forms::InvariantForm::Word{1} << (2 * n + 2)); ++w)
    if (f.bidegree(w) == std::pair{p, q}) f.add(w, {g(rng), g(rng)});
  return f;
}

bool same_decisions(const classify::MetricDecisions& a, const classify::MetricDecisions& b) {
  return a.kaehler == b.kaehler && a.balanced == b.balanced && a.lcK == b.lcK && a.lcb == b.lcb &&
         a.pluriclosed == b.pluriclosed && a.astheno_kaehler == b.astheno_kaehler &&
         a.evidence.diagonalizable == b.evidence.diagonalizable &&
         a.evidence.unit_circle_roots == b.evidence.unit_circle_roots && a.evidence.g2 == b.evidence.g2 &&
         a.evidence.split.split_ok == b.evidence.split.split_ok;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto m = oracle::example_matrix();
  const auto r = classify::full_report(m);
  const auto split = classify::split_check(r.admissibility.char_poly);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(r.admissibility.admissible, "admissible");
  o.require(r.diagonalizable == true, "diagonalizable");
  o.require(r.betti && r.betti->h[1] == 1u, "h^1 = 1");
  const auto h2 = r.betti ? r.betti->h[2] : std::nullopt;
  o.require(h2 == 2u, "h^2 = 2 (computed h^2 = " + (h2 ? std::to_string(*h2) : std::string("?")) + ")");
  o.require(r.metrics && r.metrics->pluriclosed == classify::Verdict::Yes, "pluriclosed = Yes");
  o.require(r.metrics && r.metrics->astheno_kaehler == classify::Verdict::Yes, "astheno-Kaehler = Yes");
  const exact::RationalPolynomial f0{-1, 1, 0, 1}, h{1, 0, 2, 0, 1};
  o.require(split.split_ok && split.f0_candidate == f0 && split.h_candidate == h, "split_check recovers f0 and h");
  o.require(secs < 5, "runtime " + num(secs) + " s < 5 s");
  o.note("betti " + (r.betti ? table(r.betti->h) : "?") + ", f0 = " + split.f0_candidate.to_string() +
         ", h = " + split.h_candidate.to_string() + ", " + num(secs) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto r = classify::full_report(oracle::generic_matrix());
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const std::vector<std::optional<std::size_t>> expected = {1, 1, 0, 0, 0, 1, 1};
  o.require(r.betti && r.betti->h == expected, "Betti table (1,1,0,0,0,1,1)");
  o.require(r.metrics && r.metrics->pluriclosed == classify::Verdict::No, "pluriclosed = No");
  o.require(r.metrics && r.metrics->astheno_kaehler == classify::Verdict::No, "astheno = No");
  o.require(r.metrics && r.metrics->lcb == classify::Verdict::Yes, "lcb = Yes");
  const double alpha = r.spectrum ? r.spectrum->alpha : 0;
  o.require(std::abs(alpha - 1.1673040) < 5e-8, "alpha = 1.1673040 (got " + std::to_string(alpha) + ")");
  const bool lee_ok = r.metrics && r.metrics->lee_coefficient &&
                      std::abs(*r.metrics->lee_coefficient - std::log(alpha)) <= 1e-8;
  o.require(lee_ok, "Lee coefficient = log alpha within 1e-8");
  o.require(secs < 2, "runtime " + num(secs) + " s < 2 s");
  o.note("alpha " + std::to_string(alpha) + ", " + num(secs) + " s");
  return o;
}

Outcome criteria3and4(const std::vector<Prepared>& suite, Outcome& c4) {
  Outcome o;
  std::size_t h1_fail = 0, euler_fail = 0, duality_fail = 0;
  for (const auto& p : suite) {
    const auto b = cohomology::betti_numbers(p.sm.m);
    if (!b.complete() || b.h[1] != 1u) {
      ++h1_fail;
      o.require(false, "h^1 = " + table(b.h) + " for " + factors_text(p.sm));
    }
    long euler = 0;
    bool dual = b.complete();
    for (std::size_t k = 0; dual && k < b.h.size(); ++k) {
      euler += (k % 2 ? -1L : 1L) * static_cast<long>(*b.h[k]);
      dual = *b.h[k] == *b.h[b.h.size() - 1 - k];
    }
    if (euler != 0) {
      ++euler_fail;
      c4.require(false, "Euler characteristic " + std::to_string(euler) + " for " + factors_text(p.sm));
    }
    if (!dual) {
      ++duality_fail;
      c4.require(false, "duality fails for " + factors_text(p.sm) + ": " + table(b.h));
    }
  }
  o.note(std::to_string(suite.size()) + " matrices, " + std::to_string(h1_fail) + " failures");
  c4.note(std::to_string(suite.size()) + " matrices, " + std::to_string(euler_fail) + " Euler and " +
          std::to_string(duality_fail) + " duality failures");
  return o;
}

Outcome criterion5(const std::vector<Prepared>& suite) {
  Outcome o;
  std::mt19937 rng(5005);
  double jac = 0, dd = 0, tr = 0;
  for (const auto& p : suite) {
    const auto t = lie::structure_constants(p.delta, p.spec.alpha);
    jac = std::max(jac, lie::jacobi_residual(t));
    tr = std::max(tr, std::abs(lie::solvability_profile(t).trace_adA));
    const std::size_t n = static_cast<std::size_t>(p.delta.rows());
    for (std::size_t g = 0; g < 2 * n + 2; ++g) {
      const auto f = forms::InvariantForm::generator(n, g);
      dd = std::max(dd, forms::differential(forms::differential(f, p.delta, p.spec.alpha), p.delta, p.spec.alpha).max_abs());
    }
    for (int deg_p = 0; deg_p <= 2; ++deg_p)
      for (int deg_q = 0; deg_q <= 2; ++deg_q) {
        const auto f = random_form(rng, n, deg_p, deg_q);
        dd = std::max(dd, forms::differential(forms::differential(f, p.delta, p.spec.alpha), p.delta, p.spec.alpha).max_abs());
      }
  }
  o.require(jac <= 1e-10, "max Jacobi residual " + num(jac) + " <= 1e-10");
  o.require(dd <= 1e-10, "max d o d coefficient " + num(dd) + " <= 1e-10");
  o.require(tr <= 1e-8, "max |trace ad_A| " + num(tr) + " <= 1e-8");
  o.note("max Jacobi " + num(jac) + ", max d o d " + num(dd) + ", max |trace ad_A| " + num(tr));
  return o;
}

Outcome criterion6(const std::vector<Prepared>& suite) {
  Outcome o;
  std::mt19937 rng(6006);
  std::size_t cases = 0, agree = 0, trues = 0;
  std::vector<std::pair<spectrum::SpectrumReport, spectrum::DeltaMatrix>> spectra;
  for (const auto& p : suite) spectra.emplace_back(p.spec, p.delta);
  for (const auto& m : {oracle::example_matrix(), oracle::jordan_witness_matrix()}) {
    const auto s = spectrum::analyze_spectrum(m, 1e-12);
    spectra.emplace_back(s, spectrum::compute_delta(s));
  }
  for (const auto& [s, delta] : spectra) {
    const std::size_t n = static_cast<std::size_t>(delta.rows());
    for (int trial = 0; trial < 22; ++trial) {
      auto mc = random_metric(rng, n);
      if (trial == 20) mc.a.setZero();
      if (trial == 21) mc = forms::standard_metric(n);
      const double p = forms::pluriclosed_residual(mc.a, delta, s.alpha).cwiseAbs().maxCoeff();
      const bool dga = forms::ddc_check(mc.to_form(), delta, s.alpha, 1e-9);
      ++cases;
      if (dga == (p <= 1e-9))
        ++agree;
      else
        o.require(false, "ddc_check " + std::string(dga ? "true" : "false") + " but |P| = " + num(p));
      if (dga) ++trues;
    }
  }
  o.note(std::to_string(agree) + "/" + std::to_string(cases) + " agree (" + std::to_string(trues) + " pluriclosed)");
  return o;
}

Outcome criterion7(const std::vector<Prepared>& suite) {
  Outcome o;
  std::size_t diag = 0, disagree = 0, exact_mismatch = 0;
  for (const auto& p : suite) {
    const auto d = classify::decide_metrics(p.sm.m);
    if (!d.evidence.diagonalizable) continue;
    ++diag;
    const bool g2 = d.evidence.g2_criterion.value_or(false);
    const bool split = d.evidence.split.split_ok;
    const bool numeric = d.evidence.numeric;
    if (!(g2 == split && split == numeric)) {
      ++disagree;
      if (disagree <= 5)
        o.require(false, factors_text(p.sm) + ": g2 = " + std::to_string(d.evidence.g2.value_or(0)) + " (" +
                             (g2 ? "yes" : "no") + "), split " + (split ? "yes" : "no") + ", numeric " +
                             (numeric ? "yes" : "no"));
      else
        o.pass = false;
    }
    if (d.evidence.exact != numeric || (d.evidence.dga && *d.evidence.dga != d.evidence.exact)) ++exact_mismatch;
  }
  o.note(std::to_string(diag) + " diagonalizable, " + std::to_string(disagree) + " three-way disagreements");
  o.note("unit-circle count vs numeric and DGA checks: " + std::to_string(exact_mismatch) + " mismatches");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto m = oracle::jordan_witness_matrix();
  const auto d = classify::decide_metrics(m);
  o.require(!d.evidence.diagonalizable, "witness is not diagonalizable");
  o.require(d.pluriclosed == classify::Verdict::No, "pluriclosed = No");
  const auto s = spectrum::analyze_spectrum(m, 1e-12);
  const auto delta = spectrum::compute_delta(s);
  std::mt19937 rng(8008);
  double worst = 0, smallest = 1e300;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_metric(rng, 3).a;
    const Cd p23 = forms::pluriclosed_residual(a, delta, s.alpha)(1, 2);
    const Cd analytic = a(1, 1) * delta(1, 2) * std::log(s.alpha);
    worst = std::max(worst, std::abs(p23 - analytic));
    smallest = std::min(smallest, std::abs(p23));
  }
  o.require(worst <= 1e-9, "P_23 - a_22 Delta_23 log alpha = " + num(worst) + " <= 1e-9");
  o.require(smallest > 1e-6, "P_23 nonzero (min " + num(smallest) + ")");
  o.note("max deviation " + num(worst) + ", min |P_23| " + num(smallest));
  return o;
}

Outcome criterion9(const std::vector<Prepared>& suite) {
  Outcome o;
  std::mt19937 rng(9009);
  const auto& m = suite.back().sm.m;
  const std::size_t dim = m.dim();
  std::size_t assoc = 0, conj = 0;
  const lie::LatticeElement g0{1, std::vector<exact::Integer>(dim, 0)};
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = oracle::random_lattice(rng, dim), b = oracle::random_lattice(rng, dim),
               c = oracle::random_lattice(rng, dim);
    if (lie::lattice_mul(lie::lattice_mul(a, b, m), c, m) == lie::lattice_mul(a, lie::lattice_mul(b, c, m), m)) ++assoc;
    const lie::LatticeElement pure{0, b.w};
    const auto lhs = lie::lattice_mul(lie::lattice_mul(g0, pure, m), lie::lattice_inverse(g0, m), m);
    if (lhs == lie::LatticeElement{0, m * std::span<const exact::Integer>(b.w)}) ++conj;
  }
  const auto w = oracle::jordan_witness_matrix();
  const auto s = spectrum::analyze_spectrum(w, 1e-12);
  const auto delta = spectrum::compute_delta(s);
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = oracle::random_element(rng, 3), b = oracle::random_element(rng, 3);
    const Eigen::MatrixXcd expected = oracle::group_matrix(a, s) * oracle::group_matrix(b, s);
    worst = std::max(worst, (oracle::group_matrix(lie::group_mul(a, b, delta, s.alpha), s) - expected).cwiseAbs().maxCoeff());
  }
  o.require(assoc == 500, std::to_string(assoc) + "/500 lattice triples associate");
  o.require(worst <= 1e-9, "group law vs block matrices " + num(worst) + " <= 1e-9");
  o.require(conj == 500, std::to_string(conj) + "/500 conjugation identities");
  o.note("500 triples, 500 pairs (max deviation " + num(worst) + "), 500 conjugations");
  return o;
}

Outcome criterion10(const std::vector<Prepared>& suite) {
  Outcome o;
  std::mt19937 rng(10010);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < 5 && i < suite.size(); ++i) {
    const auto& m = suite[i].sm.m;
    const auto d0 = classify::decide_metrics(m);
    const auto b0 = cohomology::betti_numbers(m);
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = oracle::random_unimodular(rng, m.dim(), 20);
      const auto c = s * m * exact::unimodular_inverse(s);
      ++checks;
      o.require(same_decisions(classify::decide_metrics(c), d0), "decisions change under conjugation of " +
                                                                     factors_text(suite[i].sm));
      o.require(cohomology::betti_numbers(c).h == b0.h, "Betti table changes under conjugation of " +
                                                            factors_text(suite[i].sm));
    }
  }
  o.note(std::to_string(checks) + " conjugations compared");
  return o;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::mt19937 rng(20240);
  std::vector<Prepared> suite;
  for (std::size_t size : {5u, 7u})
    for (int i = 0; i < 30; ++i) {
      Prepared p;
      p.sm = oracle::random_admissible(rng, size);
      p.spec = spectrum::analyze_spectrum(p.sm.m, 1e-12);
      p.delta = spectrum::compute_delta(p.spec);
      suite.push_back(std::move(p));
    }

  int failed = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& run) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " [" << num(secs) << " s]\n";
    for (const auto& line : o.lines) std::cout << "      " << line << "\n";
    std::cout.flush();
  };

  Outcome c4;
  report(1, "Example regression", criterion1);
  report(2, "Generic example X^5 - X - 1", criterion2);
  report(3, "h^1 = 1 on the random suite", [&] { return criteria3and4(suite, c4); });
  report(4, "Euler characteristic and Poincare duality", [&] { return c4; });
  report(5, "Jacobi identity, d o d = 0, trace ad_A = 0", [&] { return criterion5(suite); });
  report(6, "ddc_check agrees with the residual matrix", [&] { return criterion6(suite); });
  report(7, "Tri-criterion agreement", [&] { return criterion7(suite); });
  report(8, "Non-diagonalizable witness", criterion8);
  report(9, "Group-law fuzzing", [&] { return criterion9(suite); });
  report(10, "Similarity invariance", [&] { return criterion10(suite); });

  for (std::size_t size : {11u, 13u}) {
    const auto sm = oracle::random_admissible(rng, size);
    const auto t0 = Clock::now();
    const auto b = cohomology::betti_numbers(sm.m);
    std::cout << "info  Betti numbers for n = " << (size - 1) / 2 << ": " << table(b.h) << " ["
              << num(std::chrono::duration<double>(Clock::now() - t0).count()) << " s]\n";
  }

  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (10 - failed) << "/10 criteria passed, total " << num(total) << " s\n";
  return failed == 0 ? 0 : 1;
}
