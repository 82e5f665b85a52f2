// solvtm: admissibility, Betti numbers, Lie algebra, invariant forms and
// special Hermitian metrics of the manifolds T_M.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "solvtm/classify/decide.hpp"
#include "solvtm/classify/generate.hpp"
#include "solvtm/classify/input.hpp"
#include "solvtm/classify/report.hpp"
#include "solvtm/forms/dga.hpp"
#include "solvtm/forms/metric.hpp"
#include "solvtm/lie/structure.hpp"

using namespace solvtm;
using namespace solvtm::classify;
using nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Failure = 1, Inadmissible = 2, Precision = 3, Parse = 4 };

struct Args {
  std::string matrix_path;
  std::string factors;
  std::string format = "text";
  double precision = 1e-12;
  double tol = 1e-9;
  std::size_t max_k = 0;
  bool timing = false;
};

struct Input {
  exact::IntegerMatrix m;
  Options options;
};

Input load(const Args& a, const CLI::App& app) {
  Input in;
  in.options.precision = a.precision;
  in.options.tol = a.tol;
  if (app.count("--max-k")) in.options.max_k = a.max_k;
  if (!a.factors.empty()) {
    const auto specs = parse_factors(a.factors);
    for (const auto& f : specs) in.options.hints.push_back(f.poly);
    in.m = generate_from_factors(specs).matrix;
  } else if (a.matrix_path.empty() || a.matrix_path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    in.m = parse_matrix(buf.str());
  } else {
    in.m = read_matrix_file(a.matrix_path);
  }
  return in;
}

void emit(const Args& a, const ordered_json& j, const std::string& text) {
  if (a.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string matrix_text(const exact::IntegerMatrix& m) {
  std::ostringstream os;
  os << m.dim() << "\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    os << "\n";
  }
  return os.str();
}

ordered_json matrix_json(const exact::IntegerMatrix& m) {
  auto rows = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    auto row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const auto& z = m(r, c);
      if (z.fits_slong_p())
        row.push_back(z.get_si());
      else
        row.push_back(z.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

int run_validate(const Input& in, const Args& a) {
  const auto adm = spectrum::check_admissible(in.m);
  ordered_json j = admissibility_json(adm);
  std::string text;
  if (adm.admissible) {
    const auto s = spectrum::analyze_spectrum(in.m, in.options.precision, spectrum::jordan_structure(in.m, in.options.hints));
    j["alpha"] = round12(s.alpha);
    j["diagonalizable"] = spectrum::is_diagonalizable(in.m);
  }
  ClassificationReport r;
  r.admissibility = adm;
  text = report_text(r);
  if (j.contains("alpha")) {
    std::ostringstream os;
    os.precision(12);
    os << "alpha: " << j["alpha"].get<double>() << "\ndiagonalizable: " << (j["diagonalizable"].get<bool>() ? "yes" : "no")
       << "\n";
    text += os.str();
  }
  emit(a, j, text);
  return adm.admissible ? Ok : Inadmissible;
}

int run_betti(const Input& in, const Args& a) {
  const auto adm = spectrum::check_admissible(in.m);
  if (!adm.admissible) throw InadmissibleError(adm);
  const auto g = cohomology::geometric_multiplicities(in.m, in.options.max_k);
  const auto h = cohomology::betti_numbers(g);
  ClassificationReport r;
  r.admissibility = adm;
  r.geometric_multiplicities = g;
  r.betti = h;
  ordered_json j;
  j["betti"] = betti_json(h);
  j["geometric_multiplicities"] = multiplicities_json(g);
  std::string text = report_text(r);
  text = text.substr(text.find("geometric"));
  emit(a, j, text);
  return Ok;
}

int run_metrics(const Input& in, const Args& a) {
  auto capped = in.options;
  capped.max_k = std::min<std::size_t>(in.options.max_k.value_or(2), 2);
  const auto data = precompute(in.m, capped);
  const auto d = decide_metrics(data, in.options);
  ClassificationReport r;
  r.admissibility = data.admissibility;
  r.metrics = d;
  r.warnings = d.warnings;
  ordered_json j;
  j["metrics"] = metrics_json(d);
  j["warnings"] = d.warnings;
  std::string text = report_text(r);
  text = text.substr(text.find("kaehler"));
  emit(a, j, text);
  return Ok;
}

int run_lie(const Input& in, const Args& a) {
  const auto adm = spectrum::check_admissible(in.m);
  if (!adm.admissible) throw InadmissibleError(adm);
  const auto s = spectrum::analyze_spectrum(in.m, in.options.precision, spectrum::jordan_structure(in.m, in.options.hints));
  const auto delta = spectrum::compute_delta(s);
  const auto t = lie::structure_constants(delta, s.alpha);
  const auto p = lie::solvability_profile(t);
  const LieSummary l{lie::jacobi_residual(t), p.solvable, p.nilpotent, p.trace_adA};
  ordered_json j = lie_json(l);
  j["derived_series"] = p.derived_series;
  j["lower_central_series"] = p.lower_central_series;
  auto brackets = ordered_json::array();
  std::ostringstream os;
  os.precision(12);
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t k = i + 1; k < t.dim(); ++k) {
      std::ostringstream sum;
      sum.precision(12);
      for (std::size_t m = 0; m < t.dim(); ++m) {
        const double c = round12(t(i, k, m));
        if (c == 0) continue;
        brackets.push_back({{"i", t.label(i)}, {"j", t.label(k)}, {"k", t.label(m)}, {"c", c}});
        sum << (sum.tellp() > 0 ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : "")) << std::abs(c) << " " << t.label(m);
      }
      if (sum.tellp() > 0) os << "[" << t.label(i) << ", " << t.label(k) << "] = " << sum.str() << "\n";
    }
  j["brackets"] = brackets;
  os << "jacobi residual: " << round12(l.jacobi_residual) << "\nsolvable: " << (l.solvable ? "yes" : "no")
     << "\nnilpotent: " << (l.nilpotent ? "yes" : "no") << "\ntrace ad_A: " << round12(l.trace_adA) << "\n";
  emit(a, j, os.str());
  return Ok;
}

int run_forms(const Input& in, const Args& a) {
  const auto adm = spectrum::check_admissible(in.m);
  if (!adm.admissible) throw InadmissibleError(adm);
  const auto s = spectrum::analyze_spectrum(in.m, in.options.precision, spectrum::jordan_structure(in.m, in.options.hints));
  const auto delta = spectrum::compute_delta(s);
  const std::size_t n = adm.n;
  ordered_json j;
  ordered_json d = ordered_json::object();
  std::ostringstream os;
  os.precision(12);
  for (std::size_t g = 0; g < 2 * n + 2; ++g) {
    const auto gen = forms::InvariantForm::generator(n, g);
    const auto dg = forms::differential(gen, delta, s.alpha);
    d[gen.generator_name(g)] = dg.to_string();
    os << "d " << gen.generator_name(g) << " = " << dg.to_string() << "\n";
  }
  j["differentials"] = d;
  const auto omega = forms::standard_metric(n).to_form();
  const double ddc = forms::ddc(omega, delta, s.alpha).max_abs();
  const double ast = forms::astheno_residual_dga(omega, delta, s.alpha);
  const auto lee = forms::lcb_verify(omega, delta, s.alpha, in.options.tol);
  const bool positive = forms::positivity_check(omega, in.options.tol);
  j["standard_metric"] = {{"omega", omega.to_string()},
                          {"positive", positive},
                          {"ddc_residual", round12(ddc)},
                          {"astheno_residual", round12(ast)},
                          {"lee_coefficient", lee ? ordered_json(round12(lee->lee_coefficient)) : ordered_json(nullptr)}};
  os << "omega = " << omega.to_string() << "\npositive: " << (positive ? "yes" : "no")
     << "\n|dd^c omega| = " << round12(ddc) << "\n|dd^c omega^(n-1)| = " << round12(ast) << "\n";
  if (lee)
    os << "Lee form: " << lee->theta.to_string() << "\n";
  else
    os << "Lee form: no solution within tol\n";
  emit(a, j, os.str());
  return Ok;
}

int run_generate(const Args& a) {
  if (a.factors.empty()) throw ParseError("generate needs --factors");
  const auto r = generate_from_factors(parse_factors(a.factors));
  ordered_json j;
  j["matrix"] = matrix_json(r.matrix);
  j["char_poly"] = r.admissibility.char_poly.to_string();
  j["admissible"] = r.admissibility.admissible;
  j["f0_hypotheses"] = r.f0_hypotheses ? ordered_json(*r.f0_hypotheses) : ordered_json(nullptr);
  j["h_hypotheses"] = r.h_hypotheses ? ordered_json(*r.h_hypotheses) : ordered_json(nullptr);
  j["notes"] = r.notes;
  std::string text = matrix_text(r.matrix);
  for (const auto& note : r.notes) text += "# " + note + "\n";
  emit(a, j, text);
  return Ok;
}

int run_report(const Input& in, const Args& a) {
  const auto r = full_report(in.m, in.options);
  emit(a, report_json(r, a.timing), report_text(r, a.timing));
  return r.admissibility.admissible ? Ok : Inadmissible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and special Hermitian metrics of the manifolds T_M"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--precision", a.precision, "Root isolation accuracy")->default_val(1e-12);
  app.add_option("--tol", a.tol, "Tolerance for numeric and DGA checks")->default_val(1e-9);
  app.add_option("--max-k", a.max_k, "Largest exterior power computed; duality fills the rest");
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "text"}))->default_val("text");
  app.add_option("--factors", a.factors, "Factor list such as \"x^3+x-1; (x^2+1)^2\" instead of a matrix");
  app.add_flag("--timing", a.timing, "Include per-stage timings in the report");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Admissibility certificate"},
      {"betti", "Exact Betti numbers"},
      {"metrics", "Metric existence decisions with evidence"},
      {"lie", "Structure constants and solvability"},
      {"forms", "Invariant form differentials and the standard metric"},
      {"generate", "Block-companion matrix from --factors"},
      {"report", "Full classification report"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name != "generate") sub->add_option("matrix", a.matrix_path, "Matrix file (text or JSON); - for stdin");
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : Parse;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "generate") return run_generate(a);
    const auto in = load(a, app);
    if (cmd == "validate") return run_validate(in, a);
    if (cmd == "betti") return run_betti(in, a);
    if (cmd == "metrics") return run_metrics(in, a);
    if (cmd == "lie") return run_lie(in, a);
    if (cmd == "forms") return run_forms(in, a);
    return run_report(in, a);
  } catch (const InadmissibleError& e) {
    if (a.format == "json")
      std::cout << ordered_json{{"admissibility", admissibility_json(e.report())}}.dump(2) << "\n";
    std::cerr << "solvtm: " << e.what() << "\n";
    return Inadmissible;
  } catch (const ParseError& e) {
    std::cerr << "solvtm: " << e.what() << "\n";
    return Parse;
  } catch (const PrecisionError& e) {
    std::cerr << "solvtm: " << e.what() << "\n";
    return Precision;
  } catch (const std::exception& e) {
    std::cerr << "solvtm: " << e.what() << "\n";
    return Failure;
  }
}
