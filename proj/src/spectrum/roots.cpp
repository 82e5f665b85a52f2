#include "solvtm/spectrum/roots.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <limits>

#include "solvtm/error.hpp"

namespace solvtm::spectrum {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Cx = mp::cpp_complex_50;

Real to_real(const exact::Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

struct MonicPoly {
  std::vector<Real> c;  // low to high, c.back() == 1

  int degree() const { return static_cast<int>(c.size()) - 1; }

  void eval(const Cx& z, Cx& p, Cx& dp) const {
    p = Cx(c.back());
    dp = Cx(0);
    for (int i = degree() - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + Cx(c[static_cast<std::size_t>(i)]);
    }
  }
};

std::vector<Cx> aberth(const MonicPoly& p) {
  const int d = p.degree();
  // Fujiwara bound on the root moduli.
  Real bound = 0;
  for (int i = 0; i < d; ++i) {
    const Real a = mp::abs(p.c[static_cast<std::size_t>(i)]);
    if (a == 0) continue;
    const Real r = mp::pow(a, Real(1) / Real(d - i));
    if (r > bound) bound = r;
  }
  bound = 2 * bound;
  if (bound == 0) bound = 1;
  const Real scale = bound / 2;

  std::vector<Cx> z(static_cast<std::size_t>(d));
  const Real two_pi = 2 * mp::acos(Real(-1));
  for (int k = 0; k < d; ++k) {
    const Real angle = two_pi * k / d + Real(0.4);
    z[static_cast<std::size_t>(k)] = Cx(scale * mp::cos(angle), scale * mp::sin(angle));
  }

  const Real stop = Real("1e-46");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Cx v, dv;
      p.eval(z[k], v, dv);
      if (v == Cx(0)) continue;
      Cx sum(0);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) sum += Cx(1) / (z[k] - z[j]);
      Cx w;
      if (dv == Cx(0)) {
        w = Cx(Real("1e-20"), Real("1e-20"));
      } else {
        const Cx ratio = v / dv;
        w = ratio / (Cx(1) - ratio * sum);
      }
      z[k] -= w;
      const Real size = mp::abs(z[k]);
      const Real step = Real(mp::abs(w)) / (size > 1 ? size : Real(1));
      if (step > worst) worst = step;
    }
    if (worst <= stop) break;
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> squarefree_roots(const exact::RationalPolynomial& q, double eps) {
  if (q.degree() < 1) return {};
  if (!exact::is_squarefree(q)) throw DomainError("squarefree_roots needs a squarefree polynomial");
  const auto monic = q.monic();
  MonicPoly p;
  for (const auto& c : monic.coeffs()) p.c.push_back(to_real(c));
  const int d = p.degree();

  const std::vector<Cx> z = aberth(p);

  // Weierstrass inclusion disks; disjoint disks hold exactly one root each.
  std::vector<Real> radius(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    Cx v, dv;
    p.eval(z[k], v, dv);
    Cx denom(1);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != k) denom *= z[k] - z[j];
    radius[k] = Real(d) * mp::abs(v / denom);
  }
  const Real ulp = Real(std::numeric_limits<double>::epsilon());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const Real rounding = ulp * mp::abs(z[k]);
    if (radius[k] + rounding > Real(eps))
      throw PrecisionError("precision insufficient: root radius exceeds the requested eps");
    for (std::size_t j = k + 1; j < z.size(); ++j)
      if (mp::abs(z[k] - z[j]) <= radius[k] + radius[j])
        throw PrecisionError("precision insufficient: root disks overlap");
  }

  const std::size_t real_count =
      exact::sturm_count(monic, exact::ExtendedRational::neg_inf(), exact::ExtendedRational::pos_inf());
  std::vector<std::size_t> order(z.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return mp::abs(z[a].imag()) < mp::abs(z[b].imag());
  });

  std::vector<std::complex<double>> out;
  std::size_t upper = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Cx& r = z[order[i]];
    if (i < real_count) {
      if (mp::abs(r.imag()) > radius[order[i]])
        throw PrecisionError("precision insufficient: real root not separated");
      out.emplace_back(static_cast<double>(r.real()), 0.0);
    } else {
      if (r.imag() > 0) ++upper;
      out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
  }
  if (2 * upper != z.size() - real_count)
    throw PrecisionError("precision insufficient: conjugate roots not paired");
  return out;
}

bool canonical_before(std::complex<double> a, std::complex<double> b) {
  constexpr double tie = 1e-9;
  const double ma = std::abs(a), mb = std::abs(b);
  if (std::abs(ma - mb) > tie) return ma > mb;
  if (std::abs(a.real() - b.real()) > tie) return a.real() > b.real();
  return a.imag() > b.imag();
}

SpectrumReport isolate_roots(const exact::RationalPolynomial& p, double eps) {
  if (!p.is_monic()) throw DomainError("isolate_roots needs a monic polynomial");
  SpectrumReport rep;
  rep.precision = eps;
  const auto parts = exact::squarefree_decomposition(p);
  std::size_t reals = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const unsigned mult = static_cast<unsigned>(i + 1);
    for (const auto& r : squarefree_roots(parts[i], eps)) {
      if (r.imag() == 0) {
        ++reals;
        if (mult != 1) throw DomainError("the real eigenvalue is not simple");
      } else if (r.imag() > 0) {
        rep.classes.push_back({r, mult, {}});
      }
    }
  }
  if (reals != 1) throw DomainError("expected exactly one real eigenvalue");

  const auto sq = exact::squarefree_part(p);
  if (exact::sturm_count(sq, exact::ExtendedRational::finite(0), exact::ExtendedRational::pos_inf()) != 1)
    throw DomainError("the real eigenvalue is not positive");
  exact::Rational width;
  mpq_div_2exp(width.get_mpq_t(), exact::Rational(1).get_mpq_t(), 110);
  rep.alpha_interval = exact::refine_real_root(sq, {0, exact::cauchy_root_bound(sq)}, width);
  rep.alpha = exact::Rational((rep.alpha_interval.lo + rep.alpha_interval.hi) / 2).get_d();

  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const BetaClass& a, const BetaClass& b) { return canonical_before(a.value, b.value); });
  for (const auto& c : rep.classes) rep.betas.insert(rep.betas.end(), c.multiplicity, c.value);
  return rep;
}

}  // namespace solvtm::spectrum
