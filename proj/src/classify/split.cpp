#include "solvtm/classify/split.hpp"

#include "solvtm/error.hpp"
#include "solvtm/exact/sturm.hpp"

namespace solvtm::classify {
namespace {

using exact::ExtendedRational;
using exact::RationalPolynomial;

/// Positive real roots, with multiplicity.
std::size_t positive_root_count(const RationalPolynomial& p) {
  const auto yun = exact::squarefree_decomposition(p);
  std::size_t count = 0;
  for (std::size_t m = 0; m < yun.size(); ++m)
    if (yun[m].degree() > 0)
      count += (m + 1) * exact::sturm_count(yun[m], ExtendedRational::finite(0), ExtendedRational::pos_inf());
  return count;
}

/// Strips the factor x - r (r = +-1) as often as it divides; returns the count.
std::size_t strip_root(RationalPolynomial& g, long r) {
  const RationalPolynomial lin{-r, 1};
  std::size_t k = 0;
  while (g.degree() > 0 && g.evaluate(r) == 0) {
    g = exact::exact_quotient(g, lin);
    ++k;
  }
  return k;
}

/// Unit-circle roots of a squarefree p.
std::size_t unit_circle_squarefree(const RationalPolynomial& p) {
  if (p.degree() <= 0 || p.coeff(0) == 0) return 0;
  auto g = exact::poly_gcd(p, exact::reverse_poly(p));
  std::size_t count = strip_root(g, 1) + strip_root(g, -1);
  if (g.degree() <= 0) return count;
  // g is palindromic of even degree 2e: g / x^e = c_e + sum c_{e+k} D_k(y).
  const int e = g.degree() / 2;
  const RationalPolynomial y = RationalPolynomial::x();
  RationalPolynomial prev = RationalPolynomial::constant(2);
  RationalPolynomial cur = y;
  RationalPolynomial big = RationalPolynomial::constant(g.coeff(e));
  for (int k = 1; k <= e; ++k) {
    big += g.coeff(e + k) * cur;
    RationalPolynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const auto sq = exact::squarefree_part(big);
  // roots in (-2, 2); y = 2 is excluded since x = 1 was stripped.
  count += 2 * exact::sturm_count(sq, ExtendedRational::finite(-2), ExtendedRational::finite(2));
  return count;
}

}  // namespace

std::size_t unit_circle_root_count(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  const auto yun = exact::squarefree_decomposition(p);
  std::size_t count = 0;
  for (std::size_t m = 0; m < yun.size(); ++m) count += (m + 1) * unit_circle_squarefree(yun[m]);
  return count;
}

bool unit_circle_condition(const RationalPolynomial& p) {
  if (p.degree() < 5 || p.degree() % 2 == 0) return false;
  return unit_circle_root_count(p) == static_cast<std::size_t>(p.degree() - 3);
}

SplitCheckResult split_check(const RationalPolynomial& p) {
  if (!p.is_monic() || !p.is_integral()) throw DomainError("split_check needs a monic integer polynomial");
  if (p.degree() < 5 || p.degree() % 2 == 0) throw DomainError("split_check needs odd degree >= 5");
  if (p.coeff(0) != -1) throw DomainError("split_check needs P(0) = -1");
  const int n = (p.degree() - 1) / 2;

  SplitCheckResult r;
  // -rev P is monic because P(0) = -1; the monic gcd does not depend on the sign.
  r.h_candidate = exact::poly_gcd(p, -exact::reverse_poly(p));
  r.f0_candidate = exact::exact_quotient(p, r.h_candidate);

  r.integrality_ok = r.h_candidate.is_integral() && r.f0_candidate.is_integral();
  if (!r.integrality_ok) r.warnings.push_back("h or f0 has non-integer coefficients");
  r.self_reciprocal_ok = r.h_candidate == exact::reverse_poly(r.h_candidate).monic();
  if (!r.self_reciprocal_ok) r.warnings.push_back("h is not self-reciprocal");
  r.degree_ok = r.h_candidate.degree() == 2 * n - 2 && r.f0_candidate.degree() == 3;
  if (!r.degree_ok)
    r.warnings.push_back("deg h = " + std::to_string(r.h_candidate.degree()) + ", expected " +
                         std::to_string(2 * n - 2));
  r.f0_root_ok = positive_root_count(r.f0_candidate) == 1 && r.f0_candidate.evaluate(1) != 0;
  if (!r.f0_root_ok) r.warnings.push_back("f0 does not have exactly one positive real root different from 1");
  r.split_ok = r.integrality_ok && r.self_reciprocal_ok && r.degree_ok && r.f0_root_ok;
  return r;
}

}  // namespace solvtm::classify
