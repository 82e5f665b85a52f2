#include "solvtm/spectrum/admissibility.hpp"

namespace solvtm::spectrum {

using exact::ExtendedRational;
using exact::Rational;
using exact::RationalPolynomial;

AdmissibilityReport check_admissible(const exact::IntegerMatrix& m) {
  AdmissibilityReport rep;
  rep.size = m.dim();
  rep.n = rep.size >= 1 ? (rep.size - 1) / 2 : 0;
  if (rep.size == 0) {
    rep.reasons.push_back("empty matrix");
    return rep;
  }
  const bool size_ok = rep.size % 2 == 1 && rep.size >= 5;
  if (rep.size % 2 == 0) rep.reasons.push_back("size " + std::to_string(rep.size) + " is even");
  else if (rep.size < 5) rep.reasons.push_back("size " + std::to_string(rep.size) + " is below 5");

  const auto det = exact::determinant(m);
  rep.det_ok = det == 1;
  if (!rep.det_ok) rep.reasons.push_back("det M = " + det.get_str() + ", expected 1");

  rep.char_poly = exact::char_poly(m);
  const auto& p = rep.char_poly;
  const auto sq = exact::squarefree_part(p);
  rep.real_root_count = exact::sturm_count(sq, ExtendedRational::neg_inf(), ExtendedRational::pos_inf());

  bool simple = true;
  const auto repeated = exact::poly_gcd(p, p.derivative());
  if (repeated.degree() >= 1 &&
      exact::sturm_count(exact::squarefree_part(repeated), ExtendedRational::neg_inf(),
                         ExtendedRational::pos_inf()) > 0) {
    simple = false;
    rep.reasons.push_back("a real eigenvalue is repeated");
  }
  if (rep.real_root_count != 1)
    rep.reasons.push_back(std::to_string(rep.real_root_count) + " distinct real eigenvalues, expected 1");

  const auto zero = ExtendedRational::finite(0);
  const std::size_t positive = exact::sturm_count(sq, zero, ExtendedRational::pos_inf());
  const std::size_t nonpositive = exact::sturm_count(sq, ExtendedRational::neg_inf(), zero);
  rep.alpha_positive = rep.real_root_count == 1 && positive == 1 && nonpositive == 0;
  if (rep.real_root_count == 1 && !rep.alpha_positive) rep.reasons.push_back("the real eigenvalue is not positive");

  rep.alpha_not_one = p.evaluate(1) != 0;
  if (!rep.alpha_not_one) rep.reasons.push_back("1 is an eigenvalue");

  if (rep.alpha_positive) {
    Rational width;
    mpq_div_2exp(width.get_mpq_t(), Rational(1).get_mpq_t(), 110);
    rep.alpha_interval = exact::refine_real_root(sq, {0, exact::cauchy_root_bound(sq)}, width);
  }

  rep.admissible = size_ok && rep.det_ok && rep.real_root_count == 1 && simple &&
                   rep.alpha_positive && rep.alpha_not_one;
  return rep;
}

bool is_diagonalizable(const exact::IntegerMatrix& m) {
  if (m.dim() == 0) return true;
  return exact::eval_poly_at_matrix(exact::squarefree_part(exact::char_poly(m)), m).is_zero();
}

}  // namespace solvtm::spectrum
