#include "solvtm/classify/generate.hpp"

#include "solvtm/classify/decide.hpp"
#include "solvtm/error.hpp"
#include "solvtm/exact/sturm.hpp"

namespace solvtm::classify {
namespace {

using exact::ExtendedRational;
using exact::RationalPolynomial;

std::size_t real_root_count(const RationalPolynomial& squarefree) {
  return exact::sturm_count(squarefree, ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
}

}  // namespace

GenerationResult generate_from_factors(const std::vector<FactorSpec>& factors) {
  if (factors.empty()) throw DomainError("no factors given");
  std::vector<exact::IntegerMatrix> blocks;
  RationalPolynomial product = RationalPolynomial::constant(1);
  RationalPolynomial f0 = RationalPolynomial::constant(1), h = RationalPolynomial::constant(1);
  bool has_f0 = false, has_h = false;
  bool f0_simple = true;
  for (const auto& f : factors) {
    if (f.multiplicity == 0) throw DomainError("factor multiplicity must be positive");
    if (f.poly.degree() < 1 || !f.poly.is_monic() || !f.poly.is_integral())
      throw DomainError("factor " + f.poly.to_string() + " is not a monic integer polynomial of positive degree");
    if (!exact::is_squarefree(f.poly)) throw DomainError("factor not squarefree: " + f.poly.to_string());
    const auto block = exact::companion_matrix(f.poly);
    for (unsigned k = 0; k < f.multiplicity; ++k) {
      blocks.push_back(block);
      product *= f.poly;
    }
    if (f.role == FactorRole::F0) {
      has_f0 = true;
      f0 *= pow(f.poly, f.multiplicity);
      if (f.multiplicity != 1) f0_simple = false;
    } else if (f.role == FactorRole::H) {
      has_h = true;
      h *= pow(f.poly, f.multiplicity);
    }
  }
  if (product.degree() < 5 || product.degree() % 2 == 0)
    throw DomainError("total degree must be odd and at least 5, got " + std::to_string(product.degree()));
  if (product.coeff(0) != -1) throw DomainError("product has constant term " + product.coeff(0).get_str() + ", need -1");

  GenerationResult r;
  r.matrix = exact::block_diagonal(blocks);
  r.admissibility = spectrum::check_admissible(r.matrix);
  if (!r.admissibility.admissible) throw InadmissibleError(r.admissibility);

  if (has_f0) {
    bool ok = f0.degree() == 3 && f0.coeff(0) == -1 && f0_simple && f0.evaluate(1) != 0;
    if (ok) {
      const auto sq = exact::squarefree_part(f0);
      ok = real_root_count(sq) == 1 &&
           exact::sturm_count(sq, ExtendedRational::finite(0), ExtendedRational::pos_inf()) == 1;
    }
    r.f0_hypotheses = ok;
    if (!ok) r.notes.push_back("f0 fails: degree 3, one real root alpha > 0, alpha != 1, f0(0) = -1");
  }
  if (has_h) {
    const bool ok = h.degree() > 0 && real_root_count(exact::squarefree_part(h)) == 0 &&
                    h == exact::reverse_poly(h).monic();
    r.h_hypotheses = ok;
    if (!ok) r.notes.push_back("h fails: purely complex roots, self-reciprocal");
  }
  return r;
}

}  // namespace solvtm::classify
