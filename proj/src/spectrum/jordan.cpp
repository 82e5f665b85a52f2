#include "solvtm/spectrum/jordan.hpp"

#include <algorithm>

#include "solvtm/error.hpp"
#include "solvtm/exact/rational_matrix.hpp"

namespace solvtm::spectrum {

using exact::RationalMatrix;
using exact::RationalPolynomial;

bool JordanData::diagonalizable() const {
  for (const auto& f : factors)
    for (unsigned b : f.blocks)
      if (b != 1) return false;
  return true;
}

namespace {

struct Piece {
  RationalPolynomial q;
  unsigned multiplicity;
};

std::vector<Piece> split_by(const std::vector<Piece>& pieces, const RationalPolynomial& h) {
  std::vector<Piece> out;
  for (const auto& p : pieces) {
    const auto g = exact::poly_gcd(p.q, h);
    if (g.degree() < 1 || g.degree() == p.q.degree()) {
      out.push_back(p);
      continue;
    }
    out.push_back({g, p.multiplicity});
    out.push_back({exact::exact_quotient(p.q, g).monic(), p.multiplicity});
  }
  return out;
}

std::vector<unsigned> partition_of(const RationalMatrix& q_of_m, unsigned degree, unsigned multiplicity) {
  // r[j] = (nullity of q(M)^j) / deg q: the number of Jordan blocks per
  // root summed as min(size, j).
  std::vector<std::size_t> r{0};
  RationalMatrix power = q_of_m;
  const std::size_t target = static_cast<std::size_t>(degree) * multiplicity;
  while (true) {
    const std::size_t nullity = exact::kernel_dim(power);
    if (nullity % degree != 0)
      throw DomainError("roots of one factor have different Jordan structure; supply a finer factorization");
    r.push_back(nullity / degree);
    if (nullity >= target || r.back() == r[r.size() - 2]) break;
    power = power * q_of_m;
  }
  if (r.back() != multiplicity)
    throw DomainError("Jordan data inconsistent with the algebraic multiplicity");
  std::vector<unsigned> blocks;
  const std::size_t top = r.size() - 1;
  for (std::size_t j = top; j >= 1; --j) {
    const std::size_t at_least_j = r[j] - r[j - 1];
    const std::size_t at_least_next = j < top ? r[j + 1] - r[j] : 0;
    blocks.insert(blocks.end(), at_least_j - at_least_next, static_cast<unsigned>(j));
  }
  return blocks;
}

exact::RationalInterval alpha_interval_of(const RationalPolynomial& sq) {
  if (exact::sturm_count(sq, exact::ExtendedRational::finite(0), exact::ExtendedRational::pos_inf()) != 1)
    throw DomainError("the real eigenvalue is not positive");
  exact::Rational width;
  mpq_div_2exp(width.get_mpq_t(), exact::Rational(1).get_mpq_t(), 110);
  return exact::refine_real_root(sq, {0, exact::cauchy_root_bound(sq)}, width);
}

}  // namespace

JordanData jordan_structure(const exact::IntegerMatrix& m, const std::vector<RationalPolynomial>& hints) {
  const auto p = exact::char_poly(m);
  const auto parts = exact::squarefree_decomposition(p);
  const auto min_parts = exact::squarefree_decomposition(exact::minimal_polynomial(m));

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (const auto& b : min_parts) {
      const auto g = exact::poly_gcd(parts[i], b);
      if (g.degree() >= 1) pieces.push_back({g, static_cast<unsigned>(i + 1)});
    }
  }
  for (const auto& h : hints)
    if (h.degree() >= 1) pieces = split_by(pieces, h);

  JordanData data;
  for (const auto& piece : pieces) {
    const auto q_of_m = exact::eval_poly_at_matrix(piece.q, m);
    data.factors.push_back(
        {piece.q, piece.multiplicity,
         partition_of(q_of_m, static_cast<unsigned>(piece.q.degree()), piece.multiplicity)});
  }
  return data;
}

SpectrumReport analyze_spectrum(const exact::IntegerMatrix& m, double eps, const JordanData& jordan) {
  SpectrumReport rep;
  rep.precision = eps;
  std::size_t reals = 0;
  for (const auto& f : jordan.factors) {
    for (const auto& r : squarefree_roots(f.factor, eps)) {
      if (r.imag() == 0) {
        ++reals;
        if (f.multiplicity != 1) throw DomainError("the real eigenvalue is not simple");
      } else if (r.imag() > 0) {
        rep.classes.push_back({r, f.multiplicity, f.blocks});
      }
    }
  }
  if (reals != 1) throw DomainError("expected exactly one real eigenvalue");
  rep.alpha_interval = alpha_interval_of(exact::squarefree_part(exact::char_poly(m)));
  rep.alpha = exact::Rational((rep.alpha_interval.lo + rep.alpha_interval.hi) / 2).get_d();
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const BetaClass& a, const BetaClass& b) { return canonical_before(a.value, b.value); });
  for (const auto& c : rep.classes) rep.betas.insert(rep.betas.end(), c.multiplicity, c.value);
  return rep;
}

SpectrumReport analyze_spectrum(const exact::IntegerMatrix& m, double eps) {
  return analyze_spectrum(m, eps, jordan_structure(m));
}

}  // namespace solvtm::spectrum
