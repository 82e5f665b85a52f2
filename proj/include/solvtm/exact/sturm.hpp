#pragma once

#include <cstddef>
#include <vector>

#include "solvtm/exact/polynomial.hpp"

namespace solvtm::exact {

/// A rational number or one of the two infinities.
struct ExtendedRational {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static ExtendedRational neg_inf() { return {Kind::NegInf, 0}; }
  static ExtendedRational pos_inf() { return {Kind::PosInf, 0}; }
  static ExtendedRational finite(Rational v) { return {Kind::Finite, v}; }

  bool less_than(const ExtendedRational& o) const;
};

/// Canonical Sturm sequence p, p', -rem(p, p'), ... of a squarefree p.
class SturmChain {
 public:
  /// Throws DomainError if p is zero or not squarefree.
  explicit SturmChain(const RationalPolynomial& p);

  const std::vector<RationalPolynomial>& polys() const noexcept {
    return polys_;
  }

  std::size_t sign_variations(const ExtendedRational& x) const;

  /// Number of distinct real roots in (lo, hi].
  std::size_t count(const ExtendedRational& lo,
                    const ExtendedRational& hi) const;

 private:
  std::vector<RationalPolynomial> polys_;
};

/// Distinct real roots of squarefree p in (lo, hi]; requires lo < hi.
std::size_t sturm_count(const RationalPolynomial& p, const ExtendedRational& lo,
                        const ExtendedRational& hi);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Upper bound on |root| for every complex root of p (Cauchy bound).
Rational cauchy_root_bound(const RationalPolynomial& p);

/// Shrinks (lo, hi], known to contain exactly one simple root of the
/// squarefree p, to width <= width by sign bisection.
RationalInterval refine_real_root(const RationalPolynomial& p,
                                  RationalInterval interval,
                                  const Rational& width);

}  // namespace solvtm::exact
