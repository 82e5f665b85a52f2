#include "solvtm/exact/sturm.hpp"

#include "solvtm/error.hpp"

namespace solvtm::exact {

bool ExtendedRational::less_than(const ExtendedRational& o) const {
  if (kind == o.kind) return kind == Kind::Finite && value < o.value;
  if (kind == Kind::NegInf) return true;
  if (kind == Kind::PosInf) return false;
  return o.kind == Kind::PosInf;
}

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  if (!is_squarefree(p))
    throw DomainError("Sturm chain needs a squarefree polynomial; pass squarefree_part first");
  polys_.push_back(p);
  if (p.degree() == 0) return;
  polys_.push_back(p.derivative());
  while (polys_.back().degree() > 0) {
    const auto& a = polys_[polys_.size() - 2];
    const auto& b = polys_.back();
    RationalPolynomial r = -divmod(a, b).second;
    if (r.is_zero()) break;
    polys_.push_back(std::move(r));
  }
}

namespace {

int sign_at(const RationalPolynomial& p, const ExtendedRational& x) {
  using K = ExtendedRational::Kind;
  if (p.is_zero()) return 0;
  if (x.kind == K::Finite) {
    const Rational v = p.evaluate(x.value);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  int s = p.leading() > 0 ? 1 : -1;
  if (x.kind == K::NegInf && p.degree() % 2 == 1) s = -s;
  return s;
}

}  // namespace

std::size_t SturmChain::sign_variations(const ExtendedRational& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : polys_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count(const ExtendedRational& lo,
                              const ExtendedRational& hi) const {
  if (!lo.less_than(hi)) throw DomainError("Sturm count needs lo < hi");
  return sign_variations(lo) - sign_variations(hi);
}

std::size_t sturm_count(const RationalPolynomial& p, const ExtendedRational& lo,
                        const ExtendedRational& hi) {
  return SturmChain(p).count(lo, hi);
}

Rational cauchy_root_bound(const RationalPolynomial& p) {
  if (p.degree() < 1) return 1;
  Rational max = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(p.coeff(i) / p.leading());
    if (r > max) max = r;
  }
  return max + 1;
}

RationalInterval refine_real_root(const RationalPolynomial& p,
                                  RationalInterval interval,
                                  const Rational& width) {
  auto sign = [&](const Rational& x) {
    const Rational v = p.evaluate(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  // The root lies in (lo, hi]; a root exactly at hi collapses the interval.
  if (sign(interval.hi) == 0) return {interval.hi, interval.hi};
  const int s_hi = sign(interval.hi);
  while (interval.hi - interval.lo > width) {
    const Rational mid = (interval.lo + interval.hi) / 2;
    const int s = sign(mid);
    if (s == 0) return {mid, mid};
    if (s == s_hi) interval.hi = mid;
    else interval.lo = mid;
  }
  return interval;
}

}  // namespace solvtm::exact
