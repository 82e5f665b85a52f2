#include "solvtm/forms/dga.hpp"

#include <bit>
#include <vector>

#include "solvtm/error.hpp"

namespace solvtm::forms {

namespace {

using Word = InvariantForm::Word;

/// d of every generator.
std::vector<InvariantForm> generator_differentials(std::size_t n, const spectrum::DeltaMatrix& delta, double alpha) {
  if (static_cast<std::size_t>(delta.rows()) != n || delta.cols() != delta.rows())
    throw DomainError("Delta does not match the coframe");
  const double log_alpha = std::log(alpha);
  const Word eta = Word{1} << 0, eta_bar = Word{1} << (n + 1);
  std::vector<InvariantForm> d(2 * n + 2, InvariantForm(n));
  d[0].add(eta | eta_bar, log_alpha);
  d[n + 1].add(eta | eta_bar, -log_alpha);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = k; j <= n; ++j) {
      const Complex v = delta(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(j - 1));
      if (v == Complex(0)) continue;
      const Word th = Word{1} << j, th_bar = Word{1} << (n + 1 + j);
      // -(eta + eta-bar) ^ theta_j, written in increasing generator order.
      d[k].add(eta | th, -v);
      d[k].add(th | eta_bar, v);
      d[n + 1 + k].add(eta | th_bar, -std::conj(v));
      d[n + 1 + k].add(eta_bar | th_bar, -std::conj(v));
    }
  return d;
}

}  // namespace

InvariantForm differential(const InvariantForm& f, const spectrum::DeltaMatrix& delta, double alpha) {
  const std::size_t n = f.n();
  const auto dg = generator_differentials(n, delta, alpha);
  InvariantForm out(n);
  for (const auto& [w, c] : f.terms()) {
    int position = 0;
    for (Word rest = w; rest; rest &= rest - 1, ++position) {
      const int g = std::countr_zero(rest);
      const Word before = w & ((Word{1} << g) - 1);
      const Word after = w & ~((Word{2} << g) - 1);
      const double sign = position % 2 ? -1.0 : 1.0;
      // before ^ d(g) ^ after; d(g) has degree 2.
      for (const auto& [dw, dc] : dg[static_cast<std::size_t>(g)].terms()) {
        if ((dw & before) || (dw & after)) continue;
        const int s = merge_sign(before, dw) * merge_sign(before | dw, after);
        out.add(before | dw | after, sign * s * c * dc);
      }
    }
  }
  return out;
}

InvariantForm d_c(const InvariantForm& f, const spectrum::DeltaMatrix& delta, double alpha) {
  return -apply_J_inverse(differential(apply_J(f), delta, alpha));
}

InvariantForm ddc(const InvariantForm& f, const spectrum::DeltaMatrix& delta, double alpha) {
  return differential(d_c(f, delta, alpha), delta, alpha);
}

}  // namespace solvtm::forms
