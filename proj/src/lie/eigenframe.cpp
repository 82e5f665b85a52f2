#include "solvtm/lie/eigenframe.hpp"

#include <random>

#include "solvtm/error.hpp"
#include "solvtm/spectrum/delta.hpp"

namespace solvtm::lie {

namespace {

Eigen::MatrixXd to_double(const exact::IntegerMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
  return out;
}

double min_singular(const Eigen::MatrixXcd& m) {
  if (m.cols() == 0) return 1;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) / std::max(1.0, s(0));
}

/// Jordan chains for one eigenvalue with the given block sizes (descending).
Eigen::MatrixXcd chains_for(const Eigen::MatrixXcd& md, std::complex<double> beta, const std::vector<unsigned>& blocks) {
  const Eigen::Index size = md.rows();
  const Eigen::MatrixXcd nmat = md - beta * Eigen::MatrixXcd::Identity(size, size);
  const unsigned top = blocks.empty() ? 1 : blocks.front();

  auto nullity = [&](unsigned j) {
    Eigen::Index k = 0;
    for (unsigned b : blocks) k += std::min(b, j);
    return k;
  };
  // kernels[j] spans ker N^j; the dimension is known exactly.
  std::vector<Eigen::MatrixXcd> kernels(top + 1);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(size, size);
  for (unsigned j = 1; j <= top; ++j) {
    power = nmat * power;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(power, Eigen::ComputeFullV);
    const Eigen::Index k = nullity(j);
    kernels[j] = svd.matrixV().rightCols(k);
  }

  std::mt19937 rng(12345);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd chosen(size, 0);
  for (unsigned s : blocks) {
    const Eigen::MatrixXcd& ks = kernels[s];
    bool placed = false;
    for (int attempt = 0; attempt < 4 * ks.cols() + 40 && !placed; ++attempt) {
      Eigen::VectorXcd v;
      if (attempt < ks.cols()) {
        v = ks.col(attempt);
      } else {
        Eigen::VectorXcd coef(ks.cols());
        for (Eigen::Index i = 0; i < coef.size(); ++i) coef(i) = {gauss(rng), gauss(rng)};
        v = ks * coef;
      }
      v.normalize();
      Eigen::MatrixXcd chain(size, s);
      chain.col(0) = v;
      for (unsigned i = 1; i < s; ++i) chain.col(i) = nmat * chain.col(i - 1);
      const double tail = chain.col(s - 1).norm();
      if (tail < 1e-6) continue;
      chain /= tail;
      Eigen::MatrixXcd joined(size, chosen.cols() + s);
      joined << chosen, chain;
      if (min_singular(joined) < 1e-8) continue;
      chosen = joined;
      placed = true;
    }
    if (!placed) throw PrecisionError("could not assemble independent Jordan chains");
  }
  return chosen;
}

}  // namespace

EigenFrame eigenframe(const exact::IntegerMatrix& m, const spectrum::SpectrumReport& spectrum, double eps) {
  const Eigen::MatrixXd md = to_double(m);
  const Eigen::Index size = md.rows();
  const auto n = static_cast<Eigen::Index>(spectrum.betas.size());
  if (size != 2 * n + 1) throw DomainError("spectrum does not match M");
  EigenFrame f;

  const Eigen::MatrixXd shifted = md - spectrum.alpha * Eigen::MatrixXd::Identity(size, size);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
  Eigen::VectorXd a = svd.matrixV().col(size - 1);
  // One step of inverse iteration sharpens the null vector.
  const Eigen::VectorXd refined = shifted.partialPivLu().solve(a);
  if (refined.allFinite() && refined.norm() > 0) a = refined;
  a.normalize();
  for (Eigen::Index i = 0; i < size; ++i)
    if (std::abs(a(i)) > 1e-12) {
      if (a(i) < 0) a = -a;
      break;
    }
  f.a = a;
  f.residual_a = (md * a - spectrum.alpha * a).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd mc = md.cast<std::complex<double>>();
  f.b.resize(size, n);
  Eigen::Index col = 0;
  for (const auto& c : spectrum.classes) {
    const std::vector<unsigned> blocks = c.blocks.empty() ? std::vector<unsigned>(c.multiplicity, 1u) : c.blocks;
    const Eigen::MatrixXcd chains = chains_for(mc, c.value, blocks);
    f.b.middleCols(col, chains.cols()) = chains;
    col += chains.cols();
  }
  f.r = spectrum::jordan_matrix(spectrum).transpose();
  f.residual_b = n ? (mc * f.b - f.b * f.r).cwiseAbs().maxCoeff() : 0.0;

  Eigen::MatrixXd u(size, size);
  u.col(0) = a;
  u.middleCols(1, n) = f.b.real();
  u.middleCols(1 + n, n) = f.b.imag();
  Eigen::JacobiSVD<Eigen::MatrixXd> usvd(u);
  f.min_singular_u = usvd.singularValues()(size - 1);

  if (f.residual_a > eps || f.residual_b > eps)
    throw PrecisionError("eigenframe residual exceeds the requested tolerance");
  return f;
}

}  // namespace solvtm::lie
