#include "solvtm/forms/metric.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <map>

#include "solvtm/error.hpp"
#include "solvtm/forms/dga.hpp"

namespace solvtm::forms {

using Word = InvariantForm::Word;

InvariantForm MetricCoefficients::to_form() const {
  const auto n = static_cast<std::size_t>(a.rows());
  if (a.cols() != a.rows() || static_cast<std::size_t>(c.size()) != n)
    throw DomainError("metric coefficients have inconsistent sizes");
  InvariantForm f(n);
  const Word eta = 1, eta_bar = Word{1} << (n + 1);
  f.add(eta | eta_bar, b);
  for (std::size_t i = 1; i <= n; ++i) {
    const Complex ci = c(static_cast<Eigen::Index>(i - 1));
    f.add(eta | Word{1} << (n + 1 + i), ci);
    // conj(c_i) eta-bar ^ theta_i = -conj(c_i) theta_i ^ eta-bar.
    f.add(Word{1} << i | eta_bar, -std::conj(ci));
    for (std::size_t j = 1; j <= n; ++j)
      f.add(Word{1} << i | Word{1} << (n + 1 + j),
            std::conj(a(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1))));
  }
  return f;
}

bool MetricCoefficients::is_real(double tol) const {
  return (a + a.adjoint()).cwiseAbs().maxCoeff() <= tol && std::abs(b.real()) <= tol;
}

MetricCoefficients standard_metric(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  MetricCoefficients s;
  s.a = Eigen::MatrixXcd::Identity(m, m) * Complex(0, -1);
  s.c = Eigen::VectorXcd::Zero(m);
  s.b = Complex(0, 1);
  return s;
}

Eigen::MatrixXcd pluriclosed_residual(const Eigen::MatrixXcd& a, const spectrum::DeltaMatrix& delta, double alpha) {
  const Eigen::MatrixXcd ds = delta.adjoint();
  return 2.0 * ds * a * delta + ds * ds * a + a * delta * delta + std::log(alpha) * (ds * a + a * delta);
}

bool ddc_check(const InvariantForm& omega, const spectrum::DeltaMatrix& delta, double alpha, double tol) {
  const double scale = std::max(1.0, omega.max_abs());
  if (!omega.is_homogeneous(1, 1) || !omega.is_real(1e-9 * scale))
    throw DomainError("ddc_check needs a real (1,1) form");
  return ddc(omega, delta, alpha).max_abs() <= tol;
}

std::optional<LeeForm> lcb_verify(const InvariantForm& omega, const spectrum::DeltaMatrix& delta, double alpha,
                                  double tol) {
  const std::size_t n = omega.n();
  const InvariantForm top = wedge_power(omega, static_cast<unsigned>(n));
  if (top.is_zero(tol)) return std::nullopt;
  const InvariantForm rhs = differential(top, delta, alpha);

  std::vector<InvariantForm> basis;
  for (std::size_t g = 0; g <= n; ++g) {
    const auto hol = InvariantForm::generator(n, g), anti = InvariantForm::generator(n, g + n + 1);
    basis.push_back(hol + anti);
    basis.push_back(Complex(0, 1) * (hol - anti));
  }
  std::vector<InvariantForm> columns;
  std::map<Word, Eigen::Index> rows;
  for (const auto& [w, c] : rhs.terms()) rows.try_emplace(w, static_cast<Eigen::Index>(rows.size()));
  for (const auto& phi : basis) {
    columns.push_back(wedge(phi, top));
    for (const auto& [w, c] : columns.back().terms()) rows.try_emplace(w, static_cast<Eigen::Index>(rows.size()));
  }
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto k = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(2 * r, k);
  Eigen::VectorXd target = Eigen::VectorXd::Zero(2 * r);
  for (Eigen::Index l = 0; l < k; ++l)
    for (const auto& [w, c] : columns[static_cast<std::size_t>(l)].terms()) {
      lhs(rows[w], l) = c.real();
      lhs(r + rows[w], l) = c.imag();
    }
  for (const auto& [w, c] : rhs.terms()) {
    target(rows[w]) = c.real();
    target(r + rows[w]) = c.imag();
  }
  const Eigen::VectorXd x = lhs.completeOrthogonalDecomposition().solve(target);

  LeeForm lee{InvariantForm(n), x(0), 0};
  for (Eigen::Index l = 0; l < k; ++l) lee.theta += Complex(x(l)) * basis[static_cast<std::size_t>(l)];
  lee.residual = (wedge(lee.theta, top) - rhs).max_abs();
  const double closed = differential(lee.theta, delta, alpha).max_abs();
  const double scale = std::max(1.0, rhs.max_abs());
  if (lee.residual > tol * scale || closed > tol * scale) return std::nullopt;
  return lee;
}

Eigen::MatrixXcd astheno_residual_diagonal(const Eigen::MatrixXcd& a, const spectrum::SpectrumReport& spectrum,
                                           double alpha) {
  for (const auto& c : spectrum.classes)
    for (unsigned b : c.blocks)
      if (b != 1) throw DomainError("diagonal case only");
  const auto n = static_cast<Eigen::Index>(spectrum.betas.size());
  if (a.rows() != n || a.cols() != n) throw DomainError("coefficient matrix does not match the spectrum");
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex p = spectrum.betas[static_cast<std::size_t>(i)] * std::conj(spectrum.betas[static_cast<std::size_t>(k)]);
      out(i, k) = a(i, k) * std::log(alpha * p) * std::log(p);
    }
  return out;
}

double astheno_residual_dga(const InvariantForm& omega, const spectrum::DeltaMatrix& delta, double alpha) {
  const std::size_t n = omega.n();
  const unsigned power = n >= 1 ? static_cast<unsigned>(n - 1) : 0;
  return ddc(wedge_power(omega, power), delta, alpha).max_abs();
}

Eigen::MatrixXd metric_gram(const InvariantForm& omega) {
  const std::size_t n = omega.n();
  const std::size_t dim = 2 * n + 2;
  // values[g][v]: generator g on real basis vector v (A, X, Y_1..Y_2n).
  std::vector<std::vector<Complex>> values(dim, std::vector<Complex>(dim, 0));
  values[0][0] = 0.5;
  values[0][1] = Complex(0, -0.5);
  values[n + 1][0] = 0.5;
  values[n + 1][1] = Complex(0, 0.5);
  for (std::size_t j = 1; j <= n; ++j) {
    values[j][1 + j] = Complex(0, -0.5);
    values[j][1 + n + j] = 0.5;
    values[n + 1 + j][1 + j] = Complex(0, 0.5);
    values[n + 1 + j][1 + n + j] = 0.5;
  }
  // J e_v = sign * e_image.
  std::vector<std::size_t> image(dim);
  std::vector<double> sign(dim, 1.0);
  image[1] = 0;
  image[0] = 1;
  sign[0] = -1;
  for (std::size_t j = 1; j <= n; ++j) {
    image[1 + j] = 1 + n + j;
    image[1 + n + j] = 1 + j;
    sign[1 + n + j] = -1;
  }
  auto eval = [&](std::size_t u, std::size_t v) {
    Complex s = 0;
    for (const auto& [w, c] : omega.terms()) {
      if (std::popcount(w) != 2) throw DomainError("metric_gram needs a 2-form");
      const auto g1 = static_cast<std::size_t>(std::countr_zero(w));
      const auto g2 = static_cast<std::size_t>(63 - std::countl_zero(w));
      s += c * (values[g1][u] * values[g2][v] - values[g1][v] * values[g2][u]);
    }
    return s;
  };
  Eigen::MatrixXd g(dim, dim);
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v)
      g(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = sign[v] * eval(u, image[v]).real();
  return g;
}

bool positivity_check(const InvariantForm& omega, double tol) {
  const Eigen::MatrixXd g = metric_gram(omega);
  const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  return es.eigenvalues().minCoeff() > tol;
}

}  // namespace solvtm::forms
