#include "solvtm/lie/structure.hpp"

#include <algorithm>
#include <cmath>

namespace solvtm::lie {

StructureTensor::StructureTensor(std::size_t n) : n_(n), c_((2 * n + 2) * (2 * n + 2) * (2 * n + 2), 0.0) {}

void StructureTensor::set_bracket(std::size_t i, std::size_t j, std::size_t k, double v) {
  (*this)(i, j, k) = v;
  (*this)(j, i, k) = -v;
}

std::string StructureTensor::label(std::size_t i) const {
  if (i == A) return "A";
  if (i == X) return "X";
  return "Y_" + std::to_string(i - 1);
}

StructureTensor structure_constants(const spectrum::DeltaMatrix& delta, double alpha) {
  const auto n = static_cast<std::size_t>(delta.rows());
  StructureTensor t(n);
  t.set_bracket(StructureTensor::A, StructureTensor::X, StructureTensor::X, std::log(alpha));
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      const auto d = delta(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1));
      t.set_bracket(StructureTensor::A, t.Y(j), t.Y(i), d.real());
      t.set_bracket(StructureTensor::A, t.Y(j), t.Y(n + i), d.imag());
      t.set_bracket(StructureTensor::A, t.Y(n + j), t.Y(i), -d.imag());
      t.set_bracket(StructureTensor::A, t.Y(n + j), t.Y(n + i), d.real());
    }
  }
  return t;
}

double jacobi_residual(const StructureTensor& t) {
  const std::size_t d = t.dim();
  // [[b_i, b_j], b_k] as a vector in the basis.
  auto nested = [&](std::size_t i, std::size_t j, std::size_t k, std::vector<double>& out) {
    for (std::size_t l = 0; l < d; ++l) {
      const double c = t(i, j, l);
      if (c == 0) continue;
      for (std::size_t m = 0; m < d; ++m) out[m] += c * t(l, k, m);
    }
  };
  double worst = 0;
  std::vector<double> acc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::fill(acc.begin(), acc.end(), 0.0);
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        for (double v : acc) worst = std::max(worst, std::abs(v));
      }
  return worst;
}

namespace {

/// Orthonormal basis (columns) of the span of the given columns.
Eigen::MatrixXd span_basis(const Eigen::MatrixXd& vectors, double tol) {
  if (vectors.cols() == 0) return Eigen::MatrixXd(vectors.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vectors, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return svd.matrixU().leftCols(r);
}

Eigen::MatrixXd bracket_span(const StructureTensor& t, const Eigen::MatrixXd& u, const Eigen::MatrixXd& v, double tol) {
  const auto d = static_cast<Eigen::Index>(t.dim());
  Eigen::MatrixXd out(d, u.cols() * v.cols());
  Eigen::Index col = 0;
  for (Eigen::Index a = 0; a < u.cols(); ++a)
    for (Eigen::Index b = 0; b < v.cols(); ++b, ++col) {
      for (Eigen::Index k = 0; k < d; ++k) {
        double s = 0;
        for (Eigen::Index i = 0; i < d; ++i) {
          if (u(i, a) == 0) continue;
          for (Eigen::Index j = 0; j < d; ++j)
            s += u(i, a) * v(j, b) * t(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        }
        out(k, col) = s;
      }
    }
  return span_basis(out, tol);
}

}  // namespace

SolvabilityProfile solvability_profile(const StructureTensor& t, double tol) {
  SolvabilityProfile p;
  const auto d = static_cast<Eigen::Index>(t.dim());
  const Eigen::MatrixXd whole = Eigen::MatrixXd::Identity(d, d);

  Eigen::MatrixXd cur = whole;
  p.derived_series.push_back(static_cast<std::size_t>(d));
  while (cur.cols() > 0) {
    Eigen::MatrixXd next = bracket_span(t, cur, cur, tol);
    if (next.cols() == cur.cols()) break;
    cur = next;
    p.derived_series.push_back(static_cast<std::size_t>(cur.cols()));
  }
  p.solvable = p.derived_series.back() == 0;

  cur = whole;
  p.lower_central_series.push_back(static_cast<std::size_t>(d));
  while (cur.cols() > 0) {
    Eigen::MatrixXd next = bracket_span(t, whole, cur, tol);
    if (next.cols() == cur.cols()) break;
    cur = next;
    p.lower_central_series.push_back(static_cast<std::size_t>(cur.cols()));
  }
  p.nilpotent = p.lower_central_series.back() == 0;

  for (std::size_t k = 0; k < t.dim(); ++k) p.trace_adA += t(StructureTensor::A, k, k);
  return p;
}

}  // namespace solvtm::lie
