#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/lie/group.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace oracle {

using solvtm::lie::GroupElement;
using solvtm::lie::LatticeElement;

/// (R^t)^T block by block from the generalized binomial series
/// (beta I + N)^t = beta^t sum_k C(t, k) beta^-k N^k.
inline Eigen::MatrixXcd jordan_power(const solvtm::spectrum::SpectrumReport& s, double t) {
  const auto n = static_cast<Eigen::Index>(s.betas.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  Eigen::Index pos = 0;
  for (const auto& c : s.classes) {
    const auto blocks = c.blocks.empty() ? std::vector<unsigned>(c.multiplicity, 1u) : c.blocks;
    for (unsigned size : blocks) {
      const std::complex<double> bt = std::exp(t * std::log(c.value));
      std::complex<double> binom = 1;
      for (unsigned k = 0; k < size; ++k) {
        if (k > 0) binom *= (t - (k - 1)) / static_cast<double>(k);
        const std::complex<double> v = bt * binom / std::pow(c.value, static_cast<int>(k));
        for (unsigned i = 0; i + k < size; ++i) out(pos + i, pos + i + k) = v;
      }
      pos += size;
    }
  }
  return out;
}

inline Eigen::MatrixXcd group_matrix(const GroupElement& g, const solvtm::spectrum::SpectrumReport& s) {
  const auto n = g.z.size();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2 * n + 2, 2 * n + 2);
  const Eigen::MatrixXcd rt = jordan_power(s, g.t);
  a(0, 0) = std::pow(s.alpha, g.t);
  a(0, 2 * n + 1) = g.x;
  a.block(1, 1, n, n) = rt;
  a.block(1 + n, 1 + n, n, n) = rt.conjugate();
  a.block(1, 2 * n + 1, n, 1) = g.z;
  a.block(1 + n, 2 * n + 1, n, 1) = g.z.conjugate();
  a(2 * n + 1, 2 * n + 1) = 1;
  return a;
}

inline GroupElement random_element(std::mt19937& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-2, 2);
  GroupElement g{u(rng), u(rng), Eigen::VectorXcd(n)};
  for (Eigen::Index i = 0; i < n; ++i) g.z(i) = {u(rng), u(rng)};
  return g;
}

inline LatticeElement random_lattice(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> m(-3, 3), w(-5, 5);
  LatticeElement g{m(rng), {}};
  for (std::size_t i = 0; i < dim; ++i) g.w.emplace_back(w(rng));
  return g;
}

/// Affine matrix [[M^m, W], [0, 1]] of gamma(m, W).
inline solvtm::exact::IntegerMatrix affine(const LatticeElement& g, const solvtm::exact::IntegerMatrix& m) {
  const std::size_t dim = m.dim();
  solvtm::exact::IntegerMatrix out(dim + 1);
  const auto p = solvtm::exact::power(m, g.m);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = p(r, c);
    out(r, dim) = g.w[r];
  }
  out(dim, dim) = 1;
  return out;
}

}  // namespace oracle
