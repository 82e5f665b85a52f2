#include "solvtm/lie/group.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "solvtm/error.hpp"

namespace solvtm::lie {

GroupElement group_mul(const GroupElement& g1, const GroupElement& g2, const spectrum::DeltaMatrix& delta,
                       double alpha) {
  if (g1.z.size() != delta.rows() || g2.z.size() != delta.rows())
    throw DomainError("group element dimension does not match Delta");
  const Eigen::MatrixXcd rt = (std::complex<double>(g1.t) * delta).exp();
  return {std::pow(alpha, g1.t) * g2.x + g1.x, g1.t + g2.t, rt * g2.z + g1.z};
}

namespace {

std::vector<exact::Integer> apply_power(const exact::IntegerMatrix& m, long e, const std::vector<exact::Integer>& w) {
  if (w.size() != m.dim()) throw DomainError("lattice vector dimension does not match M");
  return exact::power(m, e) * std::span<const exact::Integer>(w);
}

}  // namespace

LatticeElement lattice_mul(const LatticeElement& g1, const LatticeElement& g2, const exact::IntegerMatrix& m) {
  auto w = apply_power(m, g1.m, g2.w);
  if (g1.w.size() != w.size()) throw DomainError("lattice vector dimension does not match M");
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += g1.w[i];
  return {g1.m + g2.m, std::move(w)};
}

LatticeElement lattice_inverse(const LatticeElement& g, const exact::IntegerMatrix& m) {
  auto w = apply_power(m, -g.m, g.w);
  for (auto& x : w) x = -x;
  return {-g.m, std::move(w)};
}

}  // namespace solvtm::lie
