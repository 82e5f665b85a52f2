#pragma once

#include <Eigen/Dense>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/spectrum/delta.hpp"

namespace solvtm::lie {

/// A(x, t, z) in the solvable group G.
struct GroupElement {
  double x = 0;
  double t = 0;
  Eigen::VectorXcd z;
};

/// A(x1, t1, z1) A(x2, t2, z2) = A(alpha^t1 x2 + x1, t1 + t2, (R^t1)^T z2 + z1),
/// with (R^t)^T = exp(t Delta) for Delta = log R^T.
GroupElement group_mul(const GroupElement& g1, const GroupElement& g2, const spectrum::DeltaMatrix& delta,
                       double alpha);

/// gamma(m, W) in the lattice.
struct LatticeElement {
  long m = 0;
  std::vector<exact::Integer> w;

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

/// gamma(m1 + m2, W1 + M^m1 W2), exact: the product of the affine matrices
/// [[M^m, W], [0, 1]].
LatticeElement lattice_mul(const LatticeElement& g1, const LatticeElement& g2, const exact::IntegerMatrix& m);

/// gamma(-m, -M^-m W).
LatticeElement lattice_inverse(const LatticeElement& g, const exact::IntegerMatrix& m);

}  // namespace solvtm::lie
