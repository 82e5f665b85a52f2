#pragma once

#include <Eigen/Dense>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace solvtm::lie {

struct EigenFrame {
  /// Unit eigenvector for alpha, first nonzero coordinate positive.
  Eigen::VectorXd a;
  /// Columns b_1..b_n: Jordan chains in canonical spectrum order, so that
  /// M B = B R with R = (Jordan matrix)^T.
  Eigen::MatrixXcd b;
  Eigen::MatrixXcd r;
  double residual_a = 0;
  double residual_b = 0;
  /// Smallest singular value of the real (2n+1) x (2n+1) matrix with rows
  /// (a_i, Re b^i, Im b^i).
  double min_singular_u = 0;
};

/// Throws PrecisionError when either residual exceeds eps.
EigenFrame eigenframe(const exact::IntegerMatrix& m, const spectrum::SpectrumReport& spectrum, double eps = 1e-9);

}  // namespace solvtm::lie
