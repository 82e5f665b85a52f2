#pragma once

#include <Eigen/Dense>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace solvtm::spectrum {

/// Upper-triangular n x n complex matrix log R^T.
using DeltaMatrix = Eigen::MatrixXcd;

/// log of the Jordan form of M on the beta eigenspaces. Classes follow the
/// canonical order and blocks within a class are descending; a block
/// beta I + N maps to (log beta) I + sum_l (-1)^(l+1) N^l / (l beta^l).
DeltaMatrix compute_delta(const SpectrumReport& spectrum);
DeltaMatrix compute_delta(const exact::IntegerMatrix& m, double eps);

/// Upper-triangular Jordan matrix R^T matching compute_delta.
Eigen::MatrixXcd jordan_matrix(const SpectrumReport& spectrum);

}  // namespace solvtm::spectrum
