#pragma once

#include "solvtm/forms/form.hpp"
#include "solvtm/spectrum/delta.hpp"

namespace solvtm::forms {

/// d as a derivation from d eta = log(alpha) eta^eta-bar and
/// d theta_k = -sum_{j>=k} Delta_kj (eta + eta-bar)^theta_j, with the
/// conjugate rules on the barred generators.
InvariantForm differential(const InvariantForm& f, const spectrum::DeltaMatrix& delta, double alpha);

/// d^c = -J^-1 d J.
InvariantForm d_c(const InvariantForm& f, const spectrum::DeltaMatrix& delta, double alpha);

/// d d^c f.
InvariantForm ddc(const InvariantForm& f, const spectrum::DeltaMatrix& delta, double alpha);

}  // namespace solvtm::forms
