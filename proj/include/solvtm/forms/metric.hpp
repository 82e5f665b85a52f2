#pragma once

#include <Eigen/Dense>
#include <optional>

#include "solvtm/forms/form.hpp"
#include "solvtm/spectrum/delta.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace solvtm::forms {

/// omega = sum c_i eta^theta_i-bar + sum conj(c_i) eta-bar^theta_i
///       + sum conj(a_ij) theta_i^theta_j-bar + b eta^eta-bar.
/// Real when a_ij = -conj(a_ji) and b is imaginary.
struct MetricCoefficients {
  Eigen::MatrixXcd a;
  Eigen::VectorXcd c;
  Complex b = 0;

  InvariantForm to_form() const;
  bool is_real(double tol) const;
};

/// i (eta^eta-bar + sum theta_j^theta_j-bar): a_jj = -i, b = i.
MetricCoefficients standard_metric(std::size_t n);

/// 2 Delta^* A Delta + (Delta^*)^2 A + A Delta^2 + log(alpha) (Delta^* A + A Delta).
Eigen::MatrixXcd pluriclosed_residual(const Eigen::MatrixXcd& a, const spectrum::DeltaMatrix& delta, double alpha);

/// dd^c omega computed in the DGA, sup norm <= tol. Throws DomainError
/// unless omega is a real (1,1) form.
bool ddc_check(const InvariantForm& omega, const spectrum::DeltaMatrix& delta, double alpha, double tol);

struct LeeForm {
  InvariantForm theta;
  /// Coefficient of eta + eta-bar in theta.
  double lee_coefficient = 0;
  double residual = 0;
};

/// Least-squares solve of d(omega^n) = theta ^ omega^n over all real
/// invariant 1-forms; succeeds when the residual and d theta are both
/// within tol.
std::optional<LeeForm> lcb_verify(const InvariantForm& omega, const spectrum::DeltaMatrix& delta, double alpha,
                                  double tol);

/// a_ik log(alpha beta_i conj(beta_k)) log(beta_i conj(beta_k)). Diagonal
/// spectra only; throws DomainError("diagonal case only") otherwise.
Eigen::MatrixXcd astheno_residual_diagonal(const Eigen::MatrixXcd& a, const spectrum::SpectrumReport& spectrum,
                                           double alpha);

/// Sup norm of dd^c(omega^(n-1)) in the DGA.
double astheno_residual_dga(const InvariantForm& omega, const spectrum::DeltaMatrix& delta, double alpha);

/// Real symmetric matrix g(U, V) = omega(U, J V) on the basis A, X,
/// Y_1..Y_2n, with J X = A and J Y_j = Y_{n+j}.
Eigen::MatrixXd metric_gram(const InvariantForm& omega);

/// Smallest eigenvalue of metric_gram exceeds tol.
bool positivity_check(const InvariantForm& omega, double tol);

}  // namespace solvtm::forms
