#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solvtm/spectrum/delta.hpp"

namespace solvtm::lie {

/// Real structure constants on the basis A, X, Y_1..Y_n, Y_{n+1}..Y_{2n}
/// (indices 0, 1, 2..n+1, n+2..2n+1): [b_i, b_j] = sum_k c(i, j, k) b_k.
class StructureTensor {
 public:
  explicit StructureTensor(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return 2 * n_ + 2; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }

  /// Sets [b_i, b_j] = -[b_j, b_i] = v b_k.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, double v);

  std::string label(std::size_t i) const;

  static constexpr std::size_t A = 0;
  static constexpr std::size_t X = 1;
  std::size_t Y(std::size_t j) const { return 1 + j; }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim() + j) * dim() + k; }
  std::size_t n_;
  std::vector<double> c_;
};

StructureTensor structure_constants(const spectrum::DeltaMatrix& delta, double alpha);

/// max over basis triples of the sup norm of the Jacobiator.
double jacobi_residual(const StructureTensor& t);

struct SolvabilityProfile {
  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> lower_central_series;
  bool solvable = false;
  bool nilpotent = false;
  double trace_adA = 0;
};

/// Dimensions of the derived and lower central series, numerically (ranks
/// with relative threshold tol), and the trace of ad_A.
SolvabilityProfile solvability_profile(const StructureTensor& t, double tol = 1e-9);

}  // namespace solvtm::lie
