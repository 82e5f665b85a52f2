#include "solvtm/spectrum/delta.hpp"

#include <complex>

#include "solvtm/spectrum/jordan.hpp"

namespace solvtm::spectrum {

DeltaMatrix compute_delta(const SpectrumReport& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.betas.size());
  DeltaMatrix d = DeltaMatrix::Zero(n, n);
  Eigen::Index pos = 0;
  for (const auto& c : spectrum.classes) {
    const std::complex<double> log_beta = std::log(c.value);
    const std::vector<unsigned> blocks =
        c.blocks.empty() ? std::vector<unsigned>(c.multiplicity, 1u) : c.blocks;
    for (unsigned size : blocks) {
      for (unsigned i = 0; i < size; ++i) d(pos + i, pos + i) = log_beta;
      for (unsigned l = 1; l < size; ++l) {
        const double sign = l % 2 == 1 ? 1.0 : -1.0;
        const std::complex<double> v = sign / (static_cast<double>(l) * std::pow(c.value, static_cast<int>(l)));
        for (unsigned i = 0; i + l < size; ++i) d(pos + i, pos + i + l) = v;
      }
      pos += size;
    }
  }
  return d;
}

Eigen::MatrixXcd jordan_matrix(const SpectrumReport& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.betas.size());
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
  Eigen::Index pos = 0;
  for (const auto& c : spectrum.classes) {
    const std::vector<unsigned> blocks =
        c.blocks.empty() ? std::vector<unsigned>(c.multiplicity, 1u) : c.blocks;
    for (unsigned size : blocks) {
      for (unsigned i = 0; i < size; ++i) {
        r(pos + i, pos + i) = c.value;
        if (i + 1 < size) r(pos + i, pos + i + 1) = 1.0;
      }
      pos += size;
    }
  }
  return r;
}

DeltaMatrix compute_delta(const exact::IntegerMatrix& m, double eps) {
  return compute_delta(analyze_spectrum(m, eps));
}

}  // namespace solvtm::spectrum
