#include "solvtm/cohomology/betti.hpp"

#include <complex>

#include "solvtm/error.hpp"
#include "solvtm/exact/exterior.hpp"
#include "solvtm/exact/rational_matrix.hpp"
#include "solvtm/spectrum/admissibility.hpp"

namespace solvtm::cohomology {

bool GeomMultTable::complete() const {
  for (const auto& v : g)
    if (!v) return false;
  return true;
}

bool BettiTable::complete() const {
  for (const auto& v : h)
    if (!v) return false;
  return true;
}

GeomMultTable geometric_multiplicities(const exact::IntegerMatrix& m, std::optional<std::size_t> max_k) {
  const std::size_t size = m.dim();
  if (size % 2 == 0) throw DomainError("geometric multiplicities need an odd-sized matrix");
  const std::size_t n = (size - 1) / 2;
  const std::size_t top = max_k ? std::min(n, *max_k) : n;

  GeomMultTable table;
  table.g.assign(size + 1, std::nullopt);
  table.g[0] = 1;
  table.g[size] = 1;
  const auto powers = exact::exterior_powers(m, static_cast<unsigned>(top));
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& wedge = powers[k];
    const std::size_t nullity = exact::kernel_dim(exact::IntegerMatrix::identity(wedge.dim()) - wedge);
    table.g[k] = nullity;
    table.g[size - k] = nullity;
  }
  return table;
}

BettiTable betti_numbers(const GeomMultTable& g) {
  const std::size_t top = g.g.size();  // 2n+2
  BettiTable b;
  b.h.assign(top + 1, std::nullopt);
  b.h[0] = 1;
  for (std::size_t k = 1; k < top; ++k)
    if (g.g[k - 1] && g.g[k]) b.h[k] = *g.g[k - 1] + *g.g[k];
  b.h[top] = g.g[top - 1];
  return b;
}

BettiTable betti_numbers(const exact::IntegerMatrix& m) { return betti_numbers(geometric_multiplicities(m)); }

std::string InvariantGenerator::word() const {
  std::string out = with_dw ? "dIm w/Im w" : "";
  for (unsigned i : subset) {
    if (!out.empty()) out += "^";
    out += "e_" + std::to_string(i);
  }
  return out.empty() ? "1" : out;
}

InvariantClassBasis invariant_basis(const exact::IntegerMatrix& m, const spectrum::SpectrumReport& spectrum,
                                    double tol, const GeomMultTable& g) {
  if (!spectrum::is_diagonalizable(m))
    throw DomainError("invariant representatives are only known for diagonalizable M");
  if (!g.complete()) throw DomainError("invariant_basis needs the full table of geometric multiplicities");
  const std::size_t n = spectrum.betas.size();
  const std::size_t size = 2 * n + 1;
  if (m.dim() != size || g.g.size() != size + 1) throw DomainError("spectrum does not match M");

  std::vector<std::complex<double>> lambda{spectrum.alpha};
  for (const auto& b : spectrum.betas) lambda.push_back(b);
  for (const auto& b : spectrum.betas) lambda.push_back(std::conj(b));

  std::vector<std::vector<std::vector<unsigned>>> marked(size + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    std::complex<double> product = 1;
    std::vector<unsigned> subset;
    for (std::size_t i = 0; i < size; ++i)
      if (mask >> i & 1) {
        product *= lambda[i];
        subset.push_back(static_cast<unsigned>(i + 1));
      }
    if (std::abs(product - 1.0) <= tol) marked[subset.size()].push_back(std::move(subset));
  }
  for (std::size_t k = 0; k <= size; ++k)
    if (marked[k].size() != *g.g[k]) throw DomainError("tolerance inconsistent, adjust tol or precision");

  InvariantClassBasis basis;
  basis.by_degree.resize(size + 2);
  for (std::size_t k = 0; k <= size + 1; ++k) {
    if (k <= size)
      for (const auto& s : marked[k]) basis.by_degree[k].push_back({s, false});
    if (k >= 1)
      for (const auto& s : marked[k - 1]) basis.by_degree[k].push_back({s, true});
  }
  return basis;
}

InvariantClassBasis invariant_basis(const exact::IntegerMatrix& m, const spectrum::SpectrumReport& spectrum,
                                    double tol) {
  return invariant_basis(m, spectrum, tol, geometric_multiplicities(m));
}

}  // namespace solvtm::cohomology
