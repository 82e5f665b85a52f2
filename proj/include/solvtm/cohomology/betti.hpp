#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/spectrum/roots.hpp"

namespace solvtm::cohomology {

/// g[k] = nullity of I - M^(wedge k), k = 0..2n+1, with g[0] = 1. Entries
/// left unknown by a --max-k cap are empty.
struct GeomMultTable {
  std::vector<std::optional<std::size_t>> g;

  bool complete() const;
};

/// h[k] for k = 0..2n+2; empty where an input g entry is unknown.
struct BettiTable {
  std::vector<std::optional<std::size_t>> h;

  bool complete() const;
};

/// Exact kernel dimensions for 1 <= k <= min(n, max_k); the remaining
/// degrees follow from g[k] = g[2n+1-k] (det M = 1).
GeomMultTable geometric_multiplicities(const exact::IntegerMatrix& m,
                                       std::optional<std::size_t> max_k = std::nullopt);

BettiTable betti_numbers(const GeomMultTable& g);
BettiTable betti_numbers(const exact::IntegerMatrix& m);

struct InvariantGenerator {
  /// 1-based eigenvalue indices: 1 is alpha, 1+i is beta_i, 1+n+i its
  /// conjugate.
  std::vector<unsigned> subset;
  bool with_dw = false;

  std::string word() const;
};

struct InvariantClassBasis {
  /// by_degree[k] lists the generators of H^k, k = 0..2n+2.
  std::vector<std::vector<InvariantGenerator>> by_degree;
};

/// Invariant representatives e_S and (dIm w/Im w) ^ e_S for the index
/// subsets S whose eigenvalue product is 1 within tol. Needs a diagonalizable
/// M and a complete table; throws DomainError otherwise and when the
/// numeric counts disagree with the exact g.
InvariantClassBasis invariant_basis(const exact::IntegerMatrix& m,
                                    const spectrum::SpectrumReport& spectrum, double tol,
                                    const GeomMultTable& g);
InvariantClassBasis invariant_basis(const exact::IntegerMatrix& m,
                                    const spectrum::SpectrumReport& spectrum, double tol);

}  // namespace solvtm::cohomology
