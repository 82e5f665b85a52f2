#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"

namespace solvtm::exact {

std::uint64_t binomial(unsigned n, unsigned k);

/// All k-subsets of {0..n-1} in lexicographic order, as sorted index lists.
std::vector<std::vector<unsigned>> lex_subsets(unsigned n, unsigned k);

/// Position of a sorted k-subset of {0..n-1} in lexicographic order.
std::size_t lex_rank(const std::vector<unsigned>& subset, unsigned n);

/// k-th compound matrix: rows/columns indexed by lexicographic k-subsets,
/// entry (S, T) = det M[S, T]. k = 0 gives [1]. Throws DomainError for
/// k > dim.
IntegerMatrix exterior_power(const IntegerMatrix& m, unsigned k);

/// Compounds 0..k_max, each built from the previous one by Laplace
/// expansion along the first row of every minor.
std::vector<IntegerMatrix> exterior_powers(const IntegerMatrix& m,
                                           unsigned k_max);

}  // namespace solvtm::exact
