#include "solvtm/exact/exterior.hpp"

#include "solvtm/error.hpp"

namespace solvtm::exact {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<unsigned>> lex_subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > n) return out;
  std::vector<unsigned> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++cur[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t lex_rank(const std::vector<unsigned>& subset, unsigned n) {
  const auto k = static_cast<unsigned>(subset.size());
  std::size_t rank = 0;
  unsigned next = 0;
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned v = next; v < subset[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    next = subset[i] + 1;
  }
  return rank;
}

namespace {

// Compound of order k from the compound of order k - 1.
IntegerMatrix next_compound(const IntegerMatrix& m, const IntegerMatrix& prev,
                            unsigned k) {
  const auto n = static_cast<unsigned>(m.dim());
  const auto subsets = lex_subsets(n, k);
  const std::size_t size = subsets.size();

  // For each k-subset: index of the subset minus its q-th element.
  std::vector<std::size_t> drop(size * k);
  std::vector<unsigned> reduced(k - 1);
  for (std::size_t s = 0; s < size; ++s)
    for (unsigned q = 0; q < k; ++q) {
      for (unsigned i = 0, j = 0; i < k; ++i)
        if (i != q) reduced[j++] = subsets[s][i];
      drop[s * k + q] = lex_rank(reduced, n);
    }

  IntegerMatrix out(size);
  Integer term;
  for (std::size_t s = 0; s < size; ++s) {
    const unsigned first_row = subsets[s][0];
    const std::size_t rest = drop[s * k];
    for (std::size_t t = 0; t < size; ++t) {
      Integer& entry = out(s, t);
      for (unsigned q = 0; q < k; ++q) {
        const Integer& a = m(first_row, subsets[t][q]);
        if (a == 0) continue;
        const Integer& minor = prev(rest, drop[t * k + q]);
        if (minor == 0) continue;
        mpz_mul(term.get_mpz_t(), a.get_mpz_t(), minor.get_mpz_t());
        if (q % 2) entry -= term;
        else entry += term;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<IntegerMatrix> exterior_powers(const IntegerMatrix& m,
                                           unsigned k_max) {
  if (k_max > m.dim())
    throw DomainError("exterior power degree " + std::to_string(k_max) +
                      " exceeds dimension " + std::to_string(m.dim()));
  std::vector<IntegerMatrix> out;
  out.push_back(IntegerMatrix::identity(1));
  for (unsigned k = 1; k <= k_max; ++k) out.push_back(next_compound(m, out.back(), k));
  return out;
}

IntegerMatrix exterior_power(const IntegerMatrix& m, unsigned k) {
  return std::move(exterior_powers(m, k).back());
}

}  // namespace solvtm::exact
