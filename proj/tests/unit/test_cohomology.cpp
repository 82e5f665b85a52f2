#include "doctest.h"
#include "solvtm/cohomology/betti.hpp"
#include "solvtm/error.hpp"
#include "solvtm/spectrum/admissibility.hpp"
#include "solvtm/spectrum/jordan.hpp"
#include "support/oracles.hpp"

using namespace solvtm;
using namespace solvtm::cohomology;
using exact::IntegerMatrix;

namespace {

std::vector<std::size_t> values(const std::vector<std::optional<std::size_t>>& v) {
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

/// Counts k-subsets of the oracle eigenvalues whose product is 1.
std::vector<std::size_t> subset_product_counts(const oracle::SuiteMatrix& s) {
  std::vector<std::complex<long double>> lambda;
  for (const auto& f : s.factors)
    for (const auto& z : oracle::durand_kerner(std::vector<long double>(f.begin(), f.end()))) lambda.push_back(z);
  const std::size_t size = lambda.size();
  std::vector<std::size_t> counts(size + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    std::complex<long double> p = 1;
    std::size_t k = 0;
    for (std::size_t i = 0; i < size; ++i)
      if (mask >> i & 1) {
        p *= lambda[i];
        ++k;
      }
    if (std::abs(p - 1.0L) < 1e-9L) ++counts[k];
  }
  return counts;
}

}  // namespace

TEST_CASE("geometric multiplicities and Betti numbers of the generic example") {
  const auto g = geometric_multiplicities(oracle::generic_matrix());
  CHECK(values(g.g) == std::vector<std::size_t>{1, 0, 0, 0, 0, 1});
  CHECK(values(betti_numbers(g).h) == std::vector<std::size_t>{1, 1, 0, 0, 0, 1, 1});
}

TEST_CASE("the 7x7 example has g_2 = 4") {
  // Eigenvalues i, i, -i, -i give four index pairs with product 1.
  const auto g = geometric_multiplicities(oracle::example_matrix());
  CHECK(values(g.g) == std::vector<std::size_t>{1, 0, 4, 1, 1, 4, 0, 1});
  CHECK(values(betti_numbers(g).h) == std::vector<std::size_t>{1, 1, 4, 5, 2, 5, 4, 1, 1});
}

TEST_CASE("max_k leaves the middle degrees unknown") {
  const auto g = geometric_multiplicities(oracle::example_matrix(), 1);
  CHECK_FALSE(g.complete());
  CHECK(g.g[1] == 0u);
  CHECK(g.g[6] == 0u);
  CHECK_FALSE(g.g[2].has_value());
  CHECK_FALSE(g.g[5].has_value());
  const auto h = betti_numbers(g);
  CHECK(h.h[1] == 1u);
  CHECK_FALSE(h.h[2].has_value());
  CHECK(h.h[7] == 1u);
}

TEST_CASE("exact g agrees with the numeric subset-product oracle") {
  std::mt19937 rng(401);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 16; ++trial) {
    const auto s = oracle::random_admissible(rng, trial % 2 ? 7 : 5);
    if (!spectrum::is_diagonalizable(s.m)) continue;
    ++checked;
    CHECK(values(geometric_multiplicities(s.m).g) == subset_product_counts(s));
  }
  CHECK(checked >= 10);
}

TEST_CASE("Betti table properties on random admissible matrices") {
  std::mt19937 rng(409);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = oracle::random_admissible(rng, trial % 2 ? 7 : 5);
    const auto h = values(betti_numbers(s.m).h);
    const std::size_t top = h.size() - 1;
    CHECK(h[1] == 1);
    long euler = 0;
    for (std::size_t k = 0; k <= top; ++k) {
      euler += (k % 2 ? -1 : 1) * static_cast<long>(h[k]);
      CHECK(h[k] == h[top - k]);
    }
    CHECK(euler == 0);
    const auto conj = oracle::random_unimodular(rng, s.m.dim(), 30);
    const auto similar = conj * s.m * exact::unimodular_inverse(conj);
    CHECK(values(betti_numbers(similar).h) == h);
  }
}

TEST_CASE("invariant_basis") {
  SUBCASE("generic matrix: only degrees 0, 1, 5, 6") {
    const auto m = oracle::generic_matrix();
    const auto b = invariant_basis(m, spectrum::analyze_spectrum(m, 1e-12), 1e-9);
    REQUIRE(b.by_degree.size() == 7);
    CHECK(b.by_degree[0].size() == 1);
    CHECK(b.by_degree[0][0].word() == "1");
    CHECK(b.by_degree[1].size() == 1);
    CHECK(b.by_degree[1][0].word() == "dIm w/Im w");
    for (int k = 2; k <= 4; ++k) CHECK(b.by_degree[static_cast<std::size_t>(k)].empty());
    CHECK(b.by_degree[5].size() == 1);
    CHECK(b.by_degree[5][0].word() == "e_1^e_2^e_3^e_4^e_5");
    CHECK(b.by_degree[6].size() == 1);
  }
  SUBCASE("example matrix, degree 2: the four pairs {i, -i}") {
    const auto m = oracle::example_matrix();
    const auto b = invariant_basis(m, spectrum::analyze_spectrum(m, 1e-12), 1e-9);
    REQUIRE(b.by_degree[2].size() == 4);
    for (const auto& gen : b.by_degree[2]) {
      CHECK_FALSE(gen.with_dw);
      REQUIRE(gen.subset.size() == 2);
      // beta_2 = beta_3 = i sit at indices 3, 4; their conjugates at 6, 7.
      CHECK((gen.subset[0] == 3 || gen.subset[0] == 4));
      CHECK((gen.subset[1] == 6 || gen.subset[1] == 7));
    }
    // Degree 3: alpha |beta_1|^2 = 1 plus dIm w/Im w times each pair.
    REQUIRE(b.by_degree[3].size() == 5);
    CHECK(b.by_degree[3][0].subset == std::vector<unsigned>{1, 2, 5});
    CHECK_FALSE(b.by_degree[3][0].with_dw);
    for (std::size_t i = 1; i < 5; ++i) CHECK(b.by_degree[3][i].with_dw);
  }
  SUBCASE("refusals") {
    const auto w = oracle::jordan_witness_matrix();
    CHECK_THROWS_AS(invariant_basis(w, spectrum::analyze_spectrum(w, 1e-12), 1e-9), DomainError);
    const auto m = oracle::example_matrix();
    const auto spec = spectrum::analyze_spectrum(m, 1e-12);
    CHECK_THROWS_WITH_AS(invariant_basis(m, spec, 10.0), "tolerance inconsistent, adjust tol or precision",
                         DomainError);
    CHECK_THROWS_AS(invariant_basis(m, spec, 1e-9, geometric_multiplicities(m, 1)), DomainError);
  }
}
