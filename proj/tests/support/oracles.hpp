#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths being checked.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/exact/polynomial.hpp"

namespace oracle {

using solvtm::exact::Integer;
using solvtm::exact::IntegerMatrix;
using solvtm::exact::Rational;
using solvtm::exact::RationalPolynomial;

/// Cofactor expansion along the first row. Exponential, fine for dim <= 7.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r - 1].push_back(a[r][c]);
    const Integer sub = a[0][j] * laplace_det(minor);
    det += (j % 2) ? Integer(-sub) : sub;
  }
  return det;
}

inline std::vector<std::vector<Integer>> rows_of(const IntegerMatrix& m) {
  std::vector<std::vector<Integer>> out(m.dim(), std::vector<Integer>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Plain rational Gauss-Jordan rank.
inline std::size_t gauss_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// det(x I - M) evaluated exactly at an integer point.
inline Integer char_poly_at(const IntegerMatrix& m, long x) {
  auto a = rows_of(m);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) a[r][c] = (r == c ? Integer(x) : Integer(0)) - a[r][c];
  return laplace_det(a);
}

/// Companion matrix built directly (ones on subdiagonal, last column -c_i).
inline IntegerMatrix companion(const std::vector<long>& coeffs_low_to_high) {
  const std::size_t d = coeffs_low_to_high.size() - 1;
  IntegerMatrix c(d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -coeffs_low_to_high[i];
  return c;
}

inline IntegerMatrix block_diag(const std::vector<IntegerMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  IntegerMatrix out(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) out(off + r, off + c) = b(r, c);
    off += b.dim();
  }
  return out;
}

/// The 7x7 block-companion matrix of (X^3+X-1)(X^2+1)^2.
inline IntegerMatrix example_matrix() {
  return block_diag({companion({-1, 1, 0, 1}), companion({1, 0, 1}), companion({1, 0, 1})});
}

/// Companion of X^5 - X - 1.
inline IntegerMatrix generic_matrix() { return companion({-1, -1, 0, 0, 0, 1}); }

/// (X^3+X-1) block next to the single 4x4 companion of (X^2+1)^2.
inline IntegerMatrix jordan_witness_matrix() {
  return block_diag({companion({-1, 1, 0, 1}), companion({1, 0, 2, 0, 1})});
}

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntegerMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

/// Random unimodular matrix: product of elementary row operations.
inline IntegerMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
  IntegerMatrix s = IntegerMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < steps; ++k) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int f = coef(rng);
    for (std::size_t c = 0; c < n; ++c) s(i, c) += f * s(j, c);
  }
  return s;
}

/// Numeric eigenvalues of a companion-type polynomial by Durand-Kerner in
/// long double; independent of the library's root finder.
inline std::vector<std::complex<long double>> durand_kerner(const std::vector<long double>& monic_low_to_high) {
  using C = std::complex<long double>;
  const std::size_t d = monic_low_to_high.size() - 1;
  std::vector<C> z(d);
  const C seed(0.4L, 0.9L);
  C p = 1;
  for (std::size_t i = 0; i < d; ++i) {
    z[i] = p;
    p *= seed;
  }
  auto eval = [&](C x) {
    C acc = 0;
    for (std::size_t i = d + 1; i-- > 0;) acc = acc * x + monic_low_to_high[i];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (std::size_t i = 0; i < d; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= (z[i] - z[j]);
      const C step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-17L) break;
  }
  return z;
}

/// Integer polynomial product, coefficient lists low to high.
inline std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Admissibility judged numerically, factor by factor: exactly one real
/// eigenvalue overall, positive, not 1, and P(0) = -1 so that det M = 1.
inline bool factors_admissible(const std::vector<std::vector<long>>& factors) {
  std::vector<long> p{1};
  for (const auto& f : factors) p = poly_mul(p, f);
  const std::size_t deg = p.size() - 1;
  if (deg % 2 == 0 || deg < 5 || p[0] != -1) return false;
  long at_one = 0;
  for (long c : p) at_one += c;
  if (at_one == 0) return false;
  std::size_t reals = 0;
  bool positive = true;
  for (const auto& f : factors) {
    const auto roots = durand_kerner(std::vector<long double>(f.begin(), f.end()));
    for (const auto& r : roots) {
      if (std::abs(r.imag()) < 1e-7L) {
        ++reals;
        if (r.real() <= 0) positive = false;
      }
    }
  }
  return reals == 1 && positive;
}

struct SuiteMatrix {
  std::vector<std::vector<long>> factors;
  IntegerMatrix m;
};

/// Random admissible block-companion matrices of the requested size. Half
/// the draws are single companions of random polynomials; the rest pair an
/// odd-degree factor holding the real root with reciprocal-type even factors
/// (constant term 1), sometimes repeated.
inline SuiteMatrix random_admissible(std::mt19937& rng, std::size_t size) {
  std::uniform_int_distribution<int> coin(0, 1), small(-3, 3), tiny(-1, 1), quad(-2, 2);
  while (true) {
    std::vector<std::vector<long>> factors;
    if (coin(rng)) {
      std::vector<long> f{-1};
      for (std::size_t i = 1; i < size; ++i) f.push_back(small(rng));
      f.push_back(1);
      factors.push_back(f);
    } else {
      const std::size_t odd = size == 7 && coin(rng) ? 5 : 3;
      std::vector<long> f0{-1};
      for (std::size_t i = 1; i < odd; ++i) f0.push_back(small(rng));
      f0.push_back(1);
      factors.push_back(f0);
      std::size_t left = size - odd;
      while (left > 0) {
        if (left >= 4 && coin(rng)) {
          factors.push_back({1, quad(rng), small(rng), quad(rng), 1});
          left -= 4;
        } else if (!factors.empty() && factors.back().size() == 3 && coin(rng)) {
          factors.push_back(factors.back());
          left -= 2;
        } else {
          factors.push_back({1, tiny(rng), 1});
          left -= 2;
        }
      }
    }
    if (!factors_admissible(factors)) continue;
    std::vector<IntegerMatrix> blocks;
    for (const auto& f : factors) blocks.push_back(companion(f));
    return {factors, block_diag(blocks)};
  }
}

}  // namespace oracle
