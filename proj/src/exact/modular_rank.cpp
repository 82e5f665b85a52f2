#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "solvtm/exact/rational_matrix.hpp"

namespace solvtm::exact {
namespace {

using u64 = std::uint64_t;

// Largest primes below 2^31, so that products of residues fit in 64 bits.
std::vector<u64> primes_below_2_31(std::size_t count) {
  std::vector<u64> out;
  Integer candidate = (Integer(1) << 31) - 1;
  while (out.size() < count) {
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) > 0)
      out.push_back(candidate.get_ui());
    candidate -= 2;
  }
  return out;
}

u64 inverse_mod(u64 a, u64 p) {
  u64 result = 1;
  u64 e = p - 2;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

struct Echelon {
  std::vector<u64> rows;                 // r x cols, row echelon form
  std::vector<std::size_t> pivot_cols;   // one per echelon row
};

Echelon echelon_mod(const std::vector<Integer>& entries, std::size_t rows,
                    std::size_t cols, u64 p) {
  std::vector<u64> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    a[i] = mpz_fdiv_ui(entries[i].get_mpz_t(), p);

  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(a[piv * cols + j], a[r * cols + j]);
    const u64 inv = inverse_mod(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * inv % p;
    const u64* pivot_row = &a[r * cols];
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64* row = &a[i * cols];
      if (row[c] == 0) continue;
      const u64 f = p - row[c];
      for (std::size_t j = c; j < cols; ++j) row[j] = (row[j] + f * pivot_row[j]) % p;
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r * cols);
  e.rows = std::move(a);
  return e;
}

// Kernel basis mod p: one vector per free column f, with 1 at f and 0 at the
// other free columns.
std::vector<std::vector<u64>> kernel_mod(const Echelon& e, std::size_t cols,
                                         u64 p) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = e.pivot_cols.size(); i-- > 0;) {
      const std::size_t pc = e.pivot_cols[i];
      u64 sum = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        sum = (sum + e.rows[i * cols + j] * v[j]) % p;
      v[pc] = (p - sum) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Rational> reconstruct(const Integer& u, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(t1 < 0 ? Integer(-r1) : r1, abs(t1));
  q.canonicalize();
  return q;
}

bool annihilates(const std::vector<Integer>& entries, std::size_t rows,
                 std::size_t cols, const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> w(cols);
  for (std::size_t j = 0; j < cols; ++j)
    w[j] = lcm / v[j].get_den() * v[j].get_num();
  for (std::size_t i = 0; i < rows; ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < cols; ++j)
      if (w[j] != 0 && entries[i * cols + j] != 0) sum += entries[i * cols + j] * w[j];
    if (sum != 0) return false;
  }
  return true;
}

constexpr std::size_t kMaxPrimes = 64;

}  // namespace

std::size_t certified_modular_rank(const std::vector<Integer>& entries,
                                   std::size_t rows, std::size_t cols) {
  static const std::vector<u64> primes = primes_below_2_31(kMaxPrimes);
  const std::size_t full = std::min(rows, cols);

  std::optional<std::size_t> best;
  std::vector<std::size_t> best_pivots;
  std::vector<std::vector<Integer>> residues;  // CRT images of kernel vectors
  Integer modulus = 1;

  for (u64 p : primes) {
    const Echelon e = echelon_mod(entries, rows, cols, p);
    const std::size_t r = e.pivot_cols.size();
    // rank mod p never exceeds the rational rank.
    if (r == full) return r;
    if (best && r < *best) continue;
    if (best && r == *best && e.pivot_cols != best_pivots) continue;
    if (!best || r > *best) {
      best = r;
      best_pivots = e.pivot_cols;
      residues.clear();
      modulus = 1;
    }

    const auto basis = kernel_mod(e, cols, p);
    if (residues.empty()) {
      residues.assign(basis.size(), std::vector<Integer>(cols, Integer(0)));
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t j = 0; j < cols; ++j) residues[b][j] = Integer(static_cast<unsigned long>(basis[b][j]));
      modulus = Integer(static_cast<unsigned long>(p));
    } else {
      // x = x_old + modulus * ((v - x_old) * modulus^{-1} mod p)
      const Integer pz(static_cast<unsigned long>(p));
      Integer minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t j = 0; j < cols; ++j) {
          Integer diff = Integer(static_cast<unsigned long>(basis[b][j])) - residues[b][j];
          Integer t = diff * minv;
          mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
          residues[b][j] += modulus * t;
        }
      modulus *= pz;
    }

    bool certified = true;
    for (const auto& res : residues) {
      std::vector<Rational> v(cols);
      for (std::size_t j = 0; j < cols && certified; ++j) {
        auto q = reconstruct(res[j], modulus);
        if (!q) certified = false;
        else v[j] = *q;
      }
      if (!certified || !annihilates(entries, rows, cols, v)) {
        certified = false;
        break;
      }
    }
    if (certified) return r;
  }
  return bareiss_rank(entries, rows, cols);
}

}  // namespace solvtm::exact
