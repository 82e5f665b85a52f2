#pragma once

#include <cstddef>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"

namespace solvtm::exact {

/// Rectangular matrix of rationals, entries kept in lowest terms.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntegerMatrix& m);

  static RationalMatrix identity(std::size_t dim);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Rational value);

  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

/// Rank by fraction-free elimination after clearing row denominators.
std::size_t rank(const RationalMatrix& a);
std::size_t kernel_dim(const RationalMatrix& a);

/// Rank of an integer matrix. Small inputs go through Bareiss elimination;
/// large ones through the certified multi-modular path.
std::size_t rank(const IntegerMatrix& a);
std::size_t kernel_dim(const IntegerMatrix& a);

/// Bareiss rank on a dense row-major integer array (rows x cols).
std::size_t bareiss_rank(std::vector<Integer> entries, std::size_t rows,
                         std::size_t cols);

/// Rank computed modulo several primes, with an exact kernel certificate:
/// rank mod p bounds the rational rank from below, and reconstructed
/// rational kernel vectors verified by exact multiplication bound it from
/// above. Falls back to Bareiss when reconstruction does not converge.
std::size_t certified_modular_rank(const std::vector<Integer>& entries,
                                   std::size_t rows, std::size_t cols);

}  // namespace solvtm::exact
