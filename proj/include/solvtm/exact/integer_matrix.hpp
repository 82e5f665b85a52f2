#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace solvtm::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Square matrix of arbitrary-precision integers, stored row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t dim);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t dim);
  /// Throws DomainError unless `rows` is square and non-empty.
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t dim() const noexcept { return dim_; }

  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }

  std::span<const Integer> row(std::size_t r) const {
    return {entries_.data() + r * dim_, dim_};
  }

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Integer> operator*(const IntegerMatrix& a,
                               std::span<const Integer> v);

IntegerMatrix transpose(const IntegerMatrix& m);
IntegerMatrix block_diagonal(std::span<const IntegerMatrix> blocks);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

/// Inverse of a matrix with determinant +-1, via the adjugate.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// m^e for any integer e; negative exponents need det m = +-1.
IntegerMatrix power(const IntegerMatrix& m, long e);

}  // namespace solvtm::exact
