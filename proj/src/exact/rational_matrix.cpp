#include "solvtm/exact/rational_matrix.hpp"

#include <utility>

#include "solvtm/error.hpp"

namespace solvtm::exact {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(const IntegerMatrix& m)
    : RationalMatrix(m.dim(), m.dim()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      entries_[r * cols_ + c] = Rational(m(r, c));
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

void RationalMatrix::set(std::size_t r, std::size_t c, Rational value) {
  value.canonicalize();
  entries_[r * cols_ + c] = std::move(value);
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix shapes differ");
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c) + b(r, c));
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c) - b(r, c));
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not chain");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Rational sum = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (a(r, k) != 0) sum += a(r, k) * b(k, c);
      out.set(r, c, std::move(sum));
    }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, s * a(r, c));
  return out;
}

std::size_t bareiss_rank(std::vector<Integer> a, std::size_t rows,
                         std::size_t cols) {
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[p * cols + j], a[rank * cols + j]);
    const Integer pivot = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer factor = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[i * cols + j] * pivot - factor * a[rank * cols + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = std::move(v);
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank(const RationalMatrix& a) {
  std::vector<Integer> scaled(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Integer v = lcm / a(r, c).get_den();
      scaled[r * a.cols() + c] = v * a(r, c).get_num();
    }
  }
  return bareiss_rank(std::move(scaled), a.rows(), a.cols());
}

std::size_t kernel_dim(const RationalMatrix& a) { return a.cols() - rank(a); }

namespace {

// Bareiss on anything up to this size finishes in well under a second.
constexpr std::size_t kBareissLimit = 64;

}  // namespace

std::size_t rank(const IntegerMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Integer> entries(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) entries[r * n + c] = a(r, c);
  if (n <= kBareissLimit) return bareiss_rank(std::move(entries), n, n);
  return certified_modular_rank(entries, n, n);
}

std::size_t kernel_dim(const IntegerMatrix& a) { return a.dim() - rank(a); }

}  // namespace solvtm::exact
