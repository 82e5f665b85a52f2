#include "solvtm/exact/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "solvtm/error.hpp"
#include "solvtm/exact/exterior.hpp"

namespace solvtm::exact {

IntegerMatrix::IntegerMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Integer(0)) {}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DomainError("matrix is not square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim) {
  IntegerMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) throw DomainError("matrix is empty");
  IntegerMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw DomainError("matrix is not square: row " + std::to_string(r + 1) +
                        " has " + std::to_string(rows[r].size()) +
                        " entries, expected " + std::to_string(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << dim_ << '\n';
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void require_same_dim(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
}

}  // namespace

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_dim(a, b);
  IntegerMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_dim(a, b);
  IntegerMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  IntegerMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

std::vector<Integer> operator*(const IntegerMatrix& a,
                               std::span<const Integer> v) {
  if (v.size() != a.dim()) throw DomainError("vector length mismatch");
  std::vector<Integer> out(a.dim(), Integer(0));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix t(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) t(c, r) = m(r, c);
  return t;
}

IntegerMatrix block_diagonal(std::span<const IntegerMatrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.dim();
  IntegerMatrix out(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c)
        out(offset + r, offset + c) = b(r, c);
    offset += b.dim();
  }
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  std::vector<Integer> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);

  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a[k * n + c], a[swap_row * n + c]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const std::size_t n = m.dim();
  const Integer det = determinant(m);
  if (det != 1 && det != -1)
    throw DomainError("matrix is not unimodular (det = " + det.get_str() + ")");
  if (n == 1) {
    IntegerMatrix inv(1);
    inv(0, 0) = det;
    return inv;
  }
  // The (n-1)-th compound holds every cofactor minor: entry (S, T) with
  // S = all rows but i, T = all columns but j sits at lex position n-1-i.
  const IntegerMatrix minors = exterior_power(m, static_cast<unsigned>(n - 1));
  IntegerMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(M)(i, j) = (-1)^{i+j} det M with row j and column i removed.
      Integer cof = minors(n - 1 - j, n - 1 - i);
      if ((i + j) % 2) cof = -cof;
      inv(i, j) = cof * det;
    }
  return inv;
}

IntegerMatrix power(const IntegerMatrix& m, long e) {
  IntegerMatrix base = e < 0 ? unimodular_inverse(m) : m;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  IntegerMatrix result = IntegerMatrix::identity(m.dim());
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

}  // namespace solvtm::exact
