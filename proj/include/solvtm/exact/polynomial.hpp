#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solvtm/exact/integer_matrix.hpp"
#include "solvtm/exact/rational_matrix.hpp"

namespace solvtm::exact {

/// Dense univariate polynomial over Q; coeffs()[i] is the coefficient of X^i.
/// The highest stored coefficient is always nonzero (the zero polynomial has
/// no coefficients).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<long> coeffs);

  static RationalPolynomial constant(Rational c);
  static RationalPolynomial monomial(Rational c, int degree);
  static RationalPolynomial x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const;
  bool is_integral() const;

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Zero for indices beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  RationalPolynomial derivative() const;
  /// Divides by the leading coefficient; zero stays zero.
  RationalPolynomial monic() const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial&,
                         const RationalPolynomial&) = default;

  /// Human-readable form, e.g. "x^3 + x - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b);
RationalPolynomial operator*(const Rational& s, RationalPolynomial a);
RationalPolynomial pow(const RationalPolynomial& p, unsigned e);

/// Euclidean division; throws DomainError on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(
    const RationalPolynomial& a, const RationalPolynomial& b);
/// Exact quotient; throws DomainError if b does not divide a.
RationalPolynomial exact_quotient(const RationalPolynomial& a,
                                  const RationalPolynomial& b);
bool divides(const RationalPolynomial& d, const RationalPolynomial& a);

/// Monic gcd over Q. Throws DomainError("undefined gcd") if both are zero.
RationalPolynomial poly_gcd(const RationalPolynomial& p,
                            const RationalPolynomial& q);

/// X^deg p * p(1/X). Throws DomainError("zero constant term") if p(0) = 0.
RationalPolynomial reverse_poly(const RationalPolynomial& p);

/// p / gcd(p, p'), monic. Throws DomainError on the zero polynomial.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

bool is_squarefree(const RationalPolynomial& p);

/// Yun's decomposition of a nonzero p: monic, squarefree, pairwise coprime
/// factors a_1, a_2, ... with p = lc(p) * prod a_m^m. Entry i holds a_{i+1};
/// trailing constant factors are dropped.
std::vector<RationalPolynomial> squarefree_decomposition(
    const RationalPolynomial& p);

/// Companion matrix (ones on the subdiagonal, last column -c_0..-c_{d-1}).
/// Requires a monic integer polynomial of degree >= 1.
IntegerMatrix companion_matrix(const RationalPolynomial& p);

/// det(X I - M), computed by the Faddeev-LeVerrier recurrence in exact
/// integer arithmetic.
RationalPolynomial char_poly(const IntegerMatrix& m);

/// p(M) by Horner's rule.
RationalMatrix eval_poly_at_matrix(const RationalPolynomial& p,
                                   const IntegerMatrix& m);

/// Minimal polynomial of M (monic), as the lcm of the Krylov minimal
/// polynomials of the standard basis vectors.
RationalPolynomial minimal_polynomial(const IntegerMatrix& m);

}  // namespace solvtm::exact
