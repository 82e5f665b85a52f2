#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace solvtm::forms {

using Complex = std::complex<double>;

/// Left-invariant complex form on the coframe eta, theta_1..theta_n and
/// conjugates. Generator g is bit g of a word: eta = 0, theta_k = k,
/// eta-bar = n+1, theta_k-bar = n+1+k. A word lists its generators in
/// increasing bit order.
class InvariantForm {
 public:
  using Word = std::uint64_t;

  explicit InvariantForm(std::size_t n = 0) : n_(n) {}

  static InvariantForm constant(std::size_t n, Complex c);
  static InvariantForm generator(std::size_t n, std::size_t g);
  static InvariantForm eta(std::size_t n) { return generator(n, 0); }
  static InvariantForm theta(std::size_t n, std::size_t k) { return generator(n, k); }
  static InvariantForm eta_bar(std::size_t n) { return generator(n, n + 1); }
  static InvariantForm theta_bar(std::size_t n, std::size_t k) { return generator(n, n + 1 + k); }

  std::size_t n() const noexcept { return n_; }
  std::size_t generators() const noexcept { return 2 * n_ + 2; }
  const std::map<Word, Complex>& terms() const noexcept { return terms_; }

  void add(Word w, Complex c);
  Complex coeff(Word w) const;
  bool is_zero(double tol = 0) const;
  double max_abs() const;

  /// (p, q) of a word: unbarred and barred generator counts.
  std::pair<int, int> bidegree(Word w) const;
  /// Terms of bidegree (p, q) only.
  InvariantForm component(int p, int q) const;
  /// Terms of total degree k only.
  InvariantForm degree_part(int k) const;
  /// True when every term has bidegree (p, q).
  bool is_homogeneous(int p, int q) const;

  InvariantForm conj() const;
  bool is_real(double tol) const;

  InvariantForm& operator+=(const InvariantForm& o);
  InvariantForm& operator-=(const InvariantForm& o);
  InvariantForm operator-() const;

  /// Deterministic text form, e.g. "(0+1i) eta^etabar + (2-0i) theta1^theta2bar".
  std::string to_string() const;
  std::string generator_name(std::size_t g) const;

 private:
  std::size_t n_;
  std::map<Word, Complex> terms_;
};

InvariantForm operator+(InvariantForm a, const InvariantForm& b);
InvariantForm operator-(InvariantForm a, const InvariantForm& b);
InvariantForm operator*(Complex s, const InvariantForm& f);

/// Sign of merging two increasing generator lists into one.
int merge_sign(InvariantForm::Word a, InvariantForm::Word b);

InvariantForm wedge(const InvariantForm& f, const InvariantForm& g);
InvariantForm wedge_power(const InvariantForm& f, unsigned k);

/// Scales each (p, q) term by i^(q-p).
InvariantForm apply_J(const InvariantForm& f);
/// (-1)^deg J on each degree component.
InvariantForm apply_J_inverse(const InvariantForm& f);

}  // namespace solvtm::forms
