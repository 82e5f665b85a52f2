#include "solvtm/forms/form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <vector>

#include "solvtm/error.hpp"

namespace solvtm::forms {

namespace {

int popcount(InvariantForm::Word w) { return std::popcount(w); }

Complex i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

InvariantForm InvariantForm::constant(std::size_t n, Complex c) {
  InvariantForm f(n);
  f.add(0, c);
  return f;
}

InvariantForm InvariantForm::generator(std::size_t n, std::size_t g) {
  if (g >= 2 * n + 2) throw DomainError("generator index out of range");
  InvariantForm f(n);
  f.add(Word{1} << g, 1);
  return f;
}

void InvariantForm::add(Word w, Complex c) {
  if (c == Complex(0)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0)) terms_.erase(it);
  }
}

Complex InvariantForm::coeff(Word w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Complex(0) : it->second;
}

bool InvariantForm::is_zero(double tol) const { return max_abs() <= tol; }

double InvariantForm::max_abs() const {
  double m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::pair<int, int> InvariantForm::bidegree(Word w) const {
  const Word low = (Word{1} << (n_ + 1)) - 1;
  return {popcount(w & low), popcount(w & ~low)};
}

InvariantForm InvariantForm::component(int p, int q) const {
  InvariantForm out(n_);
  for (const auto& [w, c] : terms_)
    if (bidegree(w) == std::pair{p, q}) out.terms_.emplace(w, c);
  return out;
}

InvariantForm InvariantForm::degree_part(int k) const {
  InvariantForm out(n_);
  for (const auto& [w, c] : terms_)
    if (popcount(w) == k) out.terms_.emplace(w, c);
  return out;
}

bool InvariantForm::is_homogeneous(int p, int q) const {
  for (const auto& [w, c] : terms_)
    if (bidegree(w) != std::pair{p, q}) return false;
  return true;
}

InvariantForm InvariantForm::conj() const {
  InvariantForm out(n_);
  const std::size_t half = n_ + 1;
  for (const auto& [w, c] : terms_) {
    std::vector<std::size_t> mapped;
    for (std::size_t g = 0; g < generators(); ++g)
      if (w >> g & 1) mapped.push_back(g < half ? g + half : g - half);
    int inversions = 0;
    Word image = 0;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      image |= Word{1} << mapped[i];
      for (std::size_t j = i + 1; j < mapped.size(); ++j)
        if (mapped[i] > mapped[j]) ++inversions;
    }
    out.add(image, (inversions % 2 ? -1.0 : 1.0) * std::conj(c));
  }
  return out;
}

bool InvariantForm::is_real(double tol) const { return (*this - conj()).max_abs() <= tol; }

InvariantForm& InvariantForm::operator+=(const InvariantForm& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

InvariantForm& InvariantForm::operator-=(const InvariantForm& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

InvariantForm InvariantForm::operator-() const {
  InvariantForm out(n_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

std::string InvariantForm::generator_name(std::size_t g) const {
  const std::size_t half = n_ + 1;
  const bool bar = g >= half;
  const std::size_t k = bar ? g - half : g;
  std::string s = k == 0 ? "eta" : "theta" + std::to_string(k);
  return bar ? s + "bar" : s;
}

std::string InvariantForm::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Word, Complex>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return popcount(a.first) < popcount(b.first); });
  std::string out;
  for (const auto& [w, c] : sorted) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real() + 0.0, c.imag() + 0.0);
    if (!out.empty()) out += " + ";
    out += buf;
    std::string word;
    for (std::size_t g = 0; g < generators(); ++g)
      if (w >> g & 1) word += (word.empty() ? "" : "^") + generator_name(g);
    if (!word.empty()) out += " " + word;
  }
  return out;
}

InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }

InvariantForm operator*(Complex s, const InvariantForm& f) {
  InvariantForm out(f.n());
  for (const auto& [w, c] : f.terms()) out.add(w, s * c);
  return out;
}

int merge_sign(InvariantForm::Word a, InvariantForm::Word b) {
  int swaps = 0;
  while (b) {
    const int j = std::countr_zero(b);
    swaps += std::popcount(j + 1 < 64 ? a >> (j + 1) : 0);
    b &= b - 1;
  }
  return swaps % 2 ? -1 : 1;
}

InvariantForm wedge(const InvariantForm& f, const InvariantForm& g) {
  if (f.n() != g.n()) throw DomainError("wedge of forms on different coframes");
  InvariantForm out(f.n());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      if (a & b) continue;
      out.add(a | b, static_cast<double>(merge_sign(a, b)) * ca * cb);
    }
  return out;
}

InvariantForm wedge_power(const InvariantForm& f, unsigned k) {
  InvariantForm out = InvariantForm::constant(f.n(), 1);
  for (unsigned i = 0; i < k; ++i) out = wedge(out, f);
  return out;
}

InvariantForm apply_J(const InvariantForm& f) {
  InvariantForm out(f.n());
  for (const auto& [w, c] : f.terms()) {
    const auto [p, q] = f.bidegree(w);
    out.add(w, i_power(q - p) * c);
  }
  return out;
}

InvariantForm apply_J_inverse(const InvariantForm& f) {
  InvariantForm out(f.n());
  for (const auto& [w, c] : f.terms()) {
    const auto [p, q] = f.bidegree(w);
    const double sign = (p + q) % 2 ? -1.0 : 1.0;
    out.add(w, sign * i_power(q - p) * c);
  }
  return out;
}

}  // namespace solvtm::forms
