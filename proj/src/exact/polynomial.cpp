#include "solvtm/exact/polynomial.hpp"

#include <sstream>
#include <utility>

#include "solvtm/error.hpp"

namespace solvtm::exact {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPolynomial RationalPolynomial::constant(Rational c) {
  return RationalPolynomial(std::vector<Rational>{std::move(c)});
}

RationalPolynomial RationalPolynomial::monomial(Rational c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  coeffs.back() = std::move(c);
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool RationalPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

bool RationalPolynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational RationalPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  RationalPolynomial out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
  return a += b;
}
RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
  return a -= b;
}
RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
  return a *= b;
}
RationalPolynomial operator*(const Rational& s, RationalPolynomial a) {
  return a *= RationalPolynomial::constant(s);
}

RationalPolynomial pow(const RationalPolynomial& p, unsigned e) {
  RationalPolynomial result = RationalPolynomial::constant(1);
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(
    const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational& lc = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] / lc;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial exact_quotient(const RationalPolynomial& a,
                                  const RationalPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw DomainError(b.to_string() + " does not divide " + a.to_string());
  return q;
}

bool divides(const RationalPolynomial& d, const RationalPolynomial& a) {
  return divmod(a, d).second.is_zero();
}

RationalPolynomial poly_gcd(const RationalPolynomial& p,
                            const RationalPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("undefined gcd");
  RationalPolynomial a = p, b = q;
  while (!b.is_zero()) {
    RationalPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RationalPolynomial reverse_poly(const RationalPolynomial& p) {
  if (p.is_zero() || p.coeff(0) == 0) throw DomainError("zero constant term");
  std::vector<Rational> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return RationalPolynomial(std::move(rev));
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  return exact_quotient(p, poly_gcd(p, p.derivative())).monic();
}

bool is_squarefree(const RationalPolynomial& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, p.derivative()).is_constant();
}

std::vector<RationalPolynomial> squarefree_decomposition(
    const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<RationalPolynomial> out;
  const RationalPolynomial a = p.monic();
  if (a.degree() == 0) return out;
  const RationalPolynomial b = a.derivative();
  const RationalPolynomial c = poly_gcd(a, b);
  RationalPolynomial w = exact_quotient(a, c);
  RationalPolynomial y = exact_quotient(b, c);
  RationalPolynomial z = y - w.derivative();
  while (w.degree() > 0) {
    RationalPolynomial g = z.is_zero() ? w : poly_gcd(w, z);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
    out.push_back(std::move(g));
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntegerMatrix companion_matrix(const RationalPolynomial& p) {
  if (p.degree() < 1 || !p.is_monic() || !p.is_integral())
    throw DomainError("companion matrix needs a monic integer polynomial of degree >= 1, got " +
                      p.to_string());
  const auto d = static_cast<std::size_t>(p.degree());
  IntegerMatrix c(d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i)
    c(i, d - 1) = -p.coeffs()[i].get_num();
  return c;
}

RationalPolynomial char_poly(const IntegerMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  IntegerMatrix acc = IntegerMatrix::identity(n);  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    const IntegerMatrix prod = m * acc;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    Integer c = -trace;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    coeffs[n - k] = Rational(c);
    if (k < n) {
      acc = prod;
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
  }
  return RationalPolynomial(std::move(coeffs));
}

RationalMatrix eval_poly_at_matrix(const RationalPolynomial& p,
                                   const IntegerMatrix& m) {
  const std::size_t n = m.dim();
  const RationalMatrix mr(m);
  RationalMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * mr;
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0)
      for (std::size_t d = 0; d < n; ++d) acc.set(d, d, acc(d, d) + c);
  }
  return acc;
}

namespace {

// Minimal polynomial of the vector e_j under M: the first linear relation
// among e_j, M e_j, M^2 e_j, ... found by incremental rational elimination.
RationalPolynomial krylov_minimal_polynomial(const RationalMatrix& m,
                                             std::size_t j) {
  const std::size_t n = m.rows();
  // Reduced basis vectors together with the polynomial each one represents.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  std::vector<RationalPolynomial> reps;

  std::vector<Rational> v(n, Rational(0));
  v[j] = 1;
  RationalPolynomial rep = RationalPolynomial::constant(1);
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<Rational> w = v;
    RationalPolynomial wrep = rep;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = w[pivots[b]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < n; ++i) w[i] -= f * basis[b][i];
      wrep -= f * reps[b];
    }
    std::size_t piv = 0;
    while (piv < n && w[piv] == 0) ++piv;
    if (piv == n) return wrep.monic();
    const Rational scale = w[piv];
    for (auto& x : w) x /= scale;
    basis.push_back(std::move(w));
    pivots.push_back(piv);
    reps.push_back((Rational(1) / scale) * wrep);

    std::vector<Rational> next(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m(r, c) != 0) next[r] += m(r, c) * v[c];
    v = std::move(next);
    rep *= RationalPolynomial::x();
  }
  throw DomainError("Krylov sequence did not terminate");
}

}  // namespace

RationalPolynomial minimal_polynomial(const IntegerMatrix& m) {
  const RationalMatrix mr(m);
  RationalPolynomial result = RationalPolynomial::constant(1);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const RationalPolynomial mu = krylov_minimal_polynomial(mr, j);
    result = exact_quotient(result * mu, poly_gcd(result, mu)).monic();
  }
  return result;
}

}  // namespace solvtm::exact
