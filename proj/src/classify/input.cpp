#include "solvtm/classify/input.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "solvtm/error.hpp"

namespace solvtm::classify {
namespace {

using exact::Integer;
using exact::RationalPolynomial;

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  RationalPolynomial parse() {
    auto p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + s_ + "\" at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '('; }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  RationalPolynomial expr() {
    auto p = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+')
        p += term();
      else
        p -= term();
    }
    return p;
  }

  RationalPolynomial term() {
    auto p = unary();
    for (char c = peek(); c == '*' || starts_primary(c); c = peek()) {
      if (c == '*') ++pos_;
      p *= power();
    }
    return p;
  }

  RationalPolynomial unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      auto p = unary();
      return c == '-' ? -p : p;
    }
    return power();
  }

  RationalPolynomial power() {
    auto base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const Integer e = integer();
    if (e > 10000) fail("exponent too large");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  RationalPolynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return RationalPolynomial::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalPolynomial::constant(exact::Rational(integer()));
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Integer json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(v.dump());
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("matrix entry \"" + s + "\" is not an integer");
    return z;
  }
  throw ParseError("matrix entry " + v.dump() + " is not an integer");
}

}  // namespace

RationalPolynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

std::vector<FactorSpec> parse_factors(const std::string& text) {
  std::vector<FactorSpec> out;
  std::string items = text;
  std::replace(items.begin(), items.end(), ',', ';');
  std::stringstream ss(items);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    FactorSpec f;
    if (item.rfind("f0:", 0) == 0) {
      f.role = FactorRole::F0;
      item = trim(item.substr(3));
    } else if (item.rfind("h:", 0) == 0) {
      f.role = FactorRole::H;
      item = trim(item.substr(2));
    }
    bool done = false;
    if (!item.empty() && item.front() == '(') {
      int depth = 0;
      std::size_t close = 0;
      for (std::size_t i = 0; i < item.size(); ++i) {
        if (item[i] == '(') ++depth;
        if (item[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      const std::string rest = trim(item.substr(close + 1));
      if (close > 0 && rest.size() > 1 && rest.front() == '^' &&
          trim(rest.substr(1)).find_first_not_of("0123456789") == std::string::npos) {
        f.poly = parse_polynomial(item.substr(1, close - 1));
        const Integer k(trim(rest.substr(1)));
        if (k < 1 || k > 1000) throw ParseError("bad multiplicity in \"" + item + "\"");
        f.multiplicity = static_cast<unsigned>(k.get_ui());
        done = true;
      }
    }
    if (!done) f.poly = parse_polynomial(item);
    if (f.poly.degree() < 1 || !f.poly.is_monic())
      throw ParseError("factor \"" + item + "\" is not a monic polynomial of positive degree");
    out.push_back(std::move(f));
  }
  if (out.empty()) throw ParseError("no factors in \"" + text + "\"");
  return out;
}

exact::IntegerMatrix parse_matrix(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("empty matrix input");
  std::vector<std::vector<Integer>> rows;
  if (t.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ParseError("JSON input needs a \"matrix\" array");
    for (const auto& row : doc["matrix"]) {
      if (!row.is_array()) throw ParseError("matrix rows must be arrays");
      auto& r = rows.emplace_back();
      for (const auto& v : row) r.push_back(json_integer(v));
    }
  } else {
    std::istringstream in(t);
    std::string tok;
    auto next = [&](const char* what) {
      if (!(in >> tok)) throw ParseError(std::string("missing ") + what);
      Integer z;
      if (z.set_str(tok, 10) != 0) throw ParseError("\"" + tok + "\" is not an integer");
      return z;
    };
    const Integer dim = next("dimension");
    if (dim < 1 || dim > 1000) throw ParseError("bad dimension " + dim.get_str());
    const auto d = dim.get_ui();
    for (std::size_t r = 0; r < d; ++r) {
      auto& row = rows.emplace_back();
      for (std::size_t c = 0; c < d; ++c) row.push_back(next("matrix entry"));
    }
    if (in >> tok) throw ParseError("trailing input \"" + tok + "\"");
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw ParseError("matrix is not square");
  if (rows.empty()) throw ParseError("empty matrix");
  return exact::IntegerMatrix::from_rows(rows);
}

exact::IntegerMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

}  // namespace solvtm::classify
