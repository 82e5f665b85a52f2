#pragma once

#include <string>
#include <vector>

#include "solvtm/classify/generate.hpp"
#include "solvtm/exact/polynomial.hpp"

namespace solvtm::classify {

/// Integer polynomial in x: integers, x, + - * ^ and parentheses, with
/// implicit products such as 3x^2 or 2(x+1). Throws ParseError.
exact::RationalPolynomial parse_polynomial(const std::string& text);

/// "x^3+x-1; (x^2+1)^2" -> [(x^3+x-1, 1), (x^2+1, 2)]. An item "(q)^k" is
/// q with multiplicity k; other items have multiplicity 1. Items may carry
/// a role prefix "f0:" or "h:". A comma also separates items. Factors must
/// be monic. Throws ParseError.
std::vector<FactorSpec> parse_factors(const std::string& text);

/// Either the dimension on the first line followed by the rows, or a JSON
/// object with "matrix": [[...], ...]. Throws ParseError.
exact::IntegerMatrix parse_matrix(const std::string& text);
exact::IntegerMatrix read_matrix_file(const std::string& path);

}  // namespace solvtm::classify
