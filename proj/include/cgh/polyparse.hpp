#pragma once

#include "cgh/poly.hpp"
#include "cgh/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace cgh {

// Sparse polynomial in x and y with rational coefficients, keyed by
// (degree in x, degree in y).
using BivariatePoly = std::map<std::pair<int, int>, Rational>;

// Parses sums of products of rationals, x, y, parenthesised
// subexpressions and non-negative integer powers. Division is only allowed
// by constants.
BivariatePoly parse_bivariate(const std::string& text);

// Coefficient polynomial of y^k.
Poly<Rational> y_coefficient(const BivariatePoly& f, int k);
int y_degree(const BivariatePoly& f);

} // namespace cgh
