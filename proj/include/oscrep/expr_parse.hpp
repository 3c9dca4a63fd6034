#pragma once

#include <string>
#include <vector>

#include "oscrep/polynomial.hpp"

namespace oscrep {

/// Canonical display form in the canonical term order, e.g.
/// "3*x1^2*x2 - 1/2*x3 + 1". The zero polynomial prints as "0".
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

/// Parses sums, differences, products, integer powers, parentheses,
/// rational literals "p/q" and the given variable names. Round-trips
/// with to_string on canonical forms. Errors name the offending token
/// and its position.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace oscrep
