#pragma once

#include <string_view>
#include <vector>

#include "crnt/dynamics/rational_function.hpp"

namespace crnt::dyn {

// Expands an arithmetic expression over `+ - * / ^ ( )`, rational literals and
// the symbols x#, k#, t# (1-based) into one rational function. Throws
// std::invalid_argument on syntax errors and out-of-range symbols.
RationalFunction parse_expression(std::string_view text, const SymbolTable& symbols);

// Largest t# index mentioned in the text (0 if none).
std::size_t max_tau_index(std::string_view text);

struct Parametrization {
  SymbolTable symbols;  // x count m, k count r, t count = free parameters
  std::vector<RationalFunction> x;  // x[i] is the value of x_i^power[i], over k and t only
  std::vector<std::uint32_t> power;
};

// Reads `x1 = expr` lines (one per species, `#` comments). A left side
// `x2^2` gives the value of that power, for parametrizations that are only
// rational in the monomials the network actually uses. Throws ParseError.
Parametrization parse_parametrization(std::string_view text, std::size_t species, std::size_t reactions);

}  // namespace crnt::dyn
