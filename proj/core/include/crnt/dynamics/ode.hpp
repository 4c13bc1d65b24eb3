#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crnt/dynamics/expression.hpp"
#include "crnt/dynamics/polynomial.hpp"
#include "crnt/network.hpp"
#include "crnt/translation/split_translation.hpp"

namespace crnt::dyn {

struct OdeSystem {
  SymbolTable symbols;
  std::vector<Polynomial> rhs;  // dx_i/dt
};

// Mass-action right-hand side with one rate symbol k# per reaction.
OdeSystem mas_rhs(const ReactionNetwork& net, std::size_t taus = 0);
// Generalized mass action; every edge has its own rate symbol.
OdeSystem gmas_rhs(const GeneralizedNetwork& net);
// Generalized mass action where all slice copies of reaction k share k#.
OdeSystem gmas_rhs(const SplitTranslation& t);

// Every monomial has degree exactly one in the rate symbols.
bool kappa_linear(const OdeSystem& sys);

struct Equivalence {
  bool equivalent = true;
  std::vector<Polynomial> diff;  // a.rhs - b.rhs
  // First coordinate with a nonzero difference, if any.
  std::optional<std::size_t> first_difference() const;
};

// Throws std::invalid_argument if the symbol tables differ.
Equivalence dynamically_equivalent(const OdeSystem& a, const OdeSystem& b);

struct ParamCheck {
  bool ok = true;
  SymbolTable symbols;
  std::vector<Polynomial> residuals;  // numerators after clearing denominators
};

// Substitutes x_i := param_i into the mass-action right-hand side and tests
// every cleared numerator for being the zero polynomial.
ParamCheck check_parametrization(const ReactionNetwork& net, const Parametrization& param);

// Exact evaluation at concentrations x and rate constants kappa (any free
// parameters are taken as zero).
Vector eval_rhs(const OdeSystem& sys, const Vector& x, const Vector& kappa);

}  // namespace crnt::dyn
