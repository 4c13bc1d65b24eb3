#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "crnt/rational.hpp"

namespace crnt::milp {

// lo <= coeffs . x <= hi; a missing side is unbounded.
struct LpRow {
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

struct LpProblem {
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<Rational> cost;
  std::vector<LpRow> rows;

  std::size_t add_column(std::optional<Rational> lo, std::optional<Rational> hi, Rational c = Rational());
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  std::size_t pivots = 0;
};

// Two-phase bounded-variable primal simplex on a dense exact tableau.
// Entering and leaving choices follow Bland's smallest-index rule.
LpResult solve_lp(const LpProblem& lp);

}  // namespace crnt::milp
