#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "crnt/milp/model.hpp"
#include "crnt/rational.hpp"

namespace crnt::milp {

enum class SolveStatus { Optimal, Infeasible, Unbounded, BoundExceeded };

std::string to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<Rational> values;  // indexed like Model::variables(); empty unless a point is known
  Rational objective;
  std::size_t nodes = 0;
  std::string message;

  const Rational& value(const Model& m, const std::string& name) const;
};

struct SolveOptions {
  std::size_t node_limit = 0;  // 0 means unlimited
  // Executable invoked as `<exe> <model.lp> <solution.txt>`; empty uses the built-in solver.
  std::string external_solver;
  // Called at every node with the state of each column (-1 free, 0 or 1 for a
  // fixed binary, -1 for non-binaries). Returning false prunes the node; the
  // filter may also set free binaries to 0. Both must only discard points
  // that are infeasible.
  std::function<bool(std::vector<signed char>&)> node_filter;
  // Nodes spent on a first-fail dive over the one-hot rows before the
  // ordered search. The dive only seeds an incumbent; the returned optimum
  // and tie-breaking do not depend on it.
  std::size_t dive_nodes = 0;
  // Optional per-column rank for the dive: within a one-hot row, columns with
  // a higher rank are tried first (ties by index).
  std::vector<int> dive_rank;
  // Columns the dive fixes first, zero branch first, before the one-hot rows.
  std::vector<std::size_t> dive_first;
};

// Depth-first branch and bound over the binary (then integer) columns in
// declared order, zero branch first. Among optimal points the returned binary
// vector is the lexicographically smallest.
Solution solve(const Model& model, const SolveOptions& options = {});

// LP relaxation of the whole model (binaries relaxed to [0,1]).
Solution lp_relax_solve(const Model& model);

// Parses the `name value` / `=obj=` solution format against the model.
Solution read_solution(const Model& model, const std::string& text);

}  // namespace crnt::milp
