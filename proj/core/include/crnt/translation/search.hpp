#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crnt/milp/solver.hpp"
#include "crnt/translation/encoding.hpp"
#include "crnt/translation/split_translation.hpp"

namespace crnt {

struct SearchOptions {
  EncodingParams params;  // params.q is ignored; the search sets it
  std::size_t q_min = 1;
  std::size_t q_max = 1;
  milp::SolveOptions solver;
  int big_m_retries = 3;
  // Adds the translation-aware node filter and dive to the built-in solver.
  // The answer is the same either way; only the effort changes.
  bool guided = true;
  // Called with every model before it is solved (used for --emit-lp).
  std::function<void(const Encoding&)> on_model;
};

// Outcome of one slice count. An infeasible record only speaks for the
// vertex budget and big-M it was solved with.
struct SliceAttempt {
  std::size_t q = 0;
  std::size_t n_vertices = 0;
  Rational big_m;
  milp::SolveStatus status = milp::SolveStatus::Infeasible;
  std::size_t nodes = 0;
  double seconds = 0;
  std::optional<Rational> objective;
  std::string note;
};

struct SearchResult {
  std::optional<SplitTranslation> translation;
  std::optional<Rational> objective;
  std::size_t q = 0;
  bool indeterminate = false;  // a node limit stopped the search
  // False when the node limit stopped the solver after it had a point: the
  // translation is valid but its objective is only an upper bound.
  bool proven_optimal = false;
  std::vector<SliceAttempt> attempts;
};

// Tries q = q_min..q_max and returns the optimum at the first feasible q. A
// node limit stops the search; the best point found by then is still decoded.
SearchResult find_wr_split_translation(const ReactionNetwork& net, const SearchOptions& opt);

std::string attempt_summary(const SliceAttempt& a);

}  // namespace crnt
