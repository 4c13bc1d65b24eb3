#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "crnt/milp/model.hpp"
#include "crnt/rational.hpp"

namespace crnt::milp::detail {

struct Term {
  std::size_t var;
  Rational coef;
};

// lo <= sum terms <= hi
struct Row {
  std::vector<Term> terms;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

// Variable bounds with an undo trail. Lower bounds are always finite here
// (every model column is nonnegative).
class Domain {
 public:
  Domain(const Model& model);

  const Rational& lb(std::size_t j) const { return lb_[j]; }
  const std::optional<Rational>& ub(std::size_t j) const { return ub_[j]; }
  bool fixed(std::size_t j) const { return ub_[j] && *ub_[j] == lb_[j]; }
  std::size_t size() const { return lb_.size(); }

  // Return false if the new bound empties the domain. No-op when not tighter.
  bool tighten_lb(std::size_t j, const Rational& v, bool* changed = nullptr);
  bool tighten_ub(std::size_t j, const Rational& v, bool* changed = nullptr);

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

 private:
  struct Entry {
    std::size_t var;
    bool upper;
    std::optional<Rational> old;
  };
  std::vector<Rational> lb_;
  std::vector<std::optional<Rational>> ub_;
  std::vector<Entry> trail_;
};

// Activity-based bound propagation over the model rows.
class Propagator {
 public:
  Propagator(const Model& model, const std::vector<Row>& rows);

  // Propagates from the given changed variables (all rows when empty and
  // initial is true). Returns false on a proven conflict.
  bool run(Domain& dom, const std::vector<std::size_t>& changed, bool initial = false);

 private:
  bool process_row(Domain& dom, std::size_t r, std::vector<std::size_t>& touched);

  const std::vector<Row>& rows_;
  std::vector<std::vector<std::size_t>> rows_of_var_;
  std::vector<VarKind> kinds_;
  std::vector<char> queued_;
  std::size_t continuous_budget_ = 0;
};

}  // namespace crnt::milp::detail
