#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crnt/rational.hpp"

namespace crnt::milp {

// Integer is an extension used for integral translated complexes; the
// translation model itself only needs continuous and binary columns.
enum class VarKind { Continuous, Binary, Integer };
enum class Relation { LessEq, Equal, GreaterEq };

using LinearExpr = std::map<std::size_t, Rational>;

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  std::optional<Rational> upper;  // binaries always have upper 1
};

struct Constraint {
  LinearExpr expr;
  Relation rel = Relation::LessEq;
  Rational rhs;
  std::string name;
};

class Model {
 public:
  // Throws std::invalid_argument on a duplicate name or a negative upper bound.
  std::size_t add_variable(const std::string& name, VarKind kind, std::optional<Rational> upper = std::nullopt);
  // Zero coefficients are dropped; the expression must reference declared variables.
  std::size_t add_constraint(LinearExpr expr, Relation rel, const Rational& rhs, std::string name = {});
  void set_objective(LinearExpr expr);

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return cons_; }
  const LinearExpr& objective() const { return obj_; }
  std::optional<std::size_t> find(const std::string& name) const;

  std::size_t count(VarKind kind) const;
  Rational upper_of(std::size_t var) const;  // throws if unbounded
  bool has_upper(std::size_t var) const;

  // Exact feasibility check of a full assignment; reason receives the first violation.
  bool satisfies(const std::vector<Rational>& x, std::string* reason = nullptr) const;
  Rational objective_value(const std::vector<Rational>& x) const;

 private:
  void check_expr(const LinearExpr& e) const;

  std::vector<Variable> vars_;
  std::vector<Constraint> cons_;
  LinearExpr obj_;
  std::unordered_map<std::string, std::size_t> index_;
};

Rational evaluate(const LinearExpr& e, const std::vector<Rational>& x);

}  // namespace crnt::milp
