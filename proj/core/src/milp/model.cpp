#include "crnt/milp/model.hpp"

#include <stdexcept>

namespace crnt::milp {

std::size_t Model::add_variable(const std::string& name, VarKind kind, std::optional<Rational> upper) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  if (index_.count(name)) throw std::invalid_argument("duplicate variable name '" + name + "'");
  if (upper && upper->sign() < 0) throw std::invalid_argument("negative upper bound for '" + name + "'");
  if (kind == VarKind::Binary) upper = Rational(1);
  if (kind == VarKind::Integer && upper) upper = upper->floor();
  index_[name] = vars_.size();
  vars_.push_back({name, kind, upper});
  return vars_.size() - 1;
}

void Model::check_expr(const LinearExpr& e) const {
  for (auto& [v, c] : e)
    if (v >= vars_.size()) throw std::invalid_argument("expression references undeclared variable " + std::to_string(v));
}

std::size_t Model::add_constraint(LinearExpr expr, Relation rel, const Rational& rhs, std::string name) {
  check_expr(expr);
  std::erase_if(expr, [](const auto& p) { return p.second.is_zero(); });
  cons_.push_back({std::move(expr), rel, rhs, std::move(name)});
  return cons_.size() - 1;
}

void Model::set_objective(LinearExpr expr) {
  check_expr(expr);
  std::erase_if(expr, [](const auto& p) { return p.second.is_zero(); });
  obj_ = std::move(expr);
}

std::optional<std::size_t> Model::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Model::count(VarKind kind) const {
  std::size_t c = 0;
  for (auto& v : vars_) c += v.kind == kind;
  return c;
}

bool Model::has_upper(std::size_t var) const { return vars_.at(var).upper.has_value(); }

Rational Model::upper_of(std::size_t var) const {
  if (!vars_.at(var).upper) throw std::logic_error("variable '" + vars_[var].name + "' has no upper bound");
  return *vars_[var].upper;
}

Rational evaluate(const LinearExpr& e, const std::vector<Rational>& x) {
  Rational s;
  for (auto& [v, c] : e) s += c * x.at(v);
  return s;
}

bool Model::satisfies(const std::vector<Rational>& x, std::string* reason) const {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (x.size() != vars_.size()) return fail("assignment has the wrong length");
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    const Variable& v = vars_[j];
    if (x[j].sign() < 0) return fail(v.name + " is negative");
    if (v.upper && x[j] > *v.upper) return fail(v.name + " exceeds its upper bound");
    if (v.kind != VarKind::Continuous && !x[j].is_integer()) return fail(v.name + " is not integral");
  }
  for (std::size_t i = 0; i < cons_.size(); ++i) {
    const Constraint& c = cons_[i];
    Rational lhs = evaluate(c.expr, x);
    bool ok = c.rel == Relation::LessEq ? lhs <= c.rhs : c.rel == Relation::GreaterEq ? lhs >= c.rhs : lhs == c.rhs;
    if (!ok) return fail("constraint " + (c.name.empty() ? "#" + std::to_string(i + 1) : c.name) + " violated");
  }
  return true;
}

Rational Model::objective_value(const std::vector<Rational>& x) const { return evaluate(obj_, x); }

}  // namespace crnt::milp
