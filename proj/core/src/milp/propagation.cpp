#include "propagation.hpp"

namespace crnt::milp::detail {

Domain::Domain(const Model& model) {
  for (auto& v : model.variables()) {
    lb_.emplace_back();
    ub_.push_back(v.upper);
  }
}

bool Domain::tighten_lb(std::size_t j, const Rational& v, bool* changed) {
  if (v <= lb_[j]) return true;
  trail_.push_back({j, false, lb_[j]});
  lb_[j] = v;
  if (changed) *changed = true;
  return !(ub_[j] && *ub_[j] < v);
}

bool Domain::tighten_ub(std::size_t j, const Rational& v, bool* changed) {
  if (ub_[j] && *ub_[j] <= v) return true;
  trail_.push_back({j, true, ub_[j]});
  ub_[j] = v;
  if (changed) *changed = true;
  return !(v < lb_[j]);
}

void Domain::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    Entry& e = trail_.back();
    if (e.upper)
      ub_[e.var] = std::move(e.old);
    else
      lb_[e.var] = std::move(*e.old);
    trail_.pop_back();
  }
}

Propagator::Propagator(const Model& model, const std::vector<Row>& rows) : rows_(rows) {
  rows_of_var_.resize(model.variables().size());
  for (auto& v : model.variables()) kinds_.push_back(v.kind);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& t : rows[r].terms) rows_of_var_[t.var].push_back(r);
  queued_.assign(rows.size(), 0);
}

namespace {

// Sum of the finite parts of the minimum or maximum activity and the number
// of terms whose contribution is unbounded.
struct Activity {
  Rational finite;
  std::size_t infinite = 0;
  std::size_t infinite_var = 0;
};

}  // namespace

bool Propagator::process_row(Domain& dom, std::size_t r, std::vector<std::size_t>& touched) {
  const Row& row = rows_[r];
  Activity mn, mx;
  for (auto& t : row.terms) {
    const Rational& l = dom.lb(t.var);
    const auto& u = dom.ub(t.var);
    if (t.coef.sign() > 0) {
      mn.finite += t.coef * l;
      if (u)
        mx.finite += t.coef * *u;
      else
        ++mx.infinite, mx.infinite_var = t.var;
    } else {
      mx.finite += t.coef * l;
      if (u)
        mn.finite += t.coef * *u;
      else
        ++mn.infinite, mn.infinite_var = t.var;
    }
  }
  if (row.hi && mn.infinite == 0 && mn.finite > *row.hi) return false;
  if (row.lo && mx.infinite == 0 && mx.finite < *row.lo) return false;

  for (auto& t : row.terms) {
    const std::size_t j = t.var;
    const bool integral = kinds_[j] != VarKind::Continuous;
    const Rational& l = dom.lb(j);
    const auto& u = dom.ub(j);
    // Residual minimum/maximum activity of the other terms.
    auto residual = [&](const Activity& a, bool use_max) -> std::optional<Rational> {
      bool own_inf = t.coef.sign() > 0 ? (use_max ? !u : false) : (use_max ? false : !u);
      std::size_t others_inf = a.infinite - (own_inf ? 1 : 0);
      if (others_inf > 0) return std::nullopt;
      Rational own;
      if (!own_inf) {
        bool at_upper = (t.coef.sign() > 0) == use_max;
        own = t.coef * (at_upper ? *u : l);
      }
      return a.finite - own;
    };
    std::optional<Rational> new_ub, new_lb;
    if (row.hi) {
      if (auto rest = residual(mn, false)) {
        Rational bound = (*row.hi - *rest) / t.coef;
        if (t.coef.sign() > 0)
          new_ub = bound;
        else
          new_lb = bound;
      }
    }
    if (row.lo) {
      if (auto rest = residual(mx, true)) {
        Rational bound = (*row.lo - *rest) / t.coef;
        if (t.coef.sign() > 0) {
          if (!new_lb || bound > *new_lb) new_lb = bound;
        } else {
          if (!new_ub || bound < *new_ub) new_ub = bound;
        }
      }
    }
    bool changed = false;
    if (new_ub) {
      Rational v = integral ? new_ub->floor() : *new_ub;
      bool tighter = !u || v < *u;
      if (tighter && !integral) {
        // Accept continuous tightenings only when they matter; this keeps
        // propagation finite on cyclic row systems.
        bool worth = !u || v <= l || (*u - v) * 8 >= (*u - l);
        if (!worth || continuous_budget_ == 0) tighter = false;
        else --continuous_budget_;
      }
      if (tighter && !dom.tighten_ub(j, v, &changed)) return false;
    }
    if (new_lb) {
      Rational v = integral ? new_lb->ceil() : *new_lb;
      const Rational& cur = dom.lb(j);
      bool tighter = v > cur;
      if (tighter && !integral) {
        const auto& uu = dom.ub(j);
        bool worth = (uu && v >= *uu) || !uu || (v - cur) * 8 >= (*uu - cur);
        if (!worth || continuous_budget_ == 0) tighter = false;
        else --continuous_budget_;
      }
      if (tighter && !dom.tighten_lb(j, v, &changed)) return false;
    }
    if (changed) touched.push_back(j);
  }
  return true;
}

bool Propagator::run(Domain& dom, const std::vector<std::size_t>& changed, bool initial) {
  std::vector<std::size_t> queue;
  continuous_budget_ = 4 * rows_.size() + 64;
  auto enqueue_var = [&](std::size_t j) {
    for (std::size_t r : rows_of_var_[j])
      if (!queued_[r]) queued_[r] = 1, queue.push_back(r);
  };
  if (initial) {
    for (std::size_t r = 0; r < rows_.size(); ++r) queued_[r] = 1, queue.push_back(r);
  } else {
    for (std::size_t j : changed) enqueue_var(j);
  }
  std::size_t head = 0;
  std::vector<std::size_t> touched;
  bool ok = true;
  while (head < queue.size()) {
    std::size_t r = queue[head++];
    queued_[r] = 0;
    touched.clear();
    if (!process_row(dom, r, touched)) {
      ok = false;
      break;
    }
    for (std::size_t j : touched) enqueue_var(j);
    if (head > 4096 && head * 2 > queue.size()) {
      queue.erase(queue.begin(), queue.begin() + static_cast<long>(head));
      head = 0;
    }
  }
  for (std::size_t i = head; i < queue.size(); ++i) queued_[queue[i]] = 0;
  return ok;
}

}  // namespace crnt::milp::detail
