#include "crnt/milp/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unistd.h>

#include "crnt/milp/lp_format.hpp"
#include "crnt/milp/simplex.hpp"
#include "propagation.hpp"

namespace crnt::milp {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::BoundExceeded: return "bound-exceeded";
  }
  return "unknown";
}

const Rational& Solution::value(const Model& m, const std::string& name) const {
  auto j = m.find(name);
  if (!j) throw std::out_of_range("no variable named '" + name + "'");
  return values.at(*j);
}

namespace {

using detail::Domain;
using detail::Propagator;
using detail::Row;
using detail::Term;

std::vector<Row> rows_of(const Model& model) {
  std::vector<Row> rows;
  rows.reserve(model.constraints().size());
  for (auto& c : model.constraints()) {
    Row r;
    for (auto& [v, a] : c.expr) r.terms.push_back({v, a});
    if (c.rel != Relation::GreaterEq) r.hi = c.rhs;
    if (c.rel != Relation::LessEq) r.lo = c.rhs;
    rows.push_back(std::move(r));
  }
  return rows;
}

enum class RelaxStatus { Bounded, Infeasible, Unbounded };

struct RelaxResult {
  RelaxStatus status = RelaxStatus::Infeasible;
  Rational bound;
  std::vector<Rational> values;
};

// LP over the rows whose binary columns are all fixed. Rows that still
// contain a free binary are dropped, which keeps the bound valid. Each node
// LP goes through a small presolve (fixed columns, singleton rows, redundant
// rows, parallel rows, doubleton equalities) and is split into independent
// blocks that are cached by content.
class NodeRelaxation {
 public:
  NodeRelaxation(const Model& model, const std::vector<Row>& rows) : model_(model), rows_(rows) {
    for (auto& v : model.variables()) kinds_.push_back(v.kind);
    cost_.assign(kinds_.size(), Rational());
    for (auto& [v, c] : model.objective()) cost_[v] = c;
  }

  RelaxResult evaluate(const Domain& dom);

 private:
  struct LRow {
    std::vector<Term> terms;
    std::optional<Rational> lo, hi;
    bool alive = true;
  };
  struct Elimination {
    std::size_t x, y;
    Rational alpha, beta;  // x = alpha + beta * y
  };

  bool presolve();
  bool normalize_row(LRow& r, bool& changed);
  bool merge_parallel(bool& changed);
  bool aggregate(bool& changed);
  bool tighten_local_lb(std::size_t j, const Rational& v);
  bool tighten_local_ub(std::size_t j, const Rational& v);
  bool solve_blocks(RelaxResult& res);

  const Model& model_;
  const std::vector<Row>& rows_;
  std::vector<VarKind> kinds_;
  std::vector<Rational> cost_;

  std::vector<LRow> work_;
  std::vector<Rational> lb_;
  std::vector<std::optional<Rational>> ub_;
  std::vector<Rational> wcost_;
  std::vector<char> free_binary_, eliminated_;
  std::vector<Elimination> elims_;
  std::unordered_map<std::string, LpResult> cache_;
};

bool NodeRelaxation::tighten_local_lb(std::size_t j, const Rational& v) {
  if (v > lb_[j]) lb_[j] = v;
  return !(ub_[j] && *ub_[j] < lb_[j]);
}

bool NodeRelaxation::tighten_local_ub(std::size_t j, const Rational& v) {
  if (!ub_[j] || v < *ub_[j]) ub_[j] = v;
  return !(*ub_[j] < lb_[j]);
}

// Removes fixed columns, checks activity, and turns singletons into bounds.
// Returns false on infeasibility.
bool NodeRelaxation::normalize_row(LRow& r, bool& changed) {
  Rational shift;
  std::size_t out = 0;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    Term& t = r.terms[i];
    if (ub_[t.var] && *ub_[t.var] == lb_[t.var]) {
      shift += t.coef * lb_[t.var];
      continue;
    }
    if (out != i) r.terms[out] = std::move(t);
    ++out;
  }
  if (out != r.terms.size()) {
    r.terms.resize(out);
    changed = true;
  }
  if (!shift.is_zero()) {
    if (r.lo) *r.lo -= shift;
    if (r.hi) *r.hi -= shift;
  }
  Rational mn, mx;
  bool mn_inf = false, mx_inf = false;
  for (auto& t : r.terms) {
    const auto& u = ub_[t.var];
    if (t.coef.sign() > 0) {
      mn += t.coef * lb_[t.var];
      if (u) mx += t.coef * *u; else mx_inf = true;
    } else {
      mx += t.coef * lb_[t.var];
      if (u) mn += t.coef * *u; else mn_inf = true;
    }
  }
  if (r.hi && !mn_inf && mn > *r.hi) return false;
  if (r.lo && !mx_inf && mx < *r.lo) return false;
  bool hi_red = !r.hi || (!mx_inf && mx <= *r.hi);
  bool lo_red = !r.lo || (!mn_inf && mn >= *r.lo);
  if (hi_red && lo_red) {
    r.alive = false;
    changed = true;
    return true;
  }
  if (r.terms.size() == 1) {
    const Term& t = r.terms[0];
    std::optional<Rational> l, u;
    if (r.lo) (t.coef.sign() > 0 ? l : u) = *r.lo / t.coef;
    if (r.hi) (t.coef.sign() > 0 ? u : l) = *r.hi / t.coef;
    if (l && !tighten_local_lb(t.var, *l)) return false;
    if (u && !tighten_local_ub(t.var, *u)) return false;
    r.alive = false;
    changed = true;
  }
  return true;
}

bool NodeRelaxation::merge_parallel(bool& changed) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < work_.size(); ++i) {
    LRow& r = work_[i];
    if (!r.alive || r.terms.size() < 2) continue;
    Rational inv = r.terms[0].coef.inverse();
    std::string key;
    for (auto& t : r.terms) {
      key += std::to_string(t.var);
      key += ':';
      key += (t.coef * inv).str();
      key += ';';
    }
    auto [it, fresh] = seen.emplace(key, i);
    if (fresh) continue;
    LRow& keep = work_[it->second];
    Rational scale = keep.terms[0].coef / r.terms[0].coef;  // r * scale has keep's coefficients
    std::optional<Rational> lo, hi;
    if (r.lo) (scale.sign() > 0 ? lo : hi) = *r.lo * scale;
    if (r.hi) (scale.sign() > 0 ? hi : lo) = *r.hi * scale;
    if (lo && (!keep.lo || *lo > *keep.lo)) keep.lo = lo;
    if (hi && (!keep.hi || *hi < *keep.hi)) keep.hi = hi;
    if (keep.lo && keep.hi && *keep.hi < *keep.lo) return false;
    r.alive = false;
    changed = true;
  }
  return true;
}

bool NodeRelaxation::aggregate(bool& changed) {
  std::vector<std::vector<std::size_t>> occ(kinds_.size());
  for (std::size_t i = 0; i < work_.size(); ++i)
    if (work_[i].alive)
      for (auto& t : work_[i].terms) occ[t.var].push_back(i);
  auto count_live = [&](std::size_t v) {
    std::size_t c = 0;
    for (std::size_t i : occ[v]) c += work_[i].alive;
    return c;
  };
  for (std::size_t i = 0; i < work_.size(); ++i) {
    LRow& r = work_[i];
    if (!r.alive || r.terms.size() != 2 || !r.lo || !r.hi || *r.lo != *r.hi) continue;
    std::size_t a = r.terms[0].var, b = r.terms[1].var;
    // Eliminate the column with fewer live rows; ties eliminate the later one.
    std::size_t ca = count_live(a), cb = count_live(b);
    bool elim_first = ca < cb || (ca == cb && a > b);
    const Term& tx = elim_first ? r.terms[0] : r.terms[1];
    const Term& ty = elim_first ? r.terms[1] : r.terms[0];
    const std::size_t x = tx.var, y = ty.var;
    Rational alpha = *r.lo / tx.coef;
    Rational beta = -ty.coef / tx.coef;
    // Bounds of x become bounds of y.
    std::optional<Rational> l1, u1;
    {
      Rational lo_y = (lb_[x] - alpha) / beta;
      std::optional<Rational> hi_y;
      if (ub_[x]) hi_y = (*ub_[x] - alpha) / beta;
      if (beta.sign() > 0) {
        l1 = lo_y;
        u1 = hi_y;
      } else {
        u1 = lo_y;
        l1 = hi_y;
      }
    }
    if (l1 && !tighten_local_lb(y, *l1)) return false;
    if (u1 && !tighten_local_ub(y, *u1)) return false;
    r.alive = false;
    eliminated_[x] = 1;
    elims_.push_back({x, y, alpha, beta});
    if (!wcost_[x].is_zero()) {
      wcost_[y] += wcost_[x] * beta;
      wcost_[x] = Rational();
    }
    for (std::size_t k : occ[x]) {
      LRow& o = work_[k];
      if (!o.alive) continue;
      auto itx = std::find_if(o.terms.begin(), o.terms.end(), [&](const Term& t) { return t.var == x; });
      if (itx == o.terms.end()) continue;
      Rational cx = itx->coef;
      o.terms.erase(itx);
      Rational shift = cx * alpha;
      if (o.lo) *o.lo -= shift;
      if (o.hi) *o.hi -= shift;
      Rational add = cx * beta;
      auto ity = std::lower_bound(o.terms.begin(), o.terms.end(), y, [](const Term& t, std::size_t v) { return t.var < v; });
      if (ity != o.terms.end() && ity->var == y) {
        ity->coef += add;
        if (ity->coef.is_zero()) o.terms.erase(ity);
      } else {
        o.terms.insert(ity, Term{y, add});
        occ[y].push_back(k);
      }
    }
    changed = true;
  }
  return true;
}

bool NodeRelaxation::presolve() {
  for (int round = 0; round < 16; ++round) {
    bool changed = false;
    for (auto& r : work_)
      if (r.alive && !normalize_row(r, changed)) return false;
    if (!merge_parallel(changed)) return false;
    for (auto& r : work_)
      if (r.alive && !normalize_row(r, changed)) return false;
    if (!aggregate(changed)) return false;
    if (!changed) break;
  }
  return true;
}

bool NodeRelaxation::solve_blocks(RelaxResult& res) {
  const std::size_t nv = kinds_.size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<char> in_row(nv, 0);
  for (auto& r : work_) {
    if (!r.alive) continue;
    for (auto& t : r.terms) in_row[t.var] = 1;
    for (std::size_t i = 1; i < r.terms.size(); ++i) parent[find(r.terms[i].var)] = find(r.terms[0].var);
  }
  // Loose columns go to their cheaper bound.
  for (std::size_t j = 0; j < nv; ++j) {
    if (in_row[j] || eliminated_[j]) continue;
    if (free_binary_[j]) {
      res.values[j] = cost_[j].sign() < 0 ? Rational(1) : Rational();
      continue;
    }
    if (wcost_[j].sign() < 0) {
      if (!ub_[j]) return res.status = RelaxStatus::Unbounded, false;
      res.values[j] = *ub_[j];
    } else {
      res.values[j] = lb_[j];
    }
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> block_rows;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < work_.size(); ++i) {
    if (!work_[i].alive) continue;
    std::size_t root = find(work_[i].terms[0].var);
    auto [it, fresh] = block_rows.try_emplace(root);
    if (fresh) roots.push_back(root);
    it->second.push_back(i);
  }
  std::sort(roots.begin(), roots.end());
  std::vector<long> local(nv, -1);
  for (std::size_t root : roots) {
    const auto& rows = block_rows[root];
    std::vector<std::size_t> cols;
    for (std::size_t i : rows)
      for (auto& t : work_[i].terms)
        if (local[t.var] < 0) local[t.var] = 0, cols.push_back(t.var);
    std::sort(cols.begin(), cols.end());
    for (std::size_t c = 0; c < cols.size(); ++c) local[cols[c]] = static_cast<long>(c);
    LpProblem lp;
    std::string key;
    for (std::size_t c : cols) {
      lp.add_column(lb_[c], ub_[c], wcost_[c]);
      key += std::to_string(c) + "[" + lb_[c].str() + "," + (ub_[c] ? ub_[c]->str() : "inf") + "]" + wcost_[c].str() + ";";
    }
    for (std::size_t i : rows) {
      LpRow row;
      key += "|";
      for (auto& t : work_[i].terms) {
        row.coeffs.emplace_back(static_cast<std::size_t>(local[t.var]), t.coef);
        key += std::to_string(local[t.var]) + ":" + t.coef.str() + ",";
      }
      row.lo = work_[i].lo;
      row.hi = work_[i].hi;
      key += (row.lo ? row.lo->str() : "-") + "/" + (row.hi ? row.hi->str() : "+");
      lp.rows.push_back(std::move(row));
    }
    auto hit = cache_.find(key);
    const LpResult* out;
    LpResult fresh;
    if (hit != cache_.end()) {
      out = &hit->second;
    } else {
      fresh = solve_lp(lp);
      if (cache_.size() > 200000) cache_.clear();
      out = &cache_.emplace(std::move(key), fresh).first->second;
    }
    for (std::size_t c : cols) local[c] = -1;
    if (out->status == LpStatus::Infeasible) return res.status = RelaxStatus::Infeasible, false;
    if (out->status == LpStatus::Unbounded) return res.status = RelaxStatus::Unbounded, false;
    for (std::size_t c = 0; c < cols.size(); ++c) res.values[cols[c]] = out->x[c];
  }
  return true;
}

RelaxResult NodeRelaxation::evaluate(const Domain& dom) {
  const std::size_t nv = kinds_.size();
  RelaxResult res;
  lb_.assign(nv, Rational());
  ub_.assign(nv, std::nullopt);
  free_binary_.assign(nv, 0);
  eliminated_.assign(nv, 0);
  elims_.clear();
  wcost_ = cost_;
  for (std::size_t j = 0; j < nv; ++j) {
    lb_[j] = dom.lb(j);
    ub_[j] = dom.ub(j);
    if (kinds_[j] == VarKind::Binary && !dom.fixed(j)) free_binary_[j] = 1;
  }
  work_.clear();
  for (auto& row : rows_) {
    bool active = true;
    for (auto& t : row.terms)
      if (free_binary_[t.var]) {
        active = false;
        break;
      }
    if (!active) continue;
    LRow r{row.terms, row.lo, row.hi, true};
    bool changed = false;
    if (!normalize_row(r, changed)) return res;
    if (r.alive) work_.push_back(std::move(r));
  }
  if (!presolve()) return res;
  res.values.assign(nv, Rational());
  for (std::size_t j = 0; j < nv; ++j)
    if (ub_[j] && *ub_[j] == lb_[j]) res.values[j] = lb_[j];
  if (!solve_blocks(res)) {
    res.values.clear();
    return res;
  }
  for (auto it = elims_.rbegin(); it != elims_.rend(); ++it) res.values[it->x] = it->alpha + it->beta * res.values[it->y];
  res.status = RelaxStatus::Bounded;
  res.bound = model_.objective_value(res.values);
  return res;
}

class BranchAndBound {
 public:
  BranchAndBound(const Model& model, const SolveOptions& opt)
      : model_(model), opt_(opt), rows_(rows_of(model)), dom_(model), prop_(model, rows_), relax_(model, rows_) {
    for (std::size_t j = 0; j < model.variables().size(); ++j) {
      VarKind k = model.variables()[j].kind;
      if (k == VarKind::Binary) binaries_.push_back(j);
      if (k == VarKind::Integer) integers_.push_back(j);
    }
    // Rows that pick exactly one of a set of binaries steer the dive.
    for (auto& row : rows_) {
      if (!row.lo || !row.hi || *row.lo != Rational(1) || *row.hi != Rational(1) || row.terms.size() < 2) continue;
      bool one_hot = true;
      for (auto& t : row.terms) one_hot = one_hot && kinds()[t.var] == VarKind::Binary && t.coef == Rational(1);
      if (!one_hot) continue;
      std::vector<std::size_t> g;
      for (auto& t : row.terms) g.push_back(t.var);
      std::sort(g.begin(), g.end());
      groups_.push_back(std::move(g));
    }
  }

  Solution run();

 private:
  struct LimitReached {};
  struct UnboundedFound {};
  const std::vector<VarKind>& kinds() {
    if (kinds_.empty())
      for (auto& v : model_.variables()) kinds_.push_back(v.kind);
    return kinds_;
  }
  bool settle(const std::vector<std::size_t>& changed, bool root);
  bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  void node(const std::vector<std::size_t>& changed, bool root);
  void branch(std::size_t j, const Rational& down_ub, const Rational& up_lb);
  bool dive(const std::vector<std::size_t>& changed, bool root);

  const Model& model_;
  const SolveOptions& opt_;
  std::vector<Row> rows_;
  Domain dom_;
  Propagator prop_;
  NodeRelaxation relax_;
  std::vector<VarKind> kinds_;
  std::vector<std::size_t> binaries_, integers_;
  std::vector<std::vector<std::size_t>> groups_;
  std::optional<Rational> best_;
  std::vector<Rational> incumbent_;
  // The incumbent came from the dive, so an ordered leaf of equal value may
  // still be lexicographically smaller.
  bool seeded_ = false;
  std::vector<signed char> state_;
  std::size_t nodes_ = 0, dive_budget_ = 0;
  bool dive_cut_ = false;
};

bool BranchAndBound::settle(const std::vector<std::size_t>& changed, bool root) {
  if (!prop_.run(dom_, changed, root)) return false;
  if (!opt_.node_filter) return true;
  for (int round = 0; round < 16; ++round) {
    state_.assign(dom_.size(), -1);
    for (std::size_t j : binaries_)
      if (dom_.fixed(j)) state_[j] = dom_.lb(j).sign() > 0 ? 1 : 0;
    if (!opt_.node_filter(state_)) return false;
    std::vector<std::size_t> cut;
    for (std::size_t j : binaries_)
      if (!dom_.fixed(j) && state_[j] == 0) {
        if (!dom_.tighten_ub(j, Rational(0))) return false;
        cut.push_back(j);
      }
    if (cut.empty()) break;
    if (!prop_.run(dom_, cut, false)) return false;
  }
  return true;
}

bool BranchAndBound::lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  for (std::size_t j : binaries_)
    if (a[j] != b[j]) return a[j] < b[j];
  for (std::size_t j : integers_)
    if (a[j] != b[j]) return a[j] < b[j];
  return false;
}

void BranchAndBound::branch(std::size_t j, const Rational& down_ub, const Rational& up_lb) {
  std::size_t mark = dom_.mark();
  if (dom_.tighten_ub(j, down_ub)) node({j}, false);
  dom_.undo(mark);
  if (dom_.tighten_lb(j, up_lb)) node({j}, false);
  dom_.undo(mark);
}

void BranchAndBound::node(const std::vector<std::size_t>& changed, bool root) {
  if (opt_.node_limit && nodes_ >= opt_.node_limit) throw LimitReached{};
  ++nodes_;
  if (!settle(changed, root)) return;
  RelaxResult rr = relax_.evaluate(dom_);
  if (rr.status == RelaxStatus::Infeasible) return;
  const bool bounded = rr.status == RelaxStatus::Bounded;
  if (bounded && best_ && (seeded_ ? rr.bound > *best_ : rr.bound >= *best_)) return;
  for (std::size_t j : binaries_)
    if (!dom_.fixed(j)) return branch(j, Rational(0), Rational(1));
  if (!bounded) throw UnboundedFound{};
  for (std::size_t j : integers_)
    if (!rr.values[j].is_integer()) return branch(j, rr.values[j].floor(), rr.values[j].ceil());
  std::string why;
  if (!model_.satisfies(rr.values, &why)) throw std::logic_error("branch-and-bound leaf failed exact verification: " + why);
  // Later leaves are lexicographically larger than this one.
  bool tie = best_ && rr.bound == *best_;
  bool take = !tie || lex_less(rr.values, incumbent_);
  seeded_ = false;
  if (!take) return;
  best_ = rr.bound;
  incumbent_ = std::move(rr.values);
}

// Depth-first over the one-hot row with the fewest open columns, trying them
// in rank order, with plain bound pruning. Every leaf that improves becomes
// the incumbent. Returns true when the node budget stops the dive.
bool BranchAndBound::dive(const std::vector<std::size_t>& changed, bool root) {
  if (nodes_ >= dive_budget_) return dive_cut_ = true;
  ++nodes_;
  if (!settle(changed, root)) return false;
  RelaxResult rr = relax_.evaluate(dom_);
  if (rr.status != RelaxStatus::Bounded) return false;
  if (best_ && rr.bound >= *best_) return false;
  auto attempt = [&](std::size_t j, std::optional<Rational> lo, std::optional<Rational> hi) {
    std::size_t mark = dom_.mark();
    bool stop = (!lo || dom_.tighten_lb(j, *lo)) && (!hi || dom_.tighten_ub(j, *hi)) && dive({j}, false);
    dom_.undo(mark);
    return stop;
  };
  for (std::size_t j : opt_.dive_first)
    if (!dom_.fixed(j)) return attempt(j, Rational(0), Rational(0)) || attempt(j, Rational(1), Rational(1));
  const std::vector<std::size_t>* pick = nullptr;
  std::size_t fewest = SIZE_MAX;
  for (auto& g : groups_) {
    std::size_t open = 0;
    bool done = false;
    for (std::size_t j : g) {
      if (!dom_.fixed(j))
        ++open;
      else if (dom_.lb(j).sign() > 0)
        done = true;
    }
    if (!done && open > 0 && open < fewest) fewest = open, pick = &g;
  }
  if (pick) {
    std::vector<std::size_t> order = *pick;
    if (!opt_.dive_rank.empty())
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return opt_.dive_rank[a] > opt_.dive_rank[b]; });
    for (std::size_t j : order)
      if (!dom_.fixed(j) && attempt(j, Rational(1), Rational(1))) return true;
    return false;
  }
  for (std::size_t j : binaries_)
    if (!dom_.fixed(j)) return attempt(j, Rational(0), Rational(0)) || attempt(j, Rational(1), Rational(1));
  for (std::size_t j : integers_)
    if (!rr.values[j].is_integer())
      return attempt(j, std::nullopt, rr.values[j].floor()) || attempt(j, rr.values[j].ceil(), std::nullopt);
  std::string why;
  if (!model_.satisfies(rr.values, &why)) throw std::logic_error("dive leaf failed exact verification: " + why);
  best_ = rr.bound;
  incumbent_ = std::move(rr.values);
  seeded_ = true;
  return false;
}

Solution BranchAndBound::run() {
  Solution s;
  if (opt_.dive_nodes) {
    dive_budget_ = opt_.node_limit ? std::min(opt_.dive_nodes, opt_.node_limit) : opt_.dive_nodes;
    std::size_t mark = dom_.mark();
    dive({}, true);
    dom_.undo(mark);
    // The dive branches exhaustively, so a complete dive without a leaf
    // proves infeasibility.
    if (!best_ && !dive_cut_) {
      s.status = SolveStatus::Infeasible;
      s.nodes = nodes_;
      return s;
    }
  }
  try {
    node({}, true);
    if (best_) {
      s.status = SolveStatus::Optimal;
      s.values = incumbent_;
      s.objective = *best_;
    } else {
      s.status = SolveStatus::Infeasible;
    }
  } catch (const LimitReached&) {
    s.status = SolveStatus::BoundExceeded;
    s.message = "node limit of " + std::to_string(opt_.node_limit) + " reached";
    if (best_) {
      s.values = incumbent_;
      s.objective = *best_;
    }
  } catch (const UnboundedFound&) {
    s.status = SolveStatus::Unbounded;
  }
  s.nodes = nodes_;
  return s;
}

Solution solve_external(const Model& model, const SolveOptions& opt) {
  namespace fs = std::filesystem;
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / ("crnt-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  fs::create_directories(dir);
  fs::path lp = dir / "model.lp", sol = dir / "solution.txt";
  export_lp(model, lp.string());
  auto quote = [](const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
  };
  std::string cmd = quote(opt.external_solver) + " " + quote(lp.string()) + " " + quote(sol.string());
  int rc = std::system(cmd.c_str());
  if (rc != 0) {
    fs::remove_all(dir);
    throw std::runtime_error("external solver exited with status " + std::to_string(rc));
  }
  std::ifstream in(sol);
  if (!in) {
    fs::remove_all(dir);
    throw std::runtime_error("external solver wrote no solution file");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove_all(dir);
  Solution s = read_solution(model, ss.str());
  if (s.status == SolveStatus::Optimal) {
    std::string why;
    if (!model.satisfies(s.values, &why))
      throw std::runtime_error("external solution rejected by exact verification: " + why);
    s.objective = model.objective_value(s.values);
  }
  s.message = "external solver";
  return s;
}

}  // namespace

Solution solve(const Model& model, const SolveOptions& options) {
  if (!options.external_solver.empty()) return solve_external(model, options);
  BranchAndBound bb(model, options);
  return bb.run();
}

Solution lp_relax_solve(const Model& model) {
  LpProblem lp;
  for (std::size_t j = 0; j < model.variables().size(); ++j) lp.add_column(Rational(), model.variables()[j].upper);
  for (auto& [v, c] : model.objective()) lp.cost[v] = c;
  for (auto& c : model.constraints()) {
    LpRow row;
    for (auto& [v, a] : c.expr) row.coeffs.emplace_back(v, a);
    if (c.rel != Relation::GreaterEq) row.hi = c.rhs;
    if (c.rel != Relation::LessEq) row.lo = c.rhs;
    lp.rows.push_back(std::move(row));
  }
  LpResult r = solve_lp(lp);
  Solution s;
  s.status = r.status == LpStatus::Optimal ? SolveStatus::Optimal
             : r.status == LpStatus::Unbounded ? SolveStatus::Unbounded
                                               : SolveStatus::Infeasible;
  s.values = std::move(r.x);
  s.objective = r.objective;
  return s;
}

Solution read_solution(const Model& model, const std::string& text) {
  auto names = lp_names(model);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < names.size(); ++j) {
    index[names[j]] = j;
    index.emplace(model.variables()[j].name, j);
  }
  Solution s;
  s.status = SolveStatus::Optimal;
  s.values.assign(model.variables().size(), Rational());
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string name, value;
    if (!(ls >> name)) continue;
    if (name == "=infeasible=") return Solution{SolveStatus::Infeasible, {}, {}, 0, {}};
    if (name == "=unbounded=") return Solution{SolveStatus::Unbounded, {}, {}, 0, {}};
    if (!(ls >> value)) throw std::invalid_argument("solution line " + std::to_string(lineno) + ": missing value");
    Rational v = Rational::parse(value);
    if (name == "=obj=") {
      s.objective = v;
      continue;
    }
    auto it = index.find(name);
    if (it == index.end()) throw std::invalid_argument("solution line " + std::to_string(lineno) + ": unknown variable '" + name + "'");
    s.values[it->second] = v;
  }
  return s;
}

}  // namespace crnt::milp
