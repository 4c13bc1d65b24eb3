#include "crnt/milp/simplex.hpp"

#include <stdexcept>

namespace crnt::milp {

std::size_t LpProblem::add_column(std::optional<Rational> lo, std::optional<Rational> hi, Rational c) {
  lower.push_back(std::move(lo));
  upper.push_back(std::move(hi));
  cost.push_back(std::move(c));
  return cost.size() - 1;
}

namespace {

// Tableau rows satisfy x_basic(i) + sum_{j nonbasic} T[i][j] x_j = 0.
class Tableau {
 public:
  explicit Tableau(const LpProblem& lp) : lp_(lp) {}

  LpResult run();

 private:
  bool fixed(std::size_t c) const { return lo_[c] && hi_[c] && *lo_[c] == *hi_[c]; }
  Rational value(std::size_t c) const { return row_of_[c] >= 0 ? beta_[row_of_[c]] : x_[c]; }
  void setup();
  // Returns false when the objective is unbounded along an improving ray.
  bool optimize(std::vector<Rational>& d);
  void pivot(std::size_t r, std::size_t j);
  void update_cost_row(std::vector<Rational>& d, std::size_t r, std::size_t j);

  const LpProblem& lp_;
  std::size_t n_ = 0, rows_ = 0, cols_ = 0, art_begin_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> beta_;
  std::vector<std::size_t> basis_;
  std::vector<long> row_of_;
  std::vector<Rational> x_;
  std::vector<std::optional<Rational>> lo_, hi_;
  std::vector<Rational> d1_, d2_;
  std::size_t pivots_ = 0;
};

void Tableau::setup() {
  n_ = lp_.cost.size();
  rows_ = lp_.rows.size();
  if (lp_.lower.size() != n_ || lp_.upper.size() != n_) throw std::invalid_argument("LP bound vectors have the wrong length");
  lo_ = lp_.lower;
  hi_ = lp_.upper;
  x_.assign(n_, Rational());
  for (std::size_t j = 0; j < n_; ++j) {
    if (lo_[j] && hi_[j] && *hi_[j] < *lo_[j]) throw std::invalid_argument("LP column with empty bounds");
    x_[j] = lo_[j] ? *lo_[j] : hi_[j] ? *hi_[j] : Rational();
  }
  std::vector<Rational> act(rows_);
  std::vector<int> sigma(rows_, 0);
  std::vector<Rational> slack_value(rows_);
  std::size_t arts = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    const LpRow& row = lp_.rows[i];
    for (auto& [j, a] : row.coeffs) {
      if (j >= n_) throw std::invalid_argument("LP row references an unknown column");
      act[i] += a * x_[j];
    }
    if (row.lo && act[i] < *row.lo) {
      slack_value[i] = *row.lo;
      sigma[i] = 1;
    } else if (row.hi && act[i] > *row.hi) {
      slack_value[i] = *row.hi;
      sigma[i] = -1;
    }
    arts += sigma[i] != 0;
  }
  art_begin_ = n_ + rows_;
  cols_ = art_begin_ + arts;
  t_.assign(rows_, std::vector<Rational>(cols_));
  beta_.assign(rows_, Rational());
  basis_.assign(rows_, 0);
  row_of_.assign(cols_, -1);
  x_.resize(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    lo_.push_back(lp_.rows[i].lo);
    hi_.push_back(lp_.rows[i].hi);
  }
  std::size_t next_art = art_begin_;
  d1_.assign(cols_, Rational());
  d2_.assign(cols_, Rational());
  for (std::size_t j = 0; j < n_; ++j) d2_[j] = lp_.cost[j];
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::size_t s = n_ + i;
    auto& row = t_[i];
    if (sigma[i] == 0) {
      for (auto& [j, a] : lp_.rows[i].coeffs) row[j] -= a;
      row[s] = 1;
      basis_[i] = s;
      row_of_[s] = static_cast<long>(i);
      beta_[i] = act[i];
    } else {
      // a.x - s + sigma * art = 0 with s parked at the violated bound.
      const std::size_t a = next_art++;
      lo_.push_back(Rational());
      hi_.push_back(std::nullopt);
      Rational sg(sigma[i]);
      for (auto& [j, c] : lp_.rows[i].coeffs) row[j] += c * sg;
      row[s] = -sg;
      row[a] = 1;
      basis_[i] = a;
      row_of_[a] = static_cast<long>(i);
      x_[s] = slack_value[i];
      beta_[i] = (slack_value[i] - act[i]) * sg;
      // Phase-one cost of art is 1; its reduced-cost contribution is -T[i][j].
      for (std::size_t j = 0; j < cols_; ++j)
        if (j != a && !row[j].is_zero()) d1_[j] -= row[j];
    }
  }
}

void Tableau::update_cost_row(std::vector<Rational>& d, std::size_t r, std::size_t j) {
  if (d[j].is_zero()) return;
  Rational f = d[j];
  const auto& pr = t_[r];
  for (std::size_t c = 0; c < cols_; ++c)
    if (!pr[c].is_zero()) d[c] -= f * pr[c];
}

void Tableau::pivot(std::size_t r, std::size_t j) {
  ++pivots_;
  auto& pr = t_[r];
  Rational inv = pr[j].inverse();
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!pr[c].is_zero()) {
      if (c != j) pr[c] *= inv;
      nz.push_back(c);
    }
  pr[j] = 1;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == r || t_[i][j].is_zero()) continue;
    Rational f = t_[i][j];
    auto& ri = t_[i];
    for (std::size_t c : nz) ri[c] -= f * pr[c];
  }
  update_cost_row(d1_, r, j);
  update_cost_row(d2_, r, j);
  std::size_t leaving = basis_[r];
  row_of_[leaving] = -1;
  basis_[r] = j;
  row_of_[j] = static_cast<long>(r);
}

bool Tableau::optimize(std::vector<Rational>& d) {
  for (;;) {
    std::size_t enter = cols_;
    int dir = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row_of_[j] >= 0 || d[j].is_zero() || fixed(j)) continue;
      if (d[j].sign() < 0 && (!hi_[j] || x_[j] < *hi_[j])) {
        enter = j, dir = 1;
        break;
      }
      if (d[j].sign() > 0 && (!lo_[j] || x_[j] > *lo_[j])) {
        enter = j, dir = -1;
        break;
      }
    }
    if (enter == cols_) return true;

    std::optional<Rational> best;
    std::size_t best_var = cols_;
    long best_row = -1;
    Rational own_range;
    bool own_limited = false;
    if (dir > 0 && hi_[enter]) own_range = *hi_[enter] - x_[enter], own_limited = true;
    if (dir < 0 && lo_[enter]) own_range = x_[enter] - *lo_[enter], own_limited = true;
    if (own_limited) best = own_range, best_var = enter;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& tij = t_[i][enter];
      if (tij.is_zero()) continue;
      Rational alpha = dir > 0 ? tij : -tij;
      std::size_t b = basis_[i];
      Rational limit;
      if (alpha.sign() > 0) {
        if (!lo_[b]) continue;
        limit = (beta_[i] - *lo_[b]) / alpha;
      } else {
        if (!hi_[b]) continue;
        limit = (*hi_[b] - beta_[i]) / -alpha;
      }
      int c = best ? compare(limit, *best) : -1;
      if (c < 0 || (c == 0 && b < best_var)) {
        best = limit;
        best_var = b;
        best_row = static_cast<long>(i);
      }
    }
    if (!best) return false;
    const Rational step = dir > 0 ? *best : -*best;
    if (!step.is_zero())
      for (std::size_t i = 0; i < rows_; ++i)
        if (!t_[i][enter].is_zero()) beta_[i] -= t_[i][enter] * step;
    if (best_var == enter) {
      x_[enter] += step;
      continue;
    }
    const std::size_t r = static_cast<std::size_t>(best_row);
    const std::size_t leaving = basis_[r];
    Rational alpha = dir > 0 ? t_[r][enter] : -t_[r][enter];
    x_[leaving] = alpha.sign() > 0 ? *lo_[leaving] : *hi_[leaving];
    Rational entered = x_[enter] + step;
    pivot(r, enter);
    beta_[r] = entered;
    if (leaving >= art_begin_) hi_[leaving] = Rational();
  }
}

LpResult Tableau::run() {
  setup();
  LpResult res;
  if (art_begin_ < cols_) {
    optimize(d1_);
    Rational infeas;
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] >= art_begin_) infeas += beta_[i];
    if (infeas.sign() > 0) {
      res.status = LpStatus::Infeasible;
      res.pivots = pivots_;
      return res;
    }
    for (std::size_t a = art_begin_; a < cols_; ++a) hi_[a] = Rational();
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (row_of_[j] >= 0 || t_[i][j].is_zero()) continue;
        Rational v = x_[j];
        std::size_t a = basis_[i];
        pivot(i, j);
        beta_[i] = v;
        x_[a] = Rational();
        break;
      }
    }
  }
  if (!optimize(d2_)) {
    res.status = LpStatus::Unbounded;
    res.pivots = pivots_;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    res.x[j] = value(j);
    res.objective += lp_.cost[j] * res.x[j];
  }
  res.pivots = pivots_;
  return res;
}

}  // namespace

LpResult solve_lp(const LpProblem& lp) {
  Tableau t(lp);
  return t.run();
}

}  // namespace crnt::milp
