#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>

#include "crnt/milp/simplex.hpp"
#include "crnt/translation/encoding.hpp"

namespace crnt {

namespace {

// Slots are the per-reaction source choice (slot k) and the per-slice target
// choices (slot r + k*q + l). An assignment maps each slot to a vertex or -1.
class Pruner {
 public:
  Pruner(const ReactionNetwork& net, const Encoding& enc)
      : n_(enc.n), r_(enc.r), q_(enc.q), m_(enc.m), gamma_(build_matrices(net).gamma) {
    big_m_ = enc.model.variables()[enc.Y(0, 0)].upper;
    cols_.resize(slots() * n_);
    for (std::size_t k = 0; k < r_; ++k)
      for (std::size_t j = 0; j < n_; ++j) {
        cols_[k * n_ + j] = enc.As(j, k);
        for (std::size_t l = 0; l < q_; ++l) cols_[target_slot(k, l) * n_ + j] = enc.At(j, k, l);
      }
  }

  bool operator()(std::vector<signed char>& st) {
    const std::size_t S = slots();
    assign_.assign(S, -1);
    cand_.assign(S, 0);
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t j = 0; j < n_; ++j) {
        signed char v = st[cols_[s * n_ + j]];
        if (v != 0) cand_[s] |= std::uint64_t(1) << j;
        if (v == 1) assign_[s] = static_cast<int>(j);
      }
    if (!forward_check()) return false;
    if (std::size_t i = inconsistent_species(assign_); i < m_) return learn(assign_, i), false;
    // Probe every open slot: a vertex that makes the fixed part inconsistent
    // leaves a nogood behind. Known nogoods were applied by forward_check.
    for (std::size_t s = 0; s < S; ++s) {
      if (assign_[s] >= 0) continue;
      std::vector<int> a = assign_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!(cand_[s] >> j & 1)) continue;
        a[s] = static_cast<int>(j);
        if (std::size_t i = inconsistent_species(a); i < m_) {
          learn(a, i);
          cand_[s] &= ~(std::uint64_t(1) << j);
        }
      }
      if (cand_[s] == 0) return false;
    }
    if (!cycles_possible()) return false;
    for (std::size_t s = 0; s < S; ++s)
      for (std::size_t j = 0; j < n_; ++j)
        if (!(cand_[s] >> j & 1)) st[cols_[s * n_ + j]] = 0;
    return true;
  }

 private:
  std::size_t slots() const { return r_ + r_ * q_; }
  std::size_t target_slot(std::size_t k, std::size_t l) const { return r_ + k * q_ + l; }

  static std::string key_of(const std::vector<int>& a) {
    std::string s;
    for (int v : a) s += static_cast<char>(v + 1);
    return s;
  }

  // Every fixed non-trivial edge must be able to return to its source over
  // edges that are still possible.
  bool cycles_possible() const {
    std::vector<std::uint64_t> reach(n_, 0);
    bool any = false;
    for (std::size_t k = 0; k < r_; ++k)
      for (std::size_t l = 0; l < q_; ++l) {
        std::uint64_t tgt = cand_[target_slot(k, l)];
        for (std::size_t j = 0; j < n_; ++j)
          if (cand_[k] >> j & 1) reach[j] |= tgt;
        int s = assign_[k], t = assign_[target_slot(k, l)];
        any = any || (s >= 0 && t >= 0 && s != t);
      }
    if (!any) return true;
    for (std::size_t j = 0; j < n_; ++j) reach[j] |= std::uint64_t(1) << j;
    for (std::size_t via = 0; via < n_; ++via)
      for (std::size_t a = 0; a < n_; ++a)
        if (reach[a] >> via & 1) reach[a] |= reach[via];
    for (std::size_t k = 0; k < r_; ++k)
      for (std::size_t l = 0; l < q_; ++l) {
        int s = assign_[k], t = assign_[target_slot(k, l)];
        if (s >= 0 && t >= 0 && s != t && !(reach[t] >> s & 1)) return false;
      }
    return true;
  }

  // A nogood with every member fixed prunes the node; one with a single open
  // member removes that vertex from the open slot.
  bool forward_check() {
    std::vector<std::uint64_t>& left = cand_;
    for (auto& g : nogoods_) {
      std::size_t open_slot = SIZE_MAX;
      int open_vertex = -1;
      bool dead = false;
      for (auto [s, j] : g) {
        if (assign_[s] == j) continue;
        if (assign_[s] >= 0 || open_slot != SIZE_MAX) {
          dead = true;
          break;
        }
        open_slot = s, open_vertex = j;
      }
      if (dead) continue;
      if (open_slot == SIZE_MAX) return false;
      left[open_slot] &= ~(std::uint64_t(1) << open_vertex);
      if (left[open_slot] == 0) return false;
    }
    return true;
  }

  // LP over the complex columns of one species: fixed slots pin the source
  // and target complexes, open target slots absorb up to big-M each.
  bool consistent(const std::vector<int>& a, std::size_t i) const {
    milp::LpProblem lp;
    for (std::size_t c = 0; c < n_; ++c) lp.add_column(Rational(), big_m_);
    const Rational q(static_cast<long long>(q_));
    std::vector<Rational> coef(n_);
    for (std::size_t k = 0; k < r_; ++k) {
      if (a[k] < 0) continue;
      std::size_t open = 0;
      std::fill(coef.begin(), coef.end(), Rational());
      coef[static_cast<std::size_t>(a[k])] -= q;
      for (std::size_t l = 0; l < q_; ++l) {
        int t = a[target_slot(k, l)];
        if (t < 0)
          ++open;
        else
          coef[static_cast<std::size_t>(t)] += Rational(1);
      }
      milp::LpRow row;
      for (std::size_t j = 0; j < n_; ++j)
        if (!coef[j].is_zero()) row.coeffs.emplace_back(j, coef[j]);
      const Rational& g = gamma_(i, k);
      row.hi = g;
      if (open == 0)
        row.lo = g;
      else if (big_m_)
        row.lo = g - *big_m_ * Rational(static_cast<long long>(open));
      if (row.coeffs.empty()) {
        if (g.sign() < 0 || (row.lo && row.lo->sign() > 0)) return false;
        continue;
      }
      lp.rows.push_back(std::move(row));
    }
    return milp::solve_lp(lp).status != milp::LpStatus::Infeasible;
  }

  // Returns the first species whose columns admit no solution, or m_.
  std::size_t inconsistent_species(const std::vector<int>& a) {
    std::string key = key_of(a);
    if (feasible_.count(key)) return m_;
    for (std::size_t i = 0; i < m_; ++i)
      if (!consistent(a, i)) return i;
    if (feasible_.size() > 500000) feasible_.clear();
    feasible_.insert(std::move(key));
    return m_;
  }

  // Deletion filter down to a minimal set of fixed slots that is
  // inconsistent for species i.
  void learn(std::vector<int> a, std::size_t i) {
    for (std::size_t s = slots(); s-- > 0;) {
      if (a[s] < 0) continue;
      int keep = a[s];
      a[s] = -1;
      if (consistent(a, i)) a[s] = keep;
    }
    std::vector<std::pair<std::size_t, int>> g;
    for (std::size_t s = 0; s < slots(); ++s)
      if (a[s] >= 0) g.emplace_back(s, a[s]);
    if (nogoods_.size() < 200000) nogoods_.push_back(std::move(g));
  }

  std::size_t n_, r_, q_, m_;
  Matrix gamma_;
  std::optional<Rational> big_m_;
  std::vector<std::size_t> cols_;
  std::vector<int> assign_;
  std::vector<std::uint64_t> cand_;
  std::vector<std::vector<std::pair<std::size_t, int>>> nogoods_;
  std::unordered_set<std::string> feasible_;
};

}  // namespace

std::function<bool(std::vector<signed char>&)> node_filter(const ReactionNetwork& net, const Encoding& enc) {
  if (enc.n > 64 || enc.model.variables().empty()) return {};
  auto p = std::make_shared<Pruner>(net, enc);
  return [p](std::vector<signed char>& st) { return (*p)(st); };
}

std::vector<int> dive_rank(const Encoding& enc) {
  std::vector<int> rank(enc.model.variables().size(), 0);
  if (enc.pinned.empty()) return rank;
  std::vector<char> source(enc.n, 0);
  for (auto v : enc.pinned) source[v] = 1;
  for (std::size_t k = 0; k < enc.r; ++k)
    for (std::size_t l = 0; l < enc.q; ++l)
      for (std::size_t j = 0; j < enc.n; ++j)
        rank[enc.At(j, k, l)] = l > 0 && enc.pinned[enc.group_of[k]] == j ? 2 : source[j];
  return rank;
}

std::vector<std::size_t> dive_first(const Encoding& enc) {
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < enc.r; ++k)
    for (std::size_t l = 1; l < enc.q; ++l) cols.push_back(enc.L(k, l));
  return cols;
}

}  // namespace crnt
