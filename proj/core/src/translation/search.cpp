#include "crnt/translation/search.hpp"

#include <chrono>

namespace crnt {

namespace {

bool saturated(const Encoding& e, const milp::Solution& s, const Rational& big_m) {
  for (std::size_t i = 0; i < e.m; ++i)
    for (std::size_t j = 0; j < e.n; ++j)
      if (s.values[e.Y(i, j)] >= big_m) return true;
  for (std::size_t j = 0; j < e.n; ++j)
    for (std::size_t k = 0; k < e.r; ++k)
      if (s.values[e.Bt(j, k)] >= big_m || s.values[e.Bs(j, k)] >= big_m) return true;
  return false;
}

}  // namespace

SearchResult find_wr_split_translation(const ReactionNetwork& net, const SearchOptions& opt) {
  SearchResult res;
  for (std::size_t q = std::max<std::size_t>(opt.q_min, 1); q <= opt.q_max; ++q) {
    EncodingParams p = opt.params;
    p.q = q;
    for (int attempt = 0;; ++attempt) {
      Encoding enc = encode(net, p);
      if (opt.on_model) opt.on_model(enc);
      auto t0 = std::chrono::steady_clock::now();
      milp::SolveOptions so = opt.solver;
      if (opt.guided) {
        if (!so.node_filter) so.node_filter = node_filter(net, enc);
        if (!so.dive_nodes) so.dive_nodes = 200000;
        if (so.dive_rank.empty()) so.dive_rank = dive_rank(enc);
        if (so.dive_first.empty()) so.dive_first = dive_first(enc);
      }
      milp::Solution sol = milp::solve(enc.model, so);
      SliceAttempt rec;
      rec.q = q;
      rec.n_vertices = enc.n;
      rec.big_m = p.big_m;
      rec.status = sol.status;
      rec.nodes = sol.nodes;
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rec.note = sol.message;
      if (!sol.values.empty()) rec.objective = sol.objective;
      if (sol.status == milp::SolveStatus::Optimal && saturated(enc, sol, p.big_m) && attempt < opt.big_m_retries) {
        rec.note = "an entry reached big-M; re-solving with big-M x10";
        res.attempts.push_back(rec);
        p.big_m *= Rational(10);
        continue;
      }
      res.attempts.push_back(rec);
      if (sol.status == milp::SolveStatus::BoundExceeded || sol.status == milp::SolveStatus::Unbounded)
        res.indeterminate = true;
      if (!sol.values.empty() && sol.status != milp::SolveStatus::Unbounded) {
        res.translation = decode(net, enc, sol);
        res.objective = sol.objective;
        res.proven_optimal = sol.status == milp::SolveStatus::Optimal;
        res.q = q;
        return res;
      }
      if (res.indeterminate) return res;
      break;
    }
  }
  return res;
}

std::string attempt_summary(const SliceAttempt& a) {
  std::string s = "q=" + std::to_string(a.q) + ": " + milp::to_string(a.status);
  if (a.status == milp::SolveStatus::Infeasible)
    s += " for (q=" + std::to_string(a.q) + ", vertices=" + std::to_string(a.n_vertices) + ", big-M=" + a.big_m.str() + ")";
  if (a.objective) s += ", objective " + a.objective->str();
  s += ", " + std::to_string(a.nodes) + " nodes";
  if (!a.note.empty()) s += " (" + a.note + ")";
  return s;
}

}  // namespace crnt
