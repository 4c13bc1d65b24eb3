#pragma once

// Seeded generators and independent oracles shared by the unit tests and the
// acceptance binary. Oracles deliberately avoid the library code they check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crnt/milp/model.hpp"
#include "crnt/network.hpp"
#include "crnt/rational.hpp"
#include "crnt/translation/split_translation.hpp"

namespace crnt::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline long long uniform_ll(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// ---- graphs

inline MultiGraph random_multigraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  MultiGraph g;
  g.vertex_count = uniform(rng, 1, max_vertices);
  std::size_t r = uniform(rng, 1, max_edges);
  for (std::size_t k = 0; k < r; ++k) g.edges.push_back({uniform(rng, 0, g.vertex_count - 1), uniform(rng, 0, g.vertex_count - 1)});
  return g;
}

// reach[u][v]: v reachable from u by a directed walk (reflexive).
inline std::vector<std::vector<bool>> reachability(const MultiGraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
  for (auto& e : g.edges) reach[e.source][e.target] = true;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      if (reach[u][w])
        for (std::size_t v = 0; v < n; ++v)
          if (reach[w][v]) reach[u][v] = true;
  return reach;
}

// Every edge lies on a directed cycle.
inline bool wr_oracle(const MultiGraph& g) {
  auto reach = reachability(g);
  for (auto& e : g.edges)
    if (!reach[e.target][e.source]) return false;
  return true;
}

// Undirected components, as a vertex -> smallest member map.
inline std::vector<std::size_t> component_root(const MultiGraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::size_t> root(n);
  for (std::size_t v = 0; v < n; ++v) root[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& e : g.edges) {
      std::size_t m = std::min(root[e.source], root[e.target]);
      if (root[e.source] != m || root[e.target] != m) root[e.source] = root[e.target] = m, changed = true;
    }
  }
  return root;
}

// ---- exact linear algebra (plain Gaussian elimination on a copy)

inline std::size_t rank_oracle(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// ---- reaction networks

// Random network with complexes of total molecularity <= max_order over m
// species; complexes are distinct per vertex by construction.
inline ReactionNetwork random_network(Rng& rng, std::size_t max_species, std::size_t max_reactions, long long max_order = 2) {
  ReactionNetwork net;
  std::size_t m = uniform(rng, 1, max_species);
  for (std::size_t i = 0; i < m; ++i) net.species.push_back("X" + std::to_string(i + 1));
  auto random_complex = [&] {
    Complex c;
    long long total = uniform_ll(rng, 0, max_order);
    for (long long t = 0; t < total; ++t) c.add(uniform(rng, 0, m - 1), Rational(1));
    return c;
  };
  auto vertex_of = [&](const Complex& c) {
    for (std::size_t j = 0; j < net.complexes.size(); ++j)
      if (net.complexes[j] == c) return j;
    net.complexes.push_back(c);
    return net.complexes.size() - 1;
  };
  std::size_t r = uniform(rng, 1, max_reactions);
  while (net.graph.edges.size() < r) {
    Complex s = random_complex(), t = random_complex();
    if (s == t) continue;
    net.graph.edges.push_back({vertex_of(s), vertex_of(t)});
    net.labels.push_back("r" + std::to_string(net.graph.edges.size()));
  }
  net.graph.vertex_count = net.complexes.size();
  return net;
}

// Mass-action right-hand side evaluated straight from the reaction list.
inline std::vector<Rational> mas_point(const ReactionNetwork& net, const std::vector<Rational>& x, const std::vector<Rational>& k) {
  std::vector<Rational> f(net.m());
  for (std::size_t e = 0; e < net.r(); ++e) {
    const Complex& src = net.complexes[net.graph.edges[e].source];
    const Complex& dst = net.complexes[net.graph.edges[e].target];
    Rational rate = k[e];
    for (auto& [i, c] : src.coeffs())
      for (long long p = 0; p < c.num(); ++p) rate *= x[i];
    for (std::size_t i = 0; i < net.m(); ++i) f[i] += rate * (dst[i] - src[i]);
  }
  return f;
}

// Generalized mass action of a split translation; slice copies of reaction k share k[k].
inline std::vector<Rational> gmas_point(const SplitTranslation& t, const std::vector<Rational>& x, const std::vector<Rational>& k) {
  const GeneralizedNetwork& g = t.network;
  std::vector<Rational> f(g.m());
  for (std::size_t l = 0; l < t.q(); ++l)
    for (std::size_t r = 0; r < t.slices[l].size(); ++r) {
      const Edge& e = g.graph.edges[t.slices[l][r]];
      Rational rate = k[r];
      for (auto& [i, c] : g.kinetic[e.source].coeffs())
        for (long long p = 0; p < c.num(); ++p) rate *= x[i];
      for (std::size_t i = 0; i < g.m(); ++i) f[i] += rate * (g.stoich[e.target][i] - g.stoich[e.source][i]);
    }
  return f;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(uniform_ll(rng, 1, 97), uniform_ll(rng, 1, 13));
  return p;
}

// ---- MILP

// Small random model: up to `binaries` binary columns plus up to two bounded
// continuous columns, random <=/>=/= rows with small integer data.
inline milp::Model random_model(Rng& rng, std::size_t binaries, std::size_t continuous, std::size_t one_hot = 0) {
  milp::Model m;
  for (std::size_t b = 0; b < binaries; ++b) m.add_variable("b" + std::to_string(b), milp::VarKind::Binary);
  for (std::size_t c = 0; c < continuous; ++c) m.add_variable("c" + std::to_string(c), milp::VarKind::Continuous, Rational(uniform_ll(rng, 1, 6)));
  const std::size_t cols = binaries + continuous;
  std::size_t rows = uniform(rng, 1, 2 + cols / 2);
  for (std::size_t i = 0; i < rows; ++i) {
    milp::LinearExpr ex;
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng, 0.45)) ex[j] = Rational(uniform_ll(rng, -4, 4));
    if (ex.empty()) ex[uniform(rng, 0, cols - 1)] = Rational(1);
    int rel = static_cast<int>(uniform(rng, 0, 5));
    milp::Relation r = rel < 3 ? milp::Relation::LessEq : rel < 5 ? milp::Relation::GreaterEq : milp::Relation::Equal;
    m.add_constraint(ex, r, Rational(uniform_ll(rng, -3, 6)), "row" + std::to_string(i));
  }
  // Pick-one rows over random subsets of the binaries.
  for (std::size_t i = 0; i < one_hot && binaries >= 2; ++i) {
    milp::LinearExpr ex;
    for (std::size_t b = 0; b < binaries; ++b)
      if (coin(rng, 0.4)) ex[b] = Rational(1);
    while (ex.size() < 2) ex[uniform(rng, 0, binaries - 1)] = Rational(1);
    m.add_constraint(ex, milp::Relation::Equal, Rational(1), "pick" + std::to_string(i));
  }
  milp::LinearExpr obj;
  for (std::size_t j = 0; j < cols; ++j) obj[j] = Rational(uniform_ll(rng, -5, 5), uniform_ll(rng, 1, 3));
  m.set_objective(obj);
  return m;
}

// Row-by-row exact check of an assignment, written without Model::satisfies.
inline bool feasible_oracle(const milp::Model& m, const std::vector<Rational>& x) {
  if (x.size() != m.variables().size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& v = m.variables()[j];
    if (x[j].sign() < 0) return false;
    if (v.upper && x[j] > *v.upper) return false;
    if (v.kind != milp::VarKind::Continuous && !x[j].is_integer()) return false;
    if (v.kind == milp::VarKind::Binary && x[j] > Rational(1)) return false;
  }
  for (auto& row : m.constraints()) {
    Rational lhs;
    for (auto& [j, c] : row.expr) lhs += c * x[j];
    if (row.rel == milp::Relation::LessEq && lhs > row.rhs) return false;
    if (row.rel == milp::Relation::GreaterEq && lhs < row.rhs) return false;
    if (row.rel == milp::Relation::Equal && lhs != row.rhs) return false;
  }
  return true;
}

struct BruteResult {
  bool feasible = false;
  Rational objective;
  std::vector<Rational> binaries;  // lexicographically smallest optimal binary vector
  std::vector<std::uint64_t> feasible_masks;  // first declared binary is the top bit
};

// Enumerates every binary vector in lexicographic order; the continuous part
// (at most two columns) is minimized by enumerating vertices of its polygon.
inline BruteResult brute_force(const milp::Model& m) {
  std::vector<std::size_t> bin, con;
  for (std::size_t j = 0; j < m.variables().size(); ++j)
    (m.variables()[j].kind == milp::VarKind::Binary ? bin : con).push_back(j);
  BruteResult best;
  const std::size_t nb = bin.size();
  std::vector<Rational> x(m.variables().size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nb); ++mask) {
    // Lexicographic order: the first declared binary is the most significant bit.
    for (std::size_t b = 0; b < nb; ++b) x[bin[b]] = Rational((mask >> (nb - 1 - b)) & 1 ? 1 : 0);
    // Candidate continuous points: all vertices of the box cut by the rows.
    std::vector<std::vector<Rational>> cands;
    if (con.empty()) {
      cands.push_back({});
    } else {
      // Lines a.c = rhs' restricted to the continuous columns.
      std::vector<std::pair<std::vector<Rational>, Rational>> lines;
      for (std::size_t c = 0; c < con.size(); ++c) {
        std::vector<Rational> a(con.size());
        a[c] = Rational(1);
        lines.push_back({a, Rational(0)});
        lines.push_back({a, m.variables()[con[c]].upper.value()});
      }
      for (auto& row : m.constraints()) {
        std::vector<Rational> a(con.size());
        Rational rhs = row.rhs;
        for (auto& [j, v] : row.expr) {
          auto it = std::find(con.begin(), con.end(), j);
          if (it == con.end())
            rhs -= v * x[j];
          else
            a[static_cast<std::size_t>(it - con.begin())] = v;
        }
        if (std::any_of(a.begin(), a.end(), [](const Rational& v) { return !v.is_zero(); })) lines.push_back({a, rhs});
      }
      if (con.size() == 1) {
        for (auto& [a, rhs] : lines)
          if (!a[0].is_zero()) cands.push_back({rhs / a[0]});
      } else {
        for (std::size_t p = 0; p < lines.size(); ++p)
          for (std::size_t s = p + 1; s < lines.size(); ++s) {
            auto& [a, u] = lines[p];
            auto& [b, v] = lines[s];
            Rational det = a[0] * b[1] - a[1] * b[0];
            if (det.is_zero()) continue;
            cands.push_back({(u * b[1] - a[1] * v) / det, (a[0] * v - u * b[0]) / det});
          }
      }
    }
    for (auto& c : cands) {
      for (std::size_t i = 0; i < con.size(); ++i) x[con[i]] = c[i];
      if (!feasible_oracle(m, x)) continue;
      if (best.feasible_masks.empty() || best.feasible_masks.back() != mask) best.feasible_masks.push_back(mask);
      Rational obj = m.objective_value(x);
      if (!best.feasible || obj < best.objective) {
        best.feasible = true;
        best.objective = obj;
        best.binaries.clear();
        for (auto j : bin) best.binaries.push_back(x[j]);
      }
    }
  }
  return best;
}

}  // namespace crnt::testing
