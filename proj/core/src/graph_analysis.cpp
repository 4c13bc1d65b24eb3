#include "crnt/graph_analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crnt/milp/model.hpp"
#include "crnt/milp/solver.hpp"
#include "json_util.hpp"

namespace crnt {

namespace {

Partition normalize(std::vector<std::size_t> label, std::size_t n) {
  Partition p;
  std::vector<long> slot(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = label[v];
    if (slot[c] < 0) {
      slot[c] = static_cast<long>(p.size());
      p.emplace_back();
    }
    p[static_cast<std::size_t>(slot[c])].push_back(v);
  }
  return p;
}

}  // namespace

Partition linkage_classes(const MultiGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (auto& e : g.edges) parent[find(e.source)] = find(e.target);
  std::vector<std::size_t> label(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) label[v] = find(v);
  return normalize(label, g.vertex_count);
}

Partition strong_linkage_classes(const MultiGraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto& e : g.edges)
    if (!e.self_loop()) adj[e.source].push_back(e.target);
  // Iterative Tarjan.
  std::vector<long> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack, comp(n, 0);
  std::size_t counter = 0, comps = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{start, 0}};
    index[start] = low[start] = static_cast<long>(counter++);
    stack.push_back(start);
    on_stack[start] = 1;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      if (it < adj[v].size()) {
        std::size_t w = adj[v][it++];
        if (index[w] < 0) {
          index[w] = low[w] = static_cast<long>(counter++);
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return normalize(comp, n);
}

bool is_weakly_reversible(const MultiGraph& g) {
  Partition strong = strong_linkage_classes(g);
  std::vector<std::size_t> cls(g.vertex_count);
  for (std::size_t c = 0; c < strong.size(); ++c)
    for (auto v : strong[c]) cls[v] = c;
  for (auto& e : g.edges)
    if (cls[e.source] != cls[e.target]) return false;
  return true;
}

Matrix incidence_matrix(const MultiGraph& g) {
  Matrix a(g.vertex_count, g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.self_loop()) continue;
    a(e.source, k) = -1;
    a(e.target, k) = 1;
  }
  return a;
}

bool structurally_equivalent(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).sign() != b(i, j).sign()) return false;
  return true;
}

bool rows_balanced(const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < b.cols(); ++j) s += b(i, j);
    if (!s.is_zero()) return false;
  }
  return true;
}

namespace {

// Edge weights c_k in [epsilon, bound] (unbounded above when bound is absent)
// with zero net flow at every vertex; minimizes the total weight.
std::optional<std::vector<Rational>> circulation(const MultiGraph& g, const Rational& epsilon,
                                                 const std::optional<Rational>& bound) {
  milp::Model m;
  std::vector<std::optional<std::size_t>> col(g.edges.size());
  milp::LinearExpr obj;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (g.edges[k].self_loop()) continue;
    col[k] = m.add_variable("c" + std::to_string(k + 1), milp::VarKind::Continuous, bound);
    obj[*col[k]] = Rational(1);
    m.add_constraint({{*col[k], Rational(1)}}, milp::Relation::GreaterEq, epsilon);
  }
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    milp::LinearExpr row;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      const Edge& e = g.edges[k];
      if (!col[k]) continue;
      if (e.target == v) row[*col[k]] += Rational(1);
      if (e.source == v) row[*col[k]] -= Rational(1);
    }
    if (!row.empty()) m.add_constraint(row, milp::Relation::Equal, Rational());
  }
  m.set_objective(obj);
  milp::Solution s = milp::lp_relax_solve(m);
  if (s.status != milp::SolveStatus::Optimal) return std::nullopt;
  std::vector<Rational> c(g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (col[k]) c[k] = s.values[*col[k]];
  return c;
}

}  // namespace

std::optional<WrCertificate> wr_certificate(const MultiGraph& g, const CertificateOptions& opt) {
  WrCertificate cert;
  cert.bound = opt.bound;
  auto c = circulation(g, opt.epsilon, cert.bound);
  if (!c) {
    c = circulation(g, opt.epsilon, std::nullopt);
    if (!c) return std::nullopt;
  }
  for (int round = 0; round < 64; ++round) {
    Rational top;
    for (auto& v : *c) top = max(top, v);
    if (top < cert.bound) break;
    cert.warnings.push_back("flow entry reached bound " + cert.bound.str() + "; bound doubled");
    while (top >= cert.bound) cert.bound *= Rational(2);
    c = circulation(g, opt.epsilon, cert.bound);
    if (!c) return std::nullopt;
  }
  Matrix a = incidence_matrix(g);
  cert.flow = Matrix(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) cert.flow(i, k) = a(i, k) * (*c)[k];
  return cert;
}

SubspaceDims subspace_dims(const GeneralizedNetwork& net) {
  Matrix s(net.m(), net.r()), k(net.m(), net.r());
  for (std::size_t e = 0; e < net.r(); ++e) {
    s.set_column(e, stoich_reaction_vector(net, e));
    k.set_column(e, kinetic_reaction_vector(net, e));
  }
  return {rank(s), rank(k)};
}

StructuralReport analyze(const GeneralizedNetwork& net) {
  StructuralReport rep;
  rep.n = net.n();
  rep.r = net.r();
  rep.linkage = linkage_classes(net.graph);
  rep.strong_linkage = strong_linkage_classes(net.graph);
  rep.weakly_reversible = is_weakly_reversible(net.graph);
  SubspaceDims d = subspace_dims(net);
  rep.dim_stoich = d.stoich;
  rep.dim_kinetic = d.kinetic;
  const long base = static_cast<long>(rep.n) - static_cast<long>(rep.l());
  rep.deficiency = base - static_cast<long>(d.stoich);
  rep.kinetic_deficiency = base - static_cast<long>(d.kinetic);
  return rep;
}

StructuralReport analyze(const ReactionNetwork& net) { return analyze(as_generalized(net)); }

std::string report_to_json(const StructuralReport& rep) {
  using detail::json;
  auto classes = [](const Partition& p) {
    json a = json::array();
    for (auto& c : p) {
      json cls = json::array();
      for (auto v : c) cls.push_back(v + 1);
      a.push_back(cls);
    }
    return a;
  };
  json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["l"] = rep.l();
  j["dimS"] = rep.dim_stoich;
  j["dimSprime"] = rep.dim_kinetic ? json(*rep.dim_kinetic) : json(nullptr);
  j["delta"] = rep.deficiency;
  j["deltaPrime"] = rep.kinetic_deficiency ? json(*rep.kinetic_deficiency) : json(nullptr);
  j["weaklyReversible"] = rep.weakly_reversible;
  j["linkageClasses"] = classes(rep.linkage);
  j["strongLinkageClasses"] = classes(rep.strong_linkage);
  return j.dump(2) + "\n";
}

}  // namespace crnt
