#include "crnt/translation/encoding.hpp"

#include <stdexcept>
#include <string>

namespace crnt {

namespace {

using milp::LinearExpr;
using milp::Relation;
using milp::VarKind;

std::string name(const char* stem, std::initializer_list<std::size_t> idx) {
  std::string s = stem;
  for (auto i : idx) s += "_" + std::to_string(i + 1);
  return s;
}

// Source vertices in the labelling that the source-order rule and the
// lexicographic rule agree on: every new source complex takes the highest free vertex. Returns an
// empty vector if that labelling violates the source-order rule.
std::vector<std::size_t> pin_sources(const std::vector<std::size_t>& group_of, std::size_t groups, std::size_t n) {
  std::vector<std::size_t> vertex(groups, SIZE_MAX);
  std::size_t next = n;
  std::vector<std::size_t> first_use(n, SIZE_MAX);
  for (std::size_t k = 0; k < group_of.size(); ++k) {
    std::size_t& v = vertex[group_of[k]];
    if (v == SIZE_MAX) {
      if (next == 0) return {};
      v = --next;
      first_use[v] = k;
    }
    // Row (j, k) with beta(k) < j <= k needs vertex j used before reaction k.
    for (std::size_t j = v + 1; j <= k && j < n; ++j)
      if (first_use[j] >= k) return {};
  }
  return vertex;
}

}  // namespace

void validate_params(const ReactionNetwork& net, const EncodingParams& p) {
  if (p.q < 1) throw std::invalid_argument("slice count must be at least 1");
  if (p.epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
  if (p.big_m.sign() <= 0) throw std::invalid_argument("big-M must be positive");
  const std::size_t n = p.n_vertices.value_or(net.n());
  const std::size_t sources = distinct_sources(net);
  if (n < sources)
    throw std::invalid_argument("vertex budget " + std::to_string(n) + " is below the " + std::to_string(sources) +
                                " distinct source complexes");
  Rational need = p.epsilon * Rational(static_cast<long long>(n * p.q * net.r()));
  if (need > p.big_m)
    throw std::invalid_argument("big-M " + p.big_m.str() + " is below epsilon * vertices * slices * reactions = " + need.str());
}

Encoding encode(const ReactionNetwork& net, const EncodingParams& p) {
  validate_params(net, p);
  Encoding e;
  e.m = net.m();
  e.n = p.n_vertices.value_or(net.n());
  e.r = net.r();
  e.q = p.q;
  const std::size_t m = e.m, n = e.n, r = e.r, q = e.q;
  const Rational M = p.big_m, eps = p.epsilon;
  milp::Model& model = e.model;
  StoichMatrices sm = build_matrices(net);

  // Source groups.
  std::vector<std::size_t> group_of_vertex(net.n(), SIZE_MAX), reps;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t s = net.graph.edges[k].source;
    if (group_of_vertex[s] == SIZE_MAX) {
      group_of_vertex[s] = reps.size();
      reps.push_back(k);
    }
    e.group_of.push_back(group_of_vertex[s]);
  }

  // Continuous columns.
  const VarKind ykind = p.integral_complexes ? VarKind::Integer : VarKind::Continuous;
  e.y_.resize(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) e.y_[i * n + j] = model.add_variable(name("Y", {i, j}), ykind, M);
  e.gt_.resize(m * r * q);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < q; ++l)
        e.gt_[(i * r + k) * q + l] = model.add_variable(name("Gt", {i, k, l}), VarKind::Continuous, M);
  e.gs_.resize(m * r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) e.gs_[i * r + k] = model.add_variable(name("Gs", {i, k}), VarKind::Continuous, M);
  e.bt_.resize(n * r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) e.bt_[j * r + k] = model.add_variable(name("Bt", {j, k}), VarKind::Continuous);
  e.bs_.resize(n * r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) e.bs_[j * r + k] = model.add_variable(name("Bs", {j, k}), VarKind::Continuous);

  // Binary columns, declared in the order branch and bound visits them.
  e.as_.resize(n * r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) e.as_[j * r + k] = model.add_variable(name("As", {j, k}), VarKind::Binary);
  e.at_.resize(n * r * q);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < q; ++l)
      for (std::size_t j = 0; j < n; ++j)
        e.at_[(j * r + k) * q + l] = model.add_variable(name("At", {j, k, l}), VarKind::Binary);
  e.d_.resize(n * r * q);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < q; ++l)
      for (std::size_t j = 0; j < n; ++j)
        e.d_[(j * r + k) * q + l] = model.add_variable(name("D", {j, k, l}), VarKind::Binary);
  e.lambda_.resize(r * q);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < q; ++l) e.lambda_[k * q + l] = model.add_variable(name("L", {k, l}), VarKind::Binary);

  const Rational one(1), minus(-1);
  const Rational Q(static_cast<long long>(q));

  // Stoic: the slice targets minus q copies of the source give the reaction vector.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      LinearExpr ex;
      for (std::size_t l = 0; l < q; ++l) ex[e.Gt(i, k, l)] = one;
      ex[e.Gs(i, k)] = -Q;
      model.add_constraint(ex, Relation::Equal, sm.gamma(i, k), name("stoic", {i, k}));
    }

  // Incidence 1: the source and target columns equal the chosen vertex's complex.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        model.add_constraint({{e.Y(i, j), one}, {e.Gs(i, k), minus}, {e.As(j, k), M}}, Relation::LessEq, M,
                             name("incs_lo", {i, j, k}));
        model.add_constraint({{e.Gs(i, k), one}, {e.Y(i, j), minus}, {e.As(j, k), M}}, Relation::LessEq, M,
                             name("incs_hi", {i, j, k}));
        for (std::size_t l = 0; l < q; ++l) {
          model.add_constraint({{e.Y(i, j), one}, {e.Gt(i, k, l), minus}, {e.At(j, k, l), M}}, Relation::LessEq, M,
                               name("inct_lo", {i, j, k, l}));
          model.add_constraint({{e.Gt(i, k, l), one}, {e.Y(i, j), minus}, {e.At(j, k, l), M}}, Relation::LessEq, M,
                               name("inct_hi", {i, j, k, l}));
        }
      }

  // Incidence 2: one source and one target per slice.
  for (std::size_t k = 0; k < r; ++k) {
    LinearExpr ex;
    for (std::size_t j = 0; j < n; ++j) ex[e.As(j, k)] = one;
    model.add_constraint(ex, Relation::Equal, one, name("src", {k}));
    for (std::size_t l = 0; l < q; ++l) {
      LinearExpr et;
      for (std::size_t j = 0; j < n; ++j) et[e.At(j, k, l)] = one;
      model.add_constraint(et, Relation::Equal, one, name("tgt", {k, l}));
    }
  }

  // Reactions with one source complex share a vertex, and distinct source
  // complexes get distinct vertices (their kinetic-order complexes differ).
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t rep = reps[e.group_of[k]];
    if (rep == k) continue;
    for (std::size_t j = 0; j < n; ++j)
      model.add_constraint({{e.As(j, k), one}, {e.As(j, rep), minus}}, Relation::Equal, Rational(), name("same_src", {j, k}));
  }
  if (reps.size() > 1)
    for (std::size_t j = 0; j < n; ++j) {
      LinearExpr ex;
      for (auto rep : reps) ex[e.As(j, rep)] = one;
      model.add_constraint(ex, Relation::LessEq, one, name("one_src", {j}));
    }

  // Weak reversibility: a positive flow on every used edge, balanced at every
  // vertex and conserved along each reaction.
  for (std::size_t j = 0; j < n; ++j) {
    LinearExpr ex;
    for (std::size_t k = 0; k < r; ++k) {
      ex[e.Bt(j, k)] += one;
      ex[e.Bs(j, k)] += minus;
    }
    model.add_constraint(ex, Relation::Equal, Rational(), name("wr_bal", {j}));
  }
  for (std::size_t k = 0; k < r; ++k) {
    LinearExpr ex;
    for (std::size_t j = 0; j < n; ++j) {
      ex[e.Bt(j, k)] += one;
      ex[e.Bs(j, k)] += minus;
    }
    model.add_constraint(ex, Relation::Equal, Rational(), name("wr_edge", {k}));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      model.add_constraint({{e.Bs(j, k), one}, {e.As(j, k), -eps}}, Relation::GreaterEq, Rational(), name("wrs_lo", {j, k}));
      model.add_constraint({{e.Bs(j, k), one}, {e.As(j, k), -M}}, Relation::LessEq, Rational(), name("wrs_hi", {j, k}));
      LinearExpr lo{{e.Bt(j, k), one}}, hi{{e.Bt(j, k), one}};
      for (std::size_t l = 0; l < q; ++l) {
        lo[e.At(j, k, l)] = -eps;
        hi[e.At(j, k, l)] = -M;
      }
      model.add_constraint(lo, Relation::GreaterEq, Rational(), name("wrt_lo", {j, k}));
      model.add_constraint(hi, Relation::LessEq, Rational(), name("wrt_hi", {j, k}));
    }

  // Source order: new source complexes take the lowest available index.
  if (p.symmetry_breaking)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < r; ++k) {
        if (j == 0) continue;  // both sides are empty
        LinearExpr ex;
        for (std::size_t k2 = 0; k2 < k; ++k2) ex[e.As(j, k2)] += one;
        for (std::size_t j2 = 0; j2 < j; ++j2) ex[e.As(j2, k)] += minus;
        model.add_constraint(ex, Relation::GreaterEq, Rational(), name("eff1", {j, k}));
      }

  // Edge marking: Delta marks the vertices a slice edge touches, Lambda the
  // non-trivial slice edges.
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < q; ++l) {
      for (std::size_t j = 0; j < n; ++j) {
        model.add_constraint({{e.As(j, k), one}, {e.At(j, k, l), minus}, {e.D(j, k, l), minus}}, Relation::LessEq,
                             Rational(), name("dlt_s", {j, k, l}));
        model.add_constraint({{e.At(j, k, l), one}, {e.As(j, k), minus}, {e.D(j, k, l), minus}}, Relation::LessEq,
                             Rational(), name("dlt_t", {j, k, l}));
      }
      LinearExpr ex;
      for (std::size_t j = 0; j < n; ++j) ex[e.D(j, k, l)] = one;
      LinearExpr up = ex, down = ex;
      up[e.L(k, l)] = -M;
      down[e.L(k, l)] = M;
      model.add_constraint(up, Relation::LessEq, Rational(), name("lam_hi", {k, l}));
      model.add_constraint(down, Relation::GreaterEq, Rational(), name("lam_lo", {k, l}));
      if (p.symmetry_breaking && l + 1 < q)
        model.add_constraint({{e.L(k, l + 1), one}, {e.L(k, l), minus}}, Relation::LessEq, Rational(), name("lam_ord", {k, l}));
    }

  // A reaction with a nonzero vector needs a non-trivial edge in some slice.
  for (std::size_t k = 0; k < r; ++k) {
    if (net.graph.edges[k].self_loop()) continue;
    if (p.symmetry_breaking) {
      model.add_constraint({{e.L(k, 0), one}}, Relation::GreaterEq, one, name("nontriv", {k}));
    } else {
      LinearExpr ex;
      for (std::size_t l = 0; l < q; ++l) ex[e.L(k, l)] = one;
      model.add_constraint(ex, Relation::GreaterEq, one, name("nontriv", {k}));
    }
  }

  if (p.symmetry_breaking) {
    // Non-trivial copies of a reaction list their targets by decreasing index.
    const Rational N(static_cast<long long>(n));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l + 1 < q; ++l) {
        LinearExpr ex;
        for (std::size_t j = 0; j < n; ++j) {
          Rational w(static_cast<long long>(j + 1));
          ex[e.At(j, k, l + 1)] += w;
          ex[e.At(j, k, l)] -= w;
        }
        ex[e.L(k, l + 1)] = N;
        model.add_constraint(ex, Relation::LessEq, N, name("copy_ord", {k, l}));
      }
    // Vertex labels are interchangeable, so the source columns can be fixed
    // to the first labelling the source-order rule admits.
    e.pinned = pin_sources(e.group_of, reps.size(), n);
    if (!e.pinned.empty())
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < n; ++j)
          model.add_constraint({{e.As(j, k), one}}, Relation::Equal, Rational(e.pinned[e.group_of[k]] == j ? 1 : 0),
                               name("pin", {j, k}));
  }

  LinearExpr obj;
  for (auto c : e.y_) obj[c] = one;
  for (auto c : e.lambda_) obj[c] = one;
  model.set_objective(obj);
  return e;
}

SplitTranslation decode(const ReactionNetwork& net, const Encoding& enc, const milp::Solution& sol) {
  if (sol.status != milp::SolveStatus::Optimal && sol.values.empty())
    throw std::invalid_argument("cannot decode a solution without an assignment");
  const auto& x = sol.values;
  std::string why;
  if (!enc.model.satisfies(x, &why)) throw std::runtime_error("assignment fails exact re-verification: " + why);
  const std::size_t r = enc.r, q = enc.q, n = enc.n;
  auto pick = [&](auto column) {
    for (std::size_t j = 0; j < n; ++j)
      if (x[column(j)] == Rational(1)) return j;
    throw std::runtime_error("assignment selects no vertex");
  };
  std::vector<std::size_t> beta(r);
  std::vector<std::vector<std::size_t>> target(q, std::vector<std::size_t>(r));
  for (std::size_t k = 0; k < r; ++k) {
    beta[k] = pick([&](std::size_t j) { return enc.As(j, k); });
    for (std::size_t l = 0; l < q; ++l) target[l][k] = pick([&](std::size_t j) { return enc.At(j, k, l); });
  }
  // Renumber used vertices by first use.
  std::vector<std::size_t> label(n, SIZE_MAX);
  std::vector<std::size_t> order;
  auto use = [&](std::size_t j) {
    if (label[j] == SIZE_MAX) label[j] = order.size(), order.push_back(j);
  };
  for (std::size_t k = 0; k < r; ++k) {
    use(beta[k]);
    for (std::size_t l = 0; l < q; ++l) use(target[l][k]);
  }
  SplitTranslation t;
  t.original = net;
  GeneralizedNetwork& g = t.network;
  g.species = net.species;
  g.graph.vertex_count = order.size();
  std::vector<char> is_source(order.size(), 0);
  g.kinetic.resize(order.size());
  for (std::size_t k = 0; k < r; ++k) {
    is_source[label[beta[k]]] = 1;
    g.kinetic[label[beta[k]]] = net.complexes[net.graph.edges[k].source];
  }
  for (std::size_t v = 0; v < order.size(); ++v) {
    Complex c;
    for (std::size_t i = 0; i < enc.m; ++i) c.set(i, x[enc.Y(i, order[v])]);
    g.stoich.push_back(c);
    g.vertex_names.push_back("v" + std::to_string(v + 1));
    if (!is_source[v]) {
      g.kinetic[v] = c;
      t.target_only.push_back(v);
    }
  }
  t.slices.assign(q, std::vector<std::size_t>(r));
  for (std::size_t l = 0; l < q; ++l)
    for (std::size_t k = 0; k < r; ++k) {
      t.slices[l][k] = g.graph.edges.size();
      g.graph.edges.push_back({label[beta[k]], label[target[l][k]]});
      g.labels.push_back(net.labels[k]);
    }
  VerifyReport rep = verify_split_translation(t);
  if (!rep.ok) {
    const Violation& v = rep.violations.front();
    throw std::runtime_error("decoded translation violates condition (" + v.condition + ") at " + v.reaction + ": " + v.detail);
  }
  return t;
}

}  // namespace crnt
