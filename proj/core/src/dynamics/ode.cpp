#include "crnt/dynamics/ode.hpp"

#include <algorithm>
#include <stdexcept>

namespace crnt::dyn {

namespace {

// Adds rate * (target - source) * x^kinetic to the system.
void add_edge(OdeSystem& sys, std::size_t rate, const Vector& change, const Complex& kinetic) {
  Exponents e(sys.symbols.size(), 0);
  for (auto& [i, c] : kinetic.coeffs()) {
    if (!c.is_integer() || c.sign() < 0) throw std::invalid_argument("kinetic orders must be nonnegative integers");
    e[sys.symbols.x(i)] = static_cast<std::uint32_t>(c.num());
  }
  e[sys.symbols.k(rate)] += 1;
  for (std::size_t i = 0; i < change.size(); ++i)
    if (!change[i].is_zero()) sys.rhs[i].add_term(e, change[i]);
}

OdeSystem empty_system(std::size_t m, std::size_t r, std::size_t t) {
  OdeSystem sys;
  sys.symbols = SymbolTable(m, r, t);
  sys.rhs.assign(m, Polynomial(sys.symbols.size()));
  return sys;
}

}  // namespace

OdeSystem mas_rhs(const ReactionNetwork& net, std::size_t taus) {
  OdeSystem sys = empty_system(net.m(), net.r(), taus);
  for (std::size_t k = 0; k < net.r(); ++k)
    add_edge(sys, k, reaction_vector(net, k), net.complexes[net.graph.edges[k].source]);
  return sys;
}

OdeSystem gmas_rhs(const GeneralizedNetwork& net) {
  OdeSystem sys = empty_system(net.m(), net.r(), 0);
  for (std::size_t k = 0; k < net.r(); ++k)
    add_edge(sys, k, stoich_reaction_vector(net, k), net.kinetic[net.graph.edges[k].source]);
  return sys;
}

OdeSystem gmas_rhs(const SplitTranslation& t) {
  const GeneralizedNetwork& g = t.network;
  OdeSystem sys = empty_system(g.m(), t.original.r(), 0);
  for (std::size_t l = 0; l < t.q(); ++l)
    for (std::size_t k = 0; k < t.slices[l].size(); ++k) {
      std::size_t e = t.slices[l][k];
      add_edge(sys, k, stoich_reaction_vector(g, e), g.kinetic[g.graph.edges[e].source]);
    }
  return sys;
}

bool kappa_linear(const OdeSystem& sys) {
  for (auto& p : sys.rhs)
    for (auto& [e, c] : p.terms()) {
      std::uint64_t deg = 0;
      for (std::size_t v = 0; v < e.size(); ++v)
        if (sys.symbols.is_kappa(v)) deg += e[v];
      if (deg != 1) return false;
    }
  return true;
}

std::optional<std::size_t> Equivalence::first_difference() const {
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (!diff[i].is_zero()) return i;
  return std::nullopt;
}

Equivalence dynamically_equivalent(const OdeSystem& a, const OdeSystem& b) {
  if (!(a.symbols == b.symbols) || a.rhs.size() != b.rhs.size())
    throw std::invalid_argument("systems are over different symbol tables");
  Equivalence eq;
  for (std::size_t i = 0; i < a.rhs.size(); ++i) {
    eq.diff.push_back(a.rhs[i] - b.rhs[i]);
    if (!eq.diff.back().is_zero()) eq.equivalent = false;
  }
  return eq;
}

ParamCheck check_parametrization(const ReactionNetwork& net, const Parametrization& param) {
  const std::size_t m = net.m();
  if (param.x.size() != m || param.symbols.x_count() != m || param.symbols.k_count() != net.r())
    throw std::invalid_argument("parametrization does not match the network's species and reactions");
  for (std::size_t i = 0; i < m; ++i)
    if (param.x[i].den().is_zero()) throw std::domain_error("x" + std::to_string(i + 1) + " has a zero denominator");
  ParamCheck out;
  out.symbols = param.symbols;
  const std::size_t vars = param.symbols.size();
  std::vector<std::uint32_t> power = param.power;
  power.resize(m, 1);
  // Highest power of each given value over all source complexes. A value for
  // x_i^d only covers sources whose x_i exponent is a multiple of d.
  std::vector<std::uint32_t> top(m, 0);
  for (auto& e : net.graph.edges)
    for (auto& [i, c] : net.complexes[e.source].coeffs()) {
      if (!c.is_integer()) throw std::invalid_argument("mass action needs integer source stoichiometry");
      auto y = static_cast<std::uint32_t>(c.num());
      if (y % power[i])
        throw std::invalid_argument("a source uses x" + std::to_string(i + 1) + "^" + std::to_string(y) +
                                    ", which the given x" + std::to_string(i + 1) + "^" + std::to_string(power[i]) +
                                    " does not determine");
      top[i] = std::max(top[i], y / power[i]);
    }
  std::vector<std::vector<Polynomial>> num_pow(m), den_pow(m);
  for (std::size_t i = 0; i < m; ++i) {
    num_pow[i].push_back(Polynomial::constant(vars, Rational(1)));
    den_pow[i].push_back(Polynomial::constant(vars, Rational(1)));
    for (std::uint32_t p = 1; p <= top[i]; ++p) {
      num_pow[i].push_back(num_pow[i].back() * param.x[i].num());
      den_pow[i].push_back(den_pow[i].back() * param.x[i].den());
    }
  }
  // Each source monomial x^y becomes prod N_i^{y_i} D_i^{top_i - y_i} after
  // multiplying through by prod D_i^{top_i}.
  out.residuals.assign(m, Polynomial(vars));
  for (std::size_t k = 0; k < net.r(); ++k) {
    Vector change = reaction_vector(net, k);
    if (std::all_of(change.begin(), change.end(), [](const Rational& v) { return v.is_zero(); })) continue;
    const Complex& src = net.complexes[net.graph.edges[k].source];
    Polynomial mono = Polynomial::variable(vars, param.symbols.k(k));
    for (std::size_t i = 0; i < m; ++i) {
      auto y = static_cast<std::uint32_t>(src[i].num()) / power[i];
      mono = mono * num_pow[i][y] * den_pow[i][top[i] - y];
    }
    for (std::size_t i = 0; i < m; ++i)
      if (!change[i].is_zero()) {
        Polynomial t = mono;
        t *= change[i];
        out.residuals[i] += t;
      }
  }
  for (auto& p : out.residuals)
    if (!p.is_zero()) out.ok = false;
  return out;
}

Vector eval_rhs(const OdeSystem& sys, const Vector& x, const Vector& kappa) {
  if (x.size() != sys.symbols.x_count() || kappa.size() != sys.symbols.k_count())
    throw std::invalid_argument("evaluation point does not match the system's dimensions");
  std::vector<Rational> point(sys.symbols.size());
  std::copy(x.begin(), x.end(), point.begin());
  std::copy(kappa.begin(), kappa.end(), point.begin() + static_cast<long>(x.size()));
  Vector out;
  for (auto& p : sys.rhs) out.push_back(p.evaluate(point));
  return out;
}

}  // namespace crnt::dyn
