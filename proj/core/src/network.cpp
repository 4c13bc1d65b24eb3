#include "crnt/network.hpp"

#include <compare>
#include <set>
#include <stdexcept>

namespace crnt {

Complex::Complex(std::map<std::size_t, Rational> coeffs) {
  for (auto& [s, c] : coeffs) set(s, c);
}

Complex Complex::from_vector(const Vector& v) {
  Complex c;
  for (std::size_t i = 0; i < v.size(); ++i) c.set(i, v[i]);
  return c;
}

Rational Complex::operator[](std::size_t species) const {
  auto it = coeffs_.find(species);
  return it == coeffs_.end() ? Rational() : it->second;
}

void Complex::set(std::size_t species, const Rational& value) {
  if (value.sign() < 0) throw std::invalid_argument("negative coefficient in complex");
  if (value.is_zero())
    coeffs_.erase(species);
  else
    coeffs_[species] = value;
}

void Complex::add(std::size_t species, const Rational& value) { set(species, (*this)[species] + value); }

Vector Complex::to_vector(std::size_t m) const {
  Vector v(m);
  for (auto& [s, c] : coeffs_) {
    if (s >= m) throw std::out_of_range("species index out of range");
    v[s] = c;
  }
  return v;
}

std::string Complex::str(const std::vector<std::string>& names) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto& [s, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    if (c != Rational(1)) out += c.str() + " ";
    out += s < names.size() ? names[s] : "S" + std::to_string(s + 1);
  }
  return out;
}

std::strong_ordering Complex::compare(const Complex& b) const {
  auto i = coeffs_.begin();
  auto j = b.coeffs_.begin();
  for (; i != coeffs_.end() && j != b.coeffs_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first <=> j->first;
    int c = crnt::compare(i->second, j->second);
    if (c != 0) return c <=> 0;
  }
  if (i == coeffs_.end() && j == b.coeffs_.end()) return std::strong_ordering::equal;
  return i == coeffs_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

void check_graph(const MultiGraph& g) {
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.source >= g.vertex_count || e.target >= g.vertex_count)
      throw std::invalid_argument("edge " + std::to_string(k + 1) + " references a vertex out of range");
  }
}

void check_species(const Complex& c, std::size_t m) {
  for (auto& [s, v] : c.coeffs())
    if (s >= m) throw std::invalid_argument("complex references undeclared species");
}

}  // namespace

void ReactionNetwork::validate() const {
  check_graph(graph);
  if (complexes.size() != graph.vertex_count) throw std::invalid_argument("one complex per vertex required");
  if (labels.size() != graph.edges.size()) throw std::invalid_argument("one label per reaction required");
  std::set<Complex> seen;
  for (auto& c : complexes) {
    check_species(c, m());
    if (!seen.insert(c).second) throw std::invalid_argument("complex " + c.str(species) + " labels two vertices");
  }
  std::vector<bool> used(n(), false);
  for (auto& e : graph.edges) used[e.source] = used[e.target] = true;
  for (std::size_t j = 0; j < n(); ++j)
    if (!used[j]) throw std::invalid_argument("vertex " + complexes[j].str(species) + " is isolated");
}

void GeneralizedNetwork::validate() const {
  check_graph(graph);
  if (stoich.size() != n() || kinetic.size() != n())
    throw std::invalid_argument("stoichiometric and kinetic-order complexes required for every vertex");
  if (labels.size() != r()) throw std::invalid_argument("one label per edge required");
  for (auto& c : stoich) check_species(c, m());
  for (auto& c : kinetic) check_species(c, m());
}

GeneralizedNetwork as_generalized(const ReactionNetwork& net) {
  GeneralizedNetwork g;
  g.species = net.species;
  g.graph = net.graph;
  g.stoich = net.complexes;
  g.kinetic = net.complexes;
  g.labels = net.labels;
  for (std::size_t j = 0; j < net.n(); ++j) g.vertex_names.push_back("v" + std::to_string(j + 1));
  return g;
}

StoichMatrices build_matrices(const ReactionNetwork& net) {
  const std::size_t m = net.m(), n = net.n(), r = net.r();
  StoichMatrices s;
  s.complex_matrix = Matrix(m, n);
  for (std::size_t j = 0; j < n; ++j) s.complex_matrix.set_column(j, net.complexes[j].to_vector(m));
  s.a_t = Matrix(n, r);
  s.a_s = Matrix(n, r);
  for (std::size_t k = 0; k < r; ++k) {
    s.a_s(net.graph.edges[k].source, k) = 1;
    s.a_t(net.graph.edges[k].target, k) = 1;
  }
  s.gamma_t = s.complex_matrix * s.a_t;
  s.gamma_s = s.complex_matrix * s.a_s;
  s.gamma = s.gamma_t - s.gamma_s;
  return s;
}

namespace {

Vector difference(const Complex& target, const Complex& source, std::size_t m) {
  Vector v = target.to_vector(m);
  Vector s = source.to_vector(m);
  for (std::size_t i = 0; i < m; ++i) v[i] -= s[i];
  return v;
}

}  // namespace

Vector reaction_vector(const ReactionNetwork& net, std::size_t k) {
  if (k >= net.r()) throw std::out_of_range("reaction index " + std::to_string(k + 1) + " out of range");
  const Edge& e = net.graph.edges[k];
  return difference(net.complexes[e.target], net.complexes[e.source], net.m());
}

Vector stoich_reaction_vector(const GeneralizedNetwork& net, std::size_t k) {
  if (k >= net.r()) throw std::out_of_range("edge index out of range");
  const Edge& e = net.graph.edges[k];
  return difference(net.stoich[e.target], net.stoich[e.source], net.m());
}

Vector kinetic_reaction_vector(const GeneralizedNetwork& net, std::size_t k) {
  if (k >= net.r()) throw std::out_of_range("edge index out of range");
  const Edge& e = net.graph.edges[k];
  return difference(net.kinetic[e.target], net.kinetic[e.source], net.m());
}

std::size_t distinct_sources(const ReactionNetwork& net) {
  std::set<std::size_t> s;
  for (auto& e : net.graph.edges) s.insert(e.source);
  return s.size();
}

}  // namespace crnt
