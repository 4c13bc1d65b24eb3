#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "crnt/matrix.hpp"
#include "crnt/rational.hpp"

namespace crnt {

// Formal nonnegative combination of species. Zero coefficients are never stored.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::map<std::size_t, Rational> coeffs);
  static Complex from_vector(const Vector& v);

  const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }
  Rational operator[](std::size_t species) const;
  bool empty() const { return coeffs_.empty(); }
  void set(std::size_t species, const Rational& value);
  void add(std::size_t species, const Rational& value);

  Vector to_vector(std::size_t m) const;
  std::string str(const std::vector<std::string>& species_names) const;

  friend bool operator==(const Complex&, const Complex&) = default;
  friend auto operator<=>(const Complex& a, const Complex& b) { return a.compare(b); }

 private:
  std::strong_ordering compare(const Complex& b) const;
  std::map<std::size_t, Rational> coeffs_;
};

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  bool self_loop() const { return source == target; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct MultiGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

struct ReactionNetwork {
  std::vector<std::string> species;
  MultiGraph graph;
  std::vector<Complex> complexes;
  std::vector<std::string> labels;

  std::size_t m() const { return species.size(); }
  std::size_t n() const { return graph.vertex_count; }
  std::size_t r() const { return graph.edges.size(); }
  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

struct GeneralizedNetwork {
  std::vector<std::string> species;
  MultiGraph graph;
  std::vector<Complex> stoich;
  std::vector<Complex> kinetic;
  std::vector<std::string> labels;
  std::vector<std::string> vertex_names;

  std::size_t m() const { return species.size(); }
  std::size_t n() const { return graph.vertex_count; }
  std::size_t r() const { return graph.edges.size(); }
  void validate() const;
};

GeneralizedNetwork as_generalized(const ReactionNetwork& net);

struct StoichMatrices {
  Matrix gamma;
  Matrix gamma_t;
  Matrix gamma_s;
  Matrix complex_matrix;
  Matrix a_t;
  Matrix a_s;
};

StoichMatrices build_matrices(const ReactionNetwork& net);

// y(target) - y(source) for edge k (0-based).
Vector reaction_vector(const ReactionNetwork& net, std::size_t k);
Vector stoich_reaction_vector(const GeneralizedNetwork& net, std::size_t k);
Vector kinetic_reaction_vector(const GeneralizedNetwork& net, std::size_t k);

// Number of distinct source complexes, i.e. vertices with an outgoing edge.
std::size_t distinct_sources(const ReactionNetwork& net);

}  // namespace crnt
