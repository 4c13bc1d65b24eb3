#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crnt/rational.hpp"

namespace crnt::dyn {

// Symbols are laid out as x1..xm, then k1..kr, then t1..tp.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::size_t x, std::size_t k, std::size_t t) : x_(x), k_(k), t_(t) {}

  std::size_t size() const { return x_ + k_ + t_; }
  std::size_t x_count() const { return x_; }
  std::size_t k_count() const { return k_; }
  std::size_t t_count() const { return t_; }
  std::size_t x(std::size_t i) const { return i; }
  std::size_t k(std::size_t i) const { return x_ + i; }
  std::size_t t(std::size_t i) const { return x_ + k_ + i; }
  bool is_kappa(std::size_t v) const { return v >= x_ && v < x_ + k_; }
  std::string name(std::size_t v) const;

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::size_t x_ = 0, k_ = 0, t_ = 0;
};

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then exponents compared
// left to right with larger exponents first.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}
  static Polynomial constant(std::size_t vars, const Rational& c);
  static Polynomial variable(std::size_t vars, std::size_t v);
  static Polynomial monomial(const Rational& c, Exponents e);

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t degree() const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Rational& c);
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Exact evaluation; 0^0 counts as 1.
  Rational evaluate(const std::vector<Rational>& point) const;
  // Terms in decreasing grlex order, e.g. "-2*k1*x1^2 + k2*x2".
  std::string str(const SymbolTable& symbols) const;

 private:
  std::size_t vars_ = 0;
  std::map<Exponents, Rational, GrlexLess> terms_;
};

}  // namespace crnt::dyn
