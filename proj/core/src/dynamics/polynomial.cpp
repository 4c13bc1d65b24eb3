#include "crnt/dynamics/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace crnt::dyn {

std::string SymbolTable::name(std::size_t v) const {
  if (v < x_) return "x" + std::to_string(v + 1);
  if (v < x_ + k_) return "k" + std::to_string(v - x_ + 1);
  if (v < size()) return "t" + std::to_string(v - x_ - k_ + 1);
  throw std::out_of_range("symbol index out of range");
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

Polynomial Polynomial::constant(std::size_t vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t v) {
  if (v >= vars) throw std::out_of_range("variable index out of range");
  Exponents e(vars, 0);
  e[v] = 1;
  Polynomial p(vars);
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, Exponents e) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first)
    if (x) return false;
  return true;
}

std::size_t Polynomial::degree() const {
  if (terms_.empty()) return 0;
  const Exponents& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), std::size_t{0});
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent vector has the wrong length");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("polynomials over different symbol tables");
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.vars_ != vars_) throw std::invalid_argument("polynomials over different symbol tables");
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("polynomials over different symbol tables");
  Polynomial p(a.vars_);
  Exponents e(a.vars_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_) throw std::invalid_argument("evaluation point has the wrong dimension");
  Rational sum;
  for (auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_ && !t.is_zero(); ++i)
      for (std::uint32_t p = 0; p < e[i]; ++p) t *= point[i];
    sum += t;
  }
  return sum;
}

std::string Polynomial::str(const SymbolTable& symbols) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!body.empty()) body += "*";
      body += symbols.name(i);
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (body.empty())
      term = mag.str();
    else if (mag == Rational(1))
      term = body;
    else
      term = mag.str() + "*" + body;
    if (out.empty())
      out = c.sign() < 0 ? "-" + term : term;
    else
      out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace crnt::dyn
