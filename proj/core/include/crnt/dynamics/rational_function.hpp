#pragma once

#include "crnt/dynamics/polynomial.hpp"

namespace crnt::dyn {

// Quotient of two polynomials. No GCD normalization; only constant
// denominators are folded into the numerator.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(Polynomial()) {}
  explicit RationalFunction(Polynomial num);
  // Throws std::domain_error if den is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(std::uint32_t e) const;

  // Throws std::domain_error when the denominator vanishes at the point.
  Rational evaluate(const std::vector<Rational>& point) const;
  std::string str(const SymbolTable& symbols) const;

 private:
  void fold();
  Polynomial num_, den_;
};

}  // namespace crnt::dyn
