#include "crnt/dynamics/rational_function.hpp"

#include <stdexcept>

namespace crnt::dyn {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("denominator is the zero polynomial");
  fold();
}

void RationalFunction::fold() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.vars(), Rational(1));
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.terms().begin()->second;
    if (c != Rational(1)) {
      num_ *= c.inverse();
      den_ = Polynomial::constant(num_.vars(), Rational(1));
    }
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero polynomial");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(std::uint32_t e) const { return RationalFunction(num_.pow(e), den_.pow(e)); }

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::str(const SymbolTable& symbols) const {
  if (den_.is_constant()) return num_.str(symbols);
  return "(" + num_.str(symbols) + ") / (" + den_.str(symbols) + ")";
}

}  // namespace crnt::dyn
