#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crnt {

// Exact rational number. Values whose numerator and denominator fit in int64
// are stored inline; anything larger spills into a shared GMP rational.
// The representation is canonical: a value that fits inline is never stored
// as Big, so field-wise comparison is equality.
class Rational {
 public:
  struct Big;

  constexpr Rational() noexcept : num_(0), den_(1) {}
  constexpr Rational(int v) noexcept : num_(v), den_(1) {}
  Rational(long v) : Rational(static_cast<long long>(v)) {}
  Rational(long long v);
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p", "-p", "p/q", and finite decimals such as "0.25" or "1e-3".
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  // Requires is_small().
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational floor() const;
  Rational ceil() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  // "p" or "p/q".
  std::string str() const;
  // Exact decimal rendering if the denominator is 2^a 5^b, otherwise empty.
  std::string decimal() const;
  double to_double() const;
  std::size_t hash() const noexcept;

  // Numerator and denominator as decimal strings (works for Big values).
  std::string num_str() const;
  std::string den_str() const;

 private:
  friend struct RationalAccess;
  static Rational from_big(Big&& b);
  Big to_big() const;

  std::int64_t num_;
  std::int64_t den_;
  std::shared_ptr<const Big> big_;
};

int compare(const Rational& a, const Rational& b);
std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

}  // namespace crnt
