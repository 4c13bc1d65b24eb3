#include "crnt/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>

namespace crnt {

struct Rational::Big {
  mpq_class q;
};

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMin = INT64_MIN;
constexpr std::int64_t kMax = INT64_MAX;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool fits(i128 v) { return v > kMin && v <= kMax; }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long v) : num_(v), den_(1) {
  if (v == kMin) {
    num_ = 0;
    den_ = 1;
    Big b{mpq_class(mpz_class(static_cast<long>(v)))};
    big_ = std::make_shared<const Big>(std::move(b));
  }
}

Rational Rational::from_big(Big&& b) {
  b.q.canonicalize();
  Rational r;
  const mpz_class& n = b.q.get_num();
  const mpz_class& d = b.q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_shared<const Big>(std::move(b));
  return r;
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  return Big{mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)))};
}

struct RationalAccess {
  // n/d with d > 0, not necessarily reduced.
  static Rational make(i128 n, i128 d) {
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) n /= static_cast<i128>(g), d /= static_cast<i128>(g);
    Rational r;
    if (fits(n) && fits(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::from_big(Rational::Big{mpq_class(mpz_from_i128(n), mpz_from_i128(d))});
  }
};

namespace {
Rational make(i128 n, i128 d) { return RationalAccess::make(n, d); }
}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(0), den_(1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) n = -n, d = -d;
  *this = RationalAccess::make(n, d);
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  std::string int_digits, frac_digits;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) int_digits += text[i++];
  bool has_dot = false;
  if (i < text.size() && text[i] == '.') {
    has_dot = true;
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac_digits += text[i++];
  }
  if (int_digits.empty() && frac_digits.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  mpz_class num(int_digits.empty() ? std::string("0") : int_digits, 10);
  mpz_class den(1);
  if (!frac_digits.empty()) {
    mpz_class f(frac_digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits.size());
    num = num * scale + f;
    den = scale;
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    std::string ed;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
    if (ed.empty() || ed.size() > 6) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, std::stoul(ed));
    if (eneg) den *= p; else num *= p;
  } else if (!has_dot && i < text.size() && text[i] == '/') {
    ++i;
    std::string dd;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) dd += text[i++];
    if (dd.empty()) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    den = mpz_class(dd, 10);
    if (den == 0) throw std::domain_error("rational with zero denominator");
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  if (neg) num = -num;
  return from_big(Big{mpq_class(num, den)});
}

bool Rational::is_integer() const noexcept {
  if (!big_) return den_ == 1;
  return big_->q.get_den() == 1;
}

int Rational::sign() const noexcept {
  if (!big_) return (num_ > 0) - (num_ < 0);
  return sgn(big_->q);
}

Rational Rational::floor() const {
  if (!big_) {
    if (den_ == 1) return *this;
    std::int64_t q = num_ / den_;
    if (num_ < 0) --q;
    return Rational(q);
  }
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), big_->q.get_num_mpz_t(), big_->q.get_den_mpz_t());
  return from_big(Big{mpq_class(f)});
}

Rational Rational::ceil() const { return -((-*this).floor()); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!big_) return Rational(den_, num_);
  return from_big(Big{mpq_class(1) / big_->q});
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_big(Big{mpq_class(-big_->q)});
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
        num_ = s;
        return *this;
      }
      return *this = make(static_cast<i128>(num_) + o.num_, 1);
    }
    if (o.num_ == 0) return *this;
    if (num_ == 0) return *this = o;
    std::uint64_t g = gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
    i128 bd = den_ / static_cast<std::int64_t>(g);
    i128 dd = o.den_ / static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(num_) * dd + static_cast<i128>(o.num_) * bd;
    i128 den = bd * o.den_;
    return *this = make(t, den);
  }
  Big a = to_big(), b = o.to_big();
  a.q += b.q;
  return *this = from_big(std::move(a));
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) return *this = Rational();
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
        num_ = p;
        return *this;
      }
      return *this = make(static_cast<i128>(num_) * o.num_, 1);
    }
    std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_), static_cast<std::uint64_t>(o.den_));
    std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(o.num_ < 0 ? -o.num_ : o.num_), static_cast<std::uint64_t>(den_));
    i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
    return *this = make(n, d);
  }
  Big a = to_big(), b = o.to_big();
  a.q *= b.q;
  return *this = from_big(std::move(a));
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return a.big_->q == b.big_->q;
  return false;
}

int compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  int c = cmp(a.to_big().q, b.to_big().q);
  return (c > 0) - (c < 0);
}

std::string Rational::str() const {
  if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  return big_->q.get_str();
}

std::string Rational::num_str() const { return big_ ? big_->q.get_num().get_str() : std::to_string(num_); }
std::string Rational::den_str() const { return big_ ? big_->q.get_den().get_str() : std::to_string(den_); }

std::string Rational::decimal() const {
  Big b = to_big();
  mpz_class den = b.q.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
  if (den != 1) return {};
  unsigned k = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  mpz_class scaled = b.q.get_num() * scale / b.q.get_den();
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (k > 0) {
    if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
    digits.insert(digits.size() - k, ".");
  }
  return neg ? "-" + digits : digits;
}

double Rational::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->q.get_d();
}

std::size_t Rational::hash() const noexcept {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(big_->q.get_str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace crnt
