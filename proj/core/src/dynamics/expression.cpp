#include "crnt/dynamics/expression.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>

#include "crnt/network_io.hpp"

namespace crnt::dyn {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := number | symbol | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : s_(text), sym_(symbols) {}

  RationalFunction parse() {
    RationalFunction f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at column " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction f = term();
    for (;;) {
      if (eat('+'))
        f = f + term();
      else if (eat('-'))
        f = f - term();
      else
        return f;
    }
  }

  RationalFunction term() {
    RationalFunction f = unary();
    for (;;) {
      if (eat('*')) {
        f = f * unary();
      } else if (eat('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        f = f / d;
      } else {
        return f;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (e > 64) fail("exponent too large");
    return base.pow(static_cast<std::uint32_t>(e));
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return RationalFunction(Polynomial::constant(sym_.size(), Rational::parse(s_.substr(start, pos_ - start))));
    }
    if (c == 'x' || c == 'k' || c == 't') {
      std::size_t start = ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an index after '" + std::string(1, c) + "'");
      std::size_t i = std::stoul(std::string(s_.substr(start, pos_ - start)));
      std::size_t count = c == 'x' ? sym_.x_count() : c == 'k' ? sym_.k_count() : sym_.t_count();
      if (i == 0 || i > count) fail("symbol " + std::string(1, c) + std::to_string(i) + " is out of range");
      std::size_t v = c == 'x' ? sym_.x(i - 1) : c == 'k' ? sym_.k(i - 1) : sym_.t(i - 1);
      return RationalFunction(Polynomial::variable(sym_.size(), v));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const SymbolTable& sym_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).parse();
}

std::size_t max_tau_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 't') continue;
    if (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]))) continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
    if (j > i + 1) best = std::max(best, v);
  }
  return best;
}

Parametrization parse_parametrization(std::string_view text, std::size_t species, std::size_t reactions) {
  Parametrization p;
  p.symbols = SymbolTable(species, reactions, max_tau_index(text));
  // Parametrizations are functions of k and t only.
  SymbolTable rhs_symbols(0, reactions, p.symbols.t_count());
  std::vector<std::optional<RationalFunction>> seen(species);
  std::vector<std::uint32_t> powers(species, 1);
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) continue;
    line = line.substr(a);
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'x<i> = <expression>'");
    std::string lhs(line.substr(0, eq));
    while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
    std::uint32_t pw = 1;
    if (auto caret = lhs.find('^'); caret != std::string::npos) {
      std::string e = lhs.substr(caret + 1);
      e.erase(0, e.find_first_not_of(" \t"));
      lhs = lhs.substr(0, caret);
      while (!lhs.empty() && std::isspace(static_cast<unsigned char>(lhs.back()))) lhs.pop_back();
      if (e.empty() || e.size() > 2 || e.find_first_not_of("0123456789") != std::string::npos || std::stoul(e) == 0)
        throw ParseError(lineno, "exponent on the left-hand side must be a positive integer");
      pw = static_cast<std::uint32_t>(std::stoul(e));
    }
    if (lhs.size() < 2 || lhs[0] != 'x' || lhs.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError(lineno, "left-hand side must be a concentration symbol x<i> or a power x<i>^<d>");
    std::size_t i = std::stoul(lhs.substr(1));
    if (i == 0 || i > species) throw ParseError(lineno, "species " + lhs + " is out of range");
    if (seen[i - 1]) throw ParseError(lineno, lhs + " is given twice");
    RationalFunction f;
    try {
      f = parse_expression(line.substr(eq + 1), rhs_symbols);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    } catch (const std::domain_error& e) {
      throw ParseError(lineno, e.what());
    }
    seen[i - 1] = f;
    powers[i - 1] = pw;
    if (end == text.size()) break;
  }
  for (std::size_t i = 0; i < species; ++i)
    if (!seen[i]) throw ParseError(lineno, "no expression for x" + std::to_string(i + 1));
  // Lift from (k, t) to the full (x, k, t) table.
  auto lift = [&](const Polynomial& q) {
    Polynomial out(p.symbols.size());
    for (auto& [e, c] : q.terms()) {
      Exponents full(p.symbols.size(), 0);
      for (std::size_t v = 0; v < e.size(); ++v) full[species + v] = e[v];
      out.add_term(full, c);
    }
    return out;
  };
  for (auto& f : seen) p.x.emplace_back(lift(f->num()), lift(f->den()));
  p.power = powers;
  return p;
}

}  // namespace crnt::dyn
