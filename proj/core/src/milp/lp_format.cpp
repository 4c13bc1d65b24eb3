#include "crnt/milp/lp_format.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace crnt::milp {

namespace {

std::string sanitize(const std::string& raw) {
  std::string s;
  for (char c : raw) s += std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '_';
  if (s.empty()) s = "_";
  bool bad_start = std::isdigit(static_cast<unsigned char>(s[0])) ||
                   ((s[0] == 'e' || s[0] == 'E') && s.size() > 1 &&
                    (std::isdigit(static_cast<unsigned char>(s[1])) || s[1] == 'e' || s[1] == 'E'));
  if (bad_start) s = "x_" + s;
  return s;
}

std::vector<std::string> unique_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  std::set<std::string> used;
  for (auto& r : raw) {
    std::string base = sanitize(r), name = base;
    for (int i = 2; used.count(name); ++i) name = base + "_" + std::to_string(i);
    used.insert(name);
    out.push_back(name);
  }
  return out;
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (auto& v : values) {
    mpz_class d(v.den_str());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Renders values as decimals when all are exact decimals, else scales all of
// them by the LCM of denominators so they become integers.
std::vector<std::string> render(const std::vector<Rational>& values, bool* scaled, Rational* factor) {
  std::vector<std::string> out;
  bool all_decimal = true;
  for (auto& v : values) {
    std::string d = v.decimal();
    if (d.empty()) {
      all_decimal = false;
      break;
    }
    out.push_back(d);
  }
  *scaled = !all_decimal;
  *factor = Rational(1);
  if (all_decimal) return out;
  out.clear();
  mpz_class l = lcm_of_denominators(values);
  *factor = Rational::parse(l.get_str());
  for (auto& v : values) out.push_back((v * *factor).str());
  return out;
}

std::string expression(const std::vector<std::string>& coefs, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < coefs.size(); ++i) {
    const std::string& c = coefs[i];
    bool neg = !c.empty() && c[0] == '-';
    if (i == 0)
      out += neg ? "- " + c.substr(1) : c;
    else
      out += neg ? " - " + c.substr(1) : " + " + c;
    out += " " + vars[i];
    if (i % 8 == 7 && i + 1 < coefs.size()) out += "\n   ";
  }
  return out;
}

}  // namespace

std::vector<std::string> lp_names(const Model& model) {
  std::vector<std::string> raw;
  for (auto& v : model.variables()) raw.push_back(v.name);
  return unique_names(raw);
}

std::string to_lp_string(const Model& model) {
  auto names = lp_names(model);
  std::vector<std::string> raw_rows;
  for (std::size_t i = 0; i < model.constraints().size(); ++i) {
    const auto& n = model.constraints()[i].name;
    raw_rows.push_back(n.empty() ? "c" + std::to_string(i + 1) : n);
  }
  auto row_names = unique_names(raw_rows);
  std::ostringstream os;
  os << "\\ " << model.variables().size() << " columns, " << model.constraints().size() << " rows\n";
  os << "Minimize\n obj: ";
  {
    std::vector<Rational> coefs;
    std::vector<std::string> vars;
    for (auto& [v, c] : model.objective()) coefs.push_back(c), vars.push_back(names[v]);
    bool scaled;
    Rational f;
    auto text = render(coefs, &scaled, &f);
    if (coefs.empty() && !names.empty())
      os << "0 " << names[0];
    else
      os << expression(text, vars);
    os << "\n";
    if (scaled) os << "\\ objective scaled by " << f.str() << "\n";
  }
  os << "Subject To\n";
  auto write_row = [&](const std::string& name, const LinearExpr& expr, const std::string& sense, const Rational& rhs) {
    std::vector<Rational> values;
    std::vector<std::string> vars;
    for (auto& [v, c] : expr) values.push_back(c), vars.push_back(names[v]);
    values.push_back(rhs);
    bool scaled;
    Rational f;
    auto text = render(values, &scaled, &f);
    std::string r = text.back();
    text.pop_back();
    os << " " << name << ": ";
    if (vars.empty())
      os << "0 " << names.at(0);
    else
      os << expression(text, vars);
    os << " " << sense << " " << r << "\n";
  };
  for (std::size_t i = 0; i < model.constraints().size(); ++i) {
    const Constraint& c = model.constraints()[i];
    const char* sense = c.rel == Relation::LessEq ? "<=" : c.rel == Relation::GreaterEq ? ">=" : "=";
    write_row(row_names[i], c.expr, sense, c.rhs);
  }
  std::ostringstream bounds;
  std::set<std::string> taken(row_names.begin(), row_names.end());
  for (std::size_t j = 0; j < model.variables().size(); ++j) {
    const Variable& v = model.variables()[j];
    if (v.kind == VarKind::Binary || !v.upper) continue;
    std::string d = v.upper->decimal();
    if (!d.empty()) {
      bounds << " 0 <= " << names[j] << " <= " << d << "\n";
    } else {
      std::string rn = "bound_" + names[j];
      for (int i = 2; taken.count(rn); ++i) rn = "bound_" + names[j] + "_" + std::to_string(i);
      taken.insert(rn);
      write_row(rn, LinearExpr{{j, Rational(1)}}, "<=", *v.upper);
    }
  }
  os << "Bounds\n" << bounds.str();
  std::string bin, gen;
  for (std::size_t j = 0; j < model.variables().size(); ++j) {
    if (model.variables()[j].kind == VarKind::Binary) bin += " " + names[j] + "\n";
    if (model.variables()[j].kind == VarKind::Integer) gen += " " + names[j] + "\n";
  }
  os << "Binary\n" << bin;
  if (!gen.empty()) os << "General\n" << gen;
  os << "End\n";
  return os.str();
}

void export_lp(const Model& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << to_lp_string(model);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace crnt::milp
