#pragma once

#include <string>
#include <vector>

#include "crnt/network.hpp"
#include "crnt/rational.hpp"
#include "json.hpp"

namespace crnt::detail {

using json = nlohmann::ordered_json;

// Integers become JSON numbers, everything else a "p/q" string.
inline json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.is_small()) return json(r.num());
  return json(r.str());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return Rational::parse(j.dump());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a number or rational string, got " + j.dump());
}

inline json complex_to_json(const Complex& c, const std::vector<std::string>& species) {
  json o = json::object();
  for (auto& [s, v] : c.coeffs()) o[species.at(s)] = rational_to_json(v);
  return o;
}

inline Complex complex_from_json(const json& j, const std::vector<std::string>& species) {
  if (!j.is_object()) throw std::invalid_argument("complex must be an object of species coefficients");
  Complex c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t idx = species.size();
    for (std::size_t i = 0; i < species.size(); ++i)
      if (species[i] == it.key()) idx = i;
    if (idx == species.size()) throw std::invalid_argument("unknown species '" + it.key() + "'");
    Rational v = rational_from_json(it.value());
    if (v.sign() < 0) throw std::invalid_argument("negative coefficient for '" + it.key() + "'");
    c.set(idx, v);
  }
  return c;
}

}  // namespace crnt::detail
