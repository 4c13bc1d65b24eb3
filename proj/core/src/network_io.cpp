#include "crnt/network_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "json_util.hpp"

namespace crnt {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    std::string_view raw = text.substr(pos, nl - pos);
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, t});
    pos = nl + 1;
  }
  return out;
}

// Splits "name: rest" and validates the name.
std::pair<std::string, std::string> split_labeled(const Line& line) {
  auto colon = line.text.find(':');
  if (colon == std::string::npos) throw ParseError(line.number, "expected 'label: ...'");
  std::string name = trim(std::string_view(line.text).substr(0, colon));
  if (!is_identifier(name)) throw ParseError(line.number, "invalid label '" + name + "'");
  return {name, trim(std::string_view(line.text).substr(colon + 1))};
}

class SpeciesTable {
 public:
  // With a declaration every species must be listed; without one they are
  // numbered by first appearance.
  std::size_t index(std::size_t line, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    if (declared_) throw ParseError(line, "species '" + name + "' is not declared");
    names.push_back(name);
    return names.size() - 1;
  }
  void declare(const Line& line, const std::string& rest) {
    if (declared_) throw ParseError(line.number, "species declared twice");
    if (!names.empty()) throw ParseError(line.number, "species declaration must precede its use");
    declared_ = true;
    std::string list = rest;
    for (char& c : list)
      if (c == ',') c = ' ';
    std::istringstream in(list);
    std::string s;
    while (in >> s) {
      if (!is_identifier(s)) throw ParseError(line.number, "invalid species identifier '" + s + "'");
      for (auto& n : names)
        if (n == s) throw ParseError(line.number, "species '" + s + "' declared twice");
      names.push_back(s);
    }
  }
  std::vector<std::string> names;

 private:
  bool declared_ = false;
};

Complex parse_complex(std::size_t line, const std::string& text, SpeciesTable& species) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError(line, "empty complex (write 0 for the zero complex)");
  if (t == "0") return {};
  Complex c;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t plus = t.find('+', pos);
    if (plus == std::string::npos) plus = t.size();
    std::string term = trim(std::string_view(t).substr(pos, plus - pos));
    pos = plus + 1;
    if (term.empty()) throw ParseError(line, "missing term in complex '" + t + "'");
    std::size_t id = 0;
    while (id < term.size() && !(std::isalpha(static_cast<unsigned char>(term[id])) || term[id] == '_')) ++id;
    if (id == term.size()) throw ParseError(line, "term '" + term + "' has no species");
    std::string coeff = trim(std::string_view(term).substr(0, id));
    std::string name = trim(std::string_view(term).substr(id));
    Rational value(1);
    if (!coeff.empty()) {
      if (coeff[0] == '-') throw ParseError(line, "negative coefficient in '" + term + "'");
      try {
        value = Rational::parse(coeff);
      } catch (const std::exception&) {
        throw ParseError(line, "non-numeric coefficient '" + coeff + "'");
      }
      if (value.sign() <= 0) throw ParseError(line, "coefficient must be positive in '" + term + "'");
    }
    if (!is_identifier(name)) {
      if (name.find_first_of(" \t") != std::string::npos)
        throw ParseError(line, "non-numeric coefficient in '" + term + "'");
      throw ParseError(line, "invalid species identifier '" + name + "'");
    }
    c.add(species.index(line, name), value);
  }
  return c;
}

std::pair<std::string, std::string> split_arrow(const Line& line, const std::string& rest) {
  auto arrow = rest.find("->");
  if (arrow == std::string::npos) throw ParseError(line.number, "expected '->'");
  if (rest.find("->", arrow + 2) != std::string::npos) throw ParseError(line.number, "more than one '->'");
  if (arrow > 0 && rest[arrow - 1] == '<') throw ParseError(line.number, "reversible arrows are not supported; list both directions");
  return {rest.substr(0, arrow), rest.substr(arrow + 2)};
}

}  // namespace

ReactionNetwork parse_network(std::string_view text) {
  SpeciesTable species;
  ReactionNetwork net;
  std::set<std::string> labels;
  auto vertex_of = [&](const Complex& c) {
    for (std::size_t j = 0; j < net.complexes.size(); ++j)
      if (net.complexes[j] == c) return j;
    net.complexes.push_back(c);
    return net.complexes.size() - 1;
  };
  for (const Line& line : content_lines(text)) {
    auto [name, rest] = split_labeled(line);
    if (name == "species") {
      species.declare(line, rest);
      continue;
    }
    if (!rest.empty() && rest[0] == '{')
      throw ParseError(line.number, "vertex declaration in a plain network; use the generalized format");
    if (!labels.insert(name).second) throw ParseError(line.number, "duplicate reaction label '" + name + "'");
    auto [lhs, rhs] = split_arrow(line, rest);
    Complex src = parse_complex(line.number, lhs, species);
    Complex dst = parse_complex(line.number, rhs, species);
    std::size_t s = vertex_of(src);
    std::size_t t = vertex_of(dst);
    net.graph.edges.push_back({s, t});
    net.labels.push_back(name);
  }
  if (net.graph.edges.empty()) throw ParseError(1, "no reactions");
  net.species = species.names;
  net.graph.vertex_count = net.complexes.size();
  net.validate();
  return net;
}

GeneralizedNetwork parse_generalized(std::string_view text) {
  SpeciesTable species;
  GeneralizedNetwork net;
  std::map<std::string, std::size_t> vertex_index;
  struct PendingEdge {
    std::size_t line;
    std::string label, source, target;
  };
  std::vector<PendingEdge> pending;
  std::set<std::string> labels;
  for (const Line& line : content_lines(text)) {
    auto [name, rest] = split_labeled(line);
    if (name == "species") {
      species.declare(line, rest);
      continue;
    }
    if (!rest.empty() && rest[0] == '{') {
      if (rest.back() != '}') throw ParseError(line.number, "vertex declaration must end with '}'");
      std::string body = rest.substr(1, rest.size() - 2);
      auto bar = body.find('|');
      if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
        throw ParseError(line.number, "vertex declaration needs exactly one '|'");
      if (vertex_index.count(name)) throw ParseError(line.number, "vertex '" + name + "' declared twice");
      vertex_index[name] = net.stoich.size();
      net.vertex_names.push_back(name);
      net.stoich.push_back(parse_complex(line.number, body.substr(0, bar), species));
      net.kinetic.push_back(parse_complex(line.number, body.substr(bar + 1), species));
      continue;
    }
    if (!labels.insert(name).second) throw ParseError(line.number, "duplicate reaction label '" + name + "'");
    auto [lhs, rhs] = split_arrow(line, rest);
    pending.push_back({line.number, name, trim(lhs), trim(rhs)});
  }
  if (pending.empty()) throw ParseError(net.stoich.empty() ? 1 : 0, "no edges");
  std::vector<bool> used(net.stoich.size(), false);
  for (auto& p : pending) {
    auto s = vertex_index.find(p.source);
    auto t = vertex_index.find(p.target);
    if (s == vertex_index.end()) throw ParseError(p.line, "unknown vertex '" + p.source + "'");
    if (t == vertex_index.end()) throw ParseError(p.line, "unknown vertex '" + p.target + "'");
    net.graph.edges.push_back({s->second, t->second});
    net.labels.push_back(p.label);
    used[s->second] = used[t->second] = true;
  }
  for (std::size_t j = 0; j < used.size(); ++j)
    if (!used[j]) throw ParseError(0, "vertex '" + net.vertex_names[j] + "' is isolated");
  net.species = species.names;
  net.graph.vertex_count = net.stoich.size();
  net.validate();
  return net;
}

namespace {

std::string species_line(const std::vector<std::string>& species) {
  std::string s = "species:";
  for (auto& n : species) s += " " + n;
  return s + "\n";
}

std::string vertex_name(const GeneralizedNetwork& net, std::size_t j) {
  return j < net.vertex_names.size() ? net.vertex_names[j] : "v" + std::to_string(j + 1);
}

}  // namespace

std::string serialize_network(const ReactionNetwork& net) {
  std::string out = species_line(net.species);
  for (std::size_t k = 0; k < net.r(); ++k) {
    const Edge& e = net.graph.edges[k];
    out += net.labels[k] + ": " + net.complexes[e.source].str(net.species) + " -> " +
           net.complexes[e.target].str(net.species) + "\n";
  }
  return out;
}

std::string serialize_generalized(const GeneralizedNetwork& net) {
  std::string out = species_line(net.species);
  for (std::size_t j = 0; j < net.n(); ++j)
    out += vertex_name(net, j) + ": {" + net.stoich[j].str(net.species) + " | " + net.kinetic[j].str(net.species) + "}\n";
  for (std::size_t k = 0; k < net.r(); ++k) {
    const Edge& e = net.graph.edges[k];
    out += net.labels[k] + ": " + vertex_name(net, e.source) + " -> " + vertex_name(net, e.target) + "\n";
  }
  return out;
}

std::string generalized_to_json(const GeneralizedNetwork& net) {
  using detail::json;
  json j;
  j["species"] = net.species;
  json vertices = json::array();
  for (std::size_t v = 0; v < net.n(); ++v) {
    json o;
    o["name"] = vertex_name(net, v);
    o["stoich"] = detail::complex_to_json(net.stoich[v], net.species);
    o["kinetic"] = detail::complex_to_json(net.kinetic[v], net.species);
    vertices.push_back(o);
  }
  j["vertices"] = vertices;
  json edges = json::array();
  for (std::size_t k = 0; k < net.r(); ++k) {
    json e;
    e["label"] = net.labels[k];
    e["source"] = net.graph.edges[k].source + 1;
    e["target"] = net.graph.edges[k].target + 1;
    e["slice"] = 1;
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

GeneralizedNetwork generalized_from_json(std::string_view text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    GeneralizedNetwork net;
    net.species = j.at("species").get<std::vector<std::string>>();
    for (auto& v : j.at("vertices")) {
      net.vertex_names.push_back(v.contains("name") ? v["name"].get<std::string>()
                                                    : "v" + std::to_string(net.vertex_names.size() + 1));
      net.stoich.push_back(detail::complex_from_json(v.at("stoich"), net.species));
      net.kinetic.push_back(detail::complex_from_json(v.at("kinetic"), net.species));
    }
    net.graph.vertex_count = net.stoich.size();
    for (auto& e : j.at("edges")) {
      auto s = e.at("source").get<long long>();
      auto t = e.at("target").get<long long>();
      if (s < 1 || t < 1) throw std::invalid_argument("vertex indices are 1-based");
      net.graph.edges.push_back({static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1)});
      net.labels.push_back(e.at("label").get<std::string>());
    }
    if (net.graph.edges.empty()) throw std::invalid_argument("no edges");
    net.validate();
    return net;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("malformed network JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace crnt
