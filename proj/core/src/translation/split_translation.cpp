#include "crnt/translation/split_translation.hpp"

#include <map>
#include <set>

#include "../json_util.hpp"
#include "crnt/network_io.hpp"

namespace crnt {

namespace {

std::string vec_str(const Vector& v, const std::vector<std::string>& species) {
  Complex pos, neg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() > 0) pos.set(i, v[i]);
    if (v[i].sign() < 0) neg.set(i, -v[i]);
  }
  if (neg.empty()) return pos.str(species);
  if (pos.empty()) return "-(" + neg.str(species) + ")";
  return pos.str(species) + " - (" + neg.str(species) + ")";
}

}  // namespace

VerifyReport verify_split_translation(const SplitTranslation& t) {
  VerifyReport rep;
  const ReactionNetwork& orig = t.original;
  const GeneralizedNetwork& g = t.network;
  auto fail = [&](std::string c, std::size_t k, std::string detail) {
    rep.ok = false;
    rep.violations.push_back({std::move(c), k < orig.labels.size() ? orig.labels[k] : "", std::move(detail)});
  };
  const std::size_t r = orig.r();
  if (t.q() == 0) {
    fail("shape", r, "no slices");
    return rep;
  }
  if (g.species != orig.species) fail("shape", r, "species tables differ");
  for (std::size_t l = 0; l < t.q(); ++l) {
    if (t.slices[l].size() != r) {
      fail("shape", r, "slice " + std::to_string(l + 1) + " does not contain every reaction once");
      return rep;
    }
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t e = t.slices[l][k];
      if (e >= g.r() || !seen.insert(e).second) {
        fail("shape", k, "slice " + std::to_string(l + 1) + " maps reactions onto edges non-bijectively");
        return rep;
      }
    }
  }
  if (!rep.ok) return rep;
  const std::size_t m = orig.m();
  // (a) every slice sources reaction k at the same vertex.
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 1; l < t.q(); ++l)
      if (t.source_of(k) != g.graph.edges[t.slices[l][k]].source)
        fail("a", k, "slice " + std::to_string(l + 1) + " sources the reaction at a different vertex");
  // (b) reactions with a common original source share beta.
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t k2 = k + 1; k2 < r; ++k2)
      if (orig.graph.edges[k].source == orig.graph.edges[k2].source && t.source_of(k) != t.source_of(k2))
        fail("b", k2, "shares its source complex with " + orig.labels[k] + " but not its translated source vertex");
  // (c) kinetic-order complex at beta(k) is the original source complex.
  for (std::size_t k = 0; k < r; ++k) {
    const Complex& want = orig.complexes[orig.graph.edges[k].source];
    const Complex& got = g.kinetic[t.source_of(k)];
    if (!(want == got))
      fail("c", k, "kinetic-order complex " + got.str(g.species) + " differs from source complex " + want.str(orig.species));
  }
  // (d) slice reaction vectors sum to the original reaction vector.
  for (std::size_t k = 0; k < r; ++k) {
    Vector sum(m);
    for (std::size_t l = 0; l < t.q(); ++l) {
      Vector v = stoich_reaction_vector(g, t.slices[l][k]);
      for (std::size_t i = 0; i < m; ++i) sum[i] += v[i];
    }
    Vector want = reaction_vector(orig, k);
    if (sum != want)
      fail("d", k, "slice vectors sum to " + vec_str(sum, g.species) + " instead of " + vec_str(want, orig.species));
  }
  return rep;
}

std::vector<std::vector<DisplayEdge>> prune_self_loops(const SplitTranslation& t) {
  std::vector<std::vector<DisplayEdge>> view(t.q());
  for (std::size_t l = 0; l < t.q(); ++l) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> at;
    for (std::size_t k = 0; k < t.slices[l].size(); ++k) {
      const Edge& e = t.network.graph.edges[t.slices[l][k]];
      if (e.self_loop()) continue;
      auto key = std::make_pair(e.source, e.target);
      auto it = at.find(key);
      if (it == at.end()) {
        at[key] = view[l].size();
        view[l].push_back({e.source, e.target, {t.network.labels[t.slices[l][k]]}});
      } else {
        view[l][it->second].labels.push_back(t.network.labels[t.slices[l][k]]);
      }
    }
  }
  return view;
}

std::string display_text(const SplitTranslation& t) {
  const GeneralizedNetwork& g = t.network;
  std::string out;
  for (std::size_t v = 0; v < g.n(); ++v) {
    out += "  " + std::to_string(v + 1) + ": " + g.stoich[v].str(g.species) + " (" + g.kinetic[v].str(g.species) + ")";
    for (auto tv : t.target_only)
      if (tv == v) out += "  [target only]";
    out += "\n";
  }
  auto view = prune_self_loops(t);
  for (std::size_t l = 0; l < view.size(); ++l) {
    out += "  slice " + std::to_string(l + 1) + ":";
    if (view[l].empty()) out += " (self-loops only)";
    out += "\n";
    for (auto& e : view[l]) {
      std::string labels;
      for (auto& s : e.labels) labels += (labels.empty() ? "" : " & ") + s;
      out += "    " + std::to_string(e.source + 1) + " -> " + std::to_string(e.target + 1) + "  [" + labels + "]\n";
    }
  }
  return out;
}

std::string translation_to_json(const SplitTranslation& t) {
  using detail::json;
  const GeneralizedNetwork& g = t.network;
  json j;
  j["species"] = g.species;
  json vertices = json::array();
  for (std::size_t v = 0; v < g.n(); ++v) {
    json o;
    o["name"] = v < g.vertex_names.size() ? g.vertex_names[v] : "v" + std::to_string(v + 1);
    o["stoich"] = detail::complex_to_json(g.stoich[v], g.species);
    o["kinetic"] = detail::complex_to_json(g.kinetic[v], g.species);
    vertices.push_back(o);
  }
  j["vertices"] = vertices;
  std::vector<std::size_t> slice_of(g.r(), 0);
  for (std::size_t l = 0; l < t.q(); ++l)
    for (auto e : t.slices[l]) slice_of[e] = l + 1;
  json edges = json::array();
  for (std::size_t e = 0; e < g.r(); ++e) {
    json o;
    o["label"] = g.labels[e];
    o["source"] = g.graph.edges[e].source + 1;
    o["target"] = g.graph.edges[e].target + 1;
    o["slice"] = slice_of[e];
    edges.push_back(o);
  }
  j["edges"] = edges;
  json slices = json::array();
  for (std::size_t l = 0; l < t.q(); ++l) {
    json ids = json::array();
    for (auto e : t.slices[l]) ids.push_back(e + 1);
    slices.push_back(json{{"slice", l + 1}, {"edges", ids}});
  }
  j["slices"] = slices;
  json target_only = json::array();
  for (auto v : t.target_only) target_only.push_back(v + 1);
  j["targetOnlyVertices"] = target_only;
  return j.dump(2) + "\n";
}

SplitTranslation translation_from_json(const ReactionNetwork& original, std::string_view text) {
  using detail::json;
  SplitTranslation t;
  t.original = original;
  t.network = generalized_from_json(text);
  json j = json::parse(text);
  std::map<std::string, std::size_t> reaction;
  for (std::size_t k = 0; k < original.r(); ++k) reaction[original.labels[k]] = k;
  std::size_t q = 0;
  std::vector<std::size_t> slice_of;
  for (auto& e : j.at("edges")) {
    long long s = e.contains("slice") ? e["slice"].get<long long>() : 1;
    if (s < 1) throw ParseError(0, "slice numbers are 1-based");
    slice_of.push_back(static_cast<std::size_t>(s - 1));
    q = std::max(q, static_cast<std::size_t>(s));
  }
  t.slices.assign(q, std::vector<std::size_t>(original.r(), SIZE_MAX));
  for (std::size_t e = 0; e < t.network.r(); ++e) {
    auto it = reaction.find(t.network.labels[e]);
    if (it == reaction.end()) throw ParseError(0, "edge label '" + t.network.labels[e] + "' is not a reaction of the original network");
    std::size_t& slot = t.slices[slice_of[e]][it->second];
    if (slot != SIZE_MAX)
      throw ParseError(0, "reaction '" + it->first + "' appears twice in slice " + std::to_string(slice_of[e] + 1));
    slot = e;
  }
  for (std::size_t l = 0; l < q; ++l)
    for (std::size_t k = 0; k < original.r(); ++k)
      if (t.slices[l][k] == SIZE_MAX)
        throw ParseError(0, "reaction '" + original.labels[k] + "' is missing from slice " + std::to_string(l + 1));
  if (t.network.species != original.species)
    throw ParseError(0, "translation species table differs from the original network's");
  if (j.contains("targetOnlyVertices"))
    for (auto& v : j["targetOnlyVertices"]) t.target_only.push_back(v.get<std::size_t>() - 1);
  return t;
}

SplitTranslation identity_translation(const ReactionNetwork& net) {
  SplitTranslation t;
  t.original = net;
  t.network = as_generalized(net);
  t.slices.emplace_back();
  for (std::size_t k = 0; k < net.r(); ++k) t.slices[0].push_back(k);
  // Vertices that are never a source get their kinetic complex by default.
  std::vector<bool> is_source(net.n(), false);
  for (auto& e : net.graph.edges) is_source[e.source] = true;
  for (std::size_t v = 0; v < net.n(); ++v)
    if (!is_source[v]) t.target_only.push_back(v);
  return t;
}

}  // namespace crnt
