#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crnt/network.hpp"

namespace crnt {

struct SplitTranslation {
  GeneralizedNetwork network;  // every slice edge, labelled by its original reaction
  std::vector<std::vector<std::size_t>> slices;  // slices[l][k] = edge of reaction k in slice l
  ReactionNetwork original;
  std::vector<std::size_t> target_only;  // vertices whose kinetic complex defaulted to the stoichiometric one

  std::size_t q() const { return slices.size(); }
  std::size_t source_of(std::size_t k) const { return network.graph.edges.at(slices.at(0).at(k)).source; }
  std::size_t target_of(std::size_t k, std::size_t l) const { return network.graph.edges.at(slices.at(l).at(k)).target; }
};

struct Violation {
  std::string condition;  // "a".."d", or "shape"
  std::string reaction;
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;
};

VerifyReport verify_split_translation(const SplitTranslation& t);

// A q-slice view with self-loops removed and parallel edges merged.
struct DisplayEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::string> labels;
};

std::vector<std::vector<DisplayEdge>> prune_self_loops(const SplitTranslation& t);
std::string display_text(const SplitTranslation& t);

// The GCRN JSON schema plus a `slices` array; edges carry 1-based slice numbers.
std::string translation_to_json(const SplitTranslation& t);
// Rebuilds slices by matching edge labels to the original's reaction labels.
SplitTranslation translation_from_json(const ReactionNetwork& original, std::string_view text);

// Identity q = 1 translation of a network (every slice edge is the reaction itself).
SplitTranslation identity_translation(const ReactionNetwork& net);

}  // namespace crnt
