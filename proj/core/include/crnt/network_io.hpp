#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "crnt/network.hpp"

namespace crnt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ReactionNetwork parse_network(std::string_view text);
GeneralizedNetwork parse_generalized(std::string_view text);

std::string serialize_network(const ReactionNetwork& net);
std::string serialize_generalized(const GeneralizedNetwork& net);

// GCRN JSON: species, vertices (stoich/kinetic maps), edges {label, source,
// target, slice}. Vertex indices are 1-based; every edge is slice 1.
std::string generalized_to_json(const GeneralizedNetwork& net);
GeneralizedNetwork generalized_from_json(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace crnt
