#include <gtest/gtest.h>

#include "crnt/network_io.hpp"
#include "testing.hpp"

using namespace crnt;
using namespace crnt::testing;

TEST(NetworkIo, ParsesLabelsAndComplexes) {
  ReactionNetwork net = parse_network("species: A B\n# comment\nr1: 2 A -> B\nr2: B -> 0\n");
  ASSERT_EQ(net.r(), 2u);
  ASSERT_EQ(net.n(), 3u);
  EXPECT_EQ(net.labels[1], "r2");
  EXPECT_EQ(net.complexes[0][0], Rational(2));
  EXPECT_TRUE(net.complexes[2].empty());
}

TEST(NetworkIo, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_network(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t(0);
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("r1: A -> B\nr1: B -> A\n"), 2u);
  EXPECT_EQ(line_of("r1: A -> B\n\nr2: A B\n"), 3u);
  EXPECT_EQ(line_of("species: A\nr1: A -> C\n"), 2u);
}

TEST(NetworkIo, GeneralizedText) {
  GeneralizedNetwork g = parse_generalized("species: X1 X2\nv1: {X1 | 2 X1}\nv2: {X2 | X2}\nr1: v1 -> v2\nr2: v2 -> v1\n");
  EXPECT_EQ(g.n(), 2u);
  EXPECT_EQ(g.kinetic[0][0], Rational(2));
  EXPECT_EQ(g.stoich[0][0], Rational(1));
}

TEST(NetworkIoProperty, TextRoundTrip) {
  Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    ReactionNetwork net = random_network(rng, 4, 7);
    ReactionNetwork back = parse_network(serialize_network(net));
    ASSERT_EQ(back.labels, net.labels);
    ASSERT_EQ(back.r(), net.r());
    for (std::size_t k = 0; k < net.r(); ++k) {
      ASSERT_EQ(back.complexes[back.graph.edges[k].source], net.complexes[net.graph.edges[k].source]);
      ASSERT_EQ(back.complexes[back.graph.edges[k].target], net.complexes[net.graph.edges[k].target]);
    }
  }
}

TEST(NetworkIoProperty, GeneralizedJsonRoundTrip) {
  Rng rng(32);
  for (int it = 0; it < 200; ++it) {
    GeneralizedNetwork g = as_generalized(random_network(rng, 4, 7));
    // Scramble kinetic orders so they differ from the stoichiometry.
    for (auto& c : g.kinetic) c.add(uniform(rng, 0, g.m() - 1), Rational(uniform_ll(rng, 1, 3), 2));
    GeneralizedNetwork back = generalized_from_json(generalized_to_json(g));
    ASSERT_EQ(back.stoich, g.stoich);
    ASSERT_EQ(back.kinetic, g.kinetic);
    ASSERT_EQ(back.labels, g.labels);
    ASSERT_EQ(back.graph.edges, g.graph.edges);
    GeneralizedNetwork text = parse_generalized(serialize_generalized(g));
    ASSERT_EQ(text.kinetic, g.kinetic);
    ASSERT_EQ(text.graph.edges, g.graph.edges);
  }
}

TEST(NetworkIo, JsonRejectsBadIndices) {
  EXPECT_THROW(generalized_from_json(R"({"species":["A"],"vertices":[{"stoich":{"A":1},"kinetic":{"A":1}}],
    "edges":[{"label":"r1","source":0,"target":1}]})"), ParseError);
  EXPECT_THROW(generalized_from_json("{"), ParseError);
}
