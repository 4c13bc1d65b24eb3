#include <gtest/gtest.h>

#include "crnt/graph_analysis.hpp"
#include "crnt/network_io.hpp"
#include "testing.hpp"

using namespace crnt;
using namespace crnt::testing;

namespace {

std::string fixture(const std::string& name) { return read_text_file(std::string(CRNT_NETWORKS_DIR) + "/" + name); }

}  // namespace

TEST(GraphAnalysis, NetworkOneAsDisplayed) {
  // Eight distinct complexes, two linkage classes, rank three.
  StructuralReport rep = analyze(parse_network(fixture("network1.crn")));
  EXPECT_EQ(rep.n, 8u);
  EXPECT_EQ(rep.l(), 2u);
  EXPECT_EQ(rep.dim_stoich, 3u);
  EXPECT_EQ(rep.deficiency, 3);
  EXPECT_FALSE(rep.weakly_reversible);
}

TEST(GraphAnalysis, LotkaVolterra) {
  StructuralReport rep = analyze(parse_network(fixture("lv.crn")));
  EXPECT_EQ(rep.n, 6u);
  EXPECT_EQ(rep.l(), 3u);
  EXPECT_EQ(rep.dim_stoich, 2u);
  EXPECT_EQ(rep.deficiency, 1);
}

TEST(GraphAnalysis, GeneralizedNetworkSix) {
  StructuralReport rep = analyze(parse_generalized(fixture("network6.gcrn")));
  EXPECT_EQ(rep.deficiency, 0);
  EXPECT_EQ(rep.kinetic_deficiency, 1);
  EXPECT_TRUE(rep.weakly_reversible);
}

TEST(GraphAnalysis, SelfLoopsDoNotJoinOrBreak) {
  MultiGraph g{3, {{0, 0}, {1, 2}, {2, 1}}};
  EXPECT_EQ(linkage_classes(g).size(), 2u);
  EXPECT_TRUE(is_weakly_reversible(g));
  Matrix a = incidence_matrix(g);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(a(j, 0).is_zero());
}

TEST(GraphAnalysisProperty, LinkageClassesMatchOracle) {
  Rng rng(41);
  for (int it = 0; it < 300; ++it) {
    MultiGraph g = random_multigraph(rng, 7, 10);
    auto root = component_root(g);
    Partition p = linkage_classes(g);
    std::set<std::size_t> roots(root.begin(), root.end());
    ASSERT_EQ(p.size(), roots.size());
    for (auto& cls : p)
      for (auto v : cls) ASSERT_EQ(root[v], root[cls.front()]);
  }
}

TEST(GraphAnalysisProperty, StrongClassesMatchMutualReachability) {
  Rng rng(42);
  for (int it = 0; it < 300; ++it) {
    MultiGraph g = random_multigraph(rng, 7, 10);
    auto reach = reachability(g);
    Partition p = strong_linkage_classes(g);
    std::vector<std::size_t> cls_of(g.vertex_count);
    for (std::size_t c = 0; c < p.size(); ++c)
      for (auto v : p[c]) cls_of[v] = c;
    for (std::size_t u = 0; u < g.vertex_count; ++u)
      for (std::size_t v = 0; v < g.vertex_count; ++v)
        ASSERT_EQ(cls_of[u] == cls_of[v], reach[u][v] && reach[v][u]);
    ASSERT_EQ(is_weakly_reversible(g), wr_oracle(g));
  }
}

// The LP certificate and the SCC test agree, and certificates are honest.
TEST(GraphAnalysisProperty, CertificateAgreesWithScc) {
  Rng rng(43);
  int wr = 0;
  for (int it = 0; it < 250; ++it) {
    MultiGraph g = random_multigraph(rng, 6, 10);
    if (it % 3 == 0) {  // bias towards weakly reversible graphs
      auto edges = g.edges;
      for (auto& e : edges) g.edges.push_back({e.target, e.source});
      if (g.edges.size() > 10) g.edges.resize(10);
    }
    auto cert = wr_certificate(g);
    ASSERT_EQ(cert.has_value(), wr_oracle(g));
    if (!cert) continue;
    ++wr;
    Matrix a = incidence_matrix(g);
    ASSERT_TRUE(structurally_equivalent(cert->flow, a));
    ASSERT_TRUE(rows_balanced(cert->flow));
  }
  EXPECT_GT(wr, 50);
}

TEST(GraphAnalysisProperty, DeficiencyNonnegativeOnInjectiveNetworks) {
  Rng rng(44);
  for (int it = 0; it < 200; ++it) {
    ReactionNetwork net = random_network(rng, 4, 8);
    StructuralReport rep = analyze(net);
    ASSERT_GE(rep.deficiency, 0);
    // n - l - dim S recomputed from the stoichiometric vectors.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < net.r(); ++k) {
      Vector v = reaction_vector(net, k);
      rows.emplace_back(v.begin(), v.end());
    }
    auto root = component_root(net.graph);
    std::set<std::size_t> roots(root.begin(), root.end());
    ASSERT_EQ(rep.deficiency, static_cast<long>(net.n() - roots.size() - rank_oracle(rows)));
  }
}
