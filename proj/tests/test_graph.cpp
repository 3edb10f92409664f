#include <gtest/gtest.h>

#include "invol/errors.hpp"
#include "invol/graph.hpp"
#include "invol/morphism.hpp"
#include "support/oracles.hpp"

using namespace invol;

TEST(SimpleGraph, RejectsMalformedInput) {
  EXPECT_THROW(SimpleGraph(3, {{0, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(3, {{0, 3}}), InputError);
}

TEST(GraphAutomorphisms, Examples) {
  EXPECT_EQ(graph_automorphisms(SimpleGraph::path(3)).size(), 2u);
  EXPECT_EQ(graph_automorphisms(SimpleGraph::complete(4)).size(), 24u);
  EXPECT_EQ(graph_automorphisms(SimpleGraph::cycle(5)).size(), 10u);
}

TEST(GraphAutomorphisms, MatchBruteForce) {
  for (const auto& [name, g] : oracle::graph_corpus()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(graph_automorphisms(g).elements, oracle::brute_graph_automorphisms(g));
  }
  EXPECT_EQ(graph_automorphisms(SimpleGraph::empty(4)).size(), 24u);
}

TEST(GraphInvolutionGroup, Examples) {
  EXPECT_EQ(graph_involution_group(SimpleGraph::path(3)).order(), 2u);
  EXPECT_EQ(graph_involution_group(SimpleGraph::cycle(5)).order(), 10u);
  EXPECT_EQ(graph_involution_group(SimpleGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}})).order(), 1u);
}

TEST(Frucht, TriangleIsThreeNilpotent) {
  auto s = frucht_semigroup(SimpleGraph::complete(3));
  ASSERT_EQ(s.size(), 5u);
  EXPECT_TRUE(is_commutative(s));
  const Element n = 4;
  for (Element a = 0; a < 5; ++a) {
    EXPECT_EQ(s.product(a, n), n);
    for (Element b = 0; b < 5; ++b)
      for (Element d = 0; d < 5; ++d) EXPECT_EQ(s.product(s.product(a, b), d), n);
  }
  EXPECT_EQ(s.name(3), "Y");
  EXPECT_EQ(s.name(4), "N");
}

TEST(Frucht, AutomorphismCounts) {
  EXPECT_EQ(enumerate_automorphisms(frucht_semigroup(SimpleGraph::path(3))).size(), 2u);
  auto k2 = frucht_semigroup(SimpleGraph::complete(2));
  EXPECT_EQ(k2.size(), 4u);
  EXPECT_EQ(oracle::brute_morphisms(k2, false).size(), 2u);
  EXPECT_EQ(enumerate_automorphisms(k2).size(), 2u);
}

TEST(Frucht, RestrictionIsGraphAutomorphism) {
  for (const auto& [name, g] : oracle::graph_corpus()) {
    SCOPED_TRACE(name);
    auto s = frucht_semigroup(g);
    const auto n = g.vertex_count();
    auto aut = enumerate_automorphisms(s);
    std::vector<Permutation> restricted;
    for (const auto& a : aut.elements) {
      EXPECT_EQ(a(static_cast<Element>(n)), n);
      EXPECT_EQ(a(static_cast<Element>(n + 1)), n + 1);
      std::vector<Element> img(a.images().begin(), a.images().begin() + static_cast<std::ptrdiff_t>(n));
      restricted.emplace_back(img);
    }
    EXPECT_EQ(restricted, graph_automorphisms(g).elements);
  }
}

TEST(Frucht, RejectsEdgelessGraph) { EXPECT_THROW(frucht_semigroup(SimpleGraph::empty(3)), NoEdges); }
