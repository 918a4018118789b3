#include <mbdom/canonical.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "support.hpp"

using namespace mbdom;

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 16; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Graph g = testkit::random_graph(n, rep % 2 ? 0.3 : 0.6, rng);
      const CanonicalForm cf = canonical_form(g);
      const Graph h = g.permuted(testkit::random_permutation(n, rng));
      EXPECT_EQ(canonical_form(h), cf) << graph6_encode(g);
      EXPECT_TRUE(isomorphic(g, h));
      EXPECT_EQ(graph6_decode(cf.graph6).edge_count(), g.edge_count());
    }
  }
}

TEST(Canonical, RegularGraphsWithManyAutomorphisms) {
  std::mt19937_64 rng(3);
  const Graph cube = Graph::from_edges(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4},
                                           {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const Graph k44 = Graph::complete_bipartite(4, 4);
  for (const Graph& g : {cube, k44, Graph::cycle(16), Graph::complete(12), Graph::empty(16)})
    for (int rep = 0; rep < 5; ++rep)
      EXPECT_EQ(canonical_form(g.permuted(testkit::random_permutation(g.order(), rng))), canonical_form(g));
  // Same degree sequence, different graphs.
  EXPECT_FALSE(isomorphic(Graph::cycle(6), disjoint_union(Graph::cycle(3), Graph::cycle(3))));
  EXPECT_FALSE(isomorphic(cube, disjoint_union(Graph::complete(4), Graph::complete(4))));
}

TEST(Canonical, RejectsLargeGraphs) { EXPECT_THROW(canonical_form(Graph::empty(17)), Error); }

// Certificates must induce exactly the partition that exhaustive
// relabeling induces on all labeled graphs with up to six vertices.
TEST(Canonical, AgreesWithPermutationOracle) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> brute_to_cf;
    std::set<std::string> seen_cf;
    testkit::for_each_labeled_graph(n, [&](const Graph& g) {
      const std::string brute = testkit::brute_certificate(g);
      const std::string cf = canonical_form(g).graph6;
      auto [it, fresh] = brute_to_cf.emplace(brute, cf);
      if (fresh) {
        EXPECT_TRUE(seen_cf.insert(cf).second) << "two classes share " << cf;
      } else {
        EXPECT_EQ(it->second, cf) << graph6_encode(g);
      }
    });
  }
}

TEST(Enumeration, KnownClassCounts) {
  const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853};
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n).size(), connected[n]) << "n=" << n;
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n, false).size(), all[n]) << "n=" << n;
}

TEST(Enumeration, MatchesEdgeSubsetOracle) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> all;
    std::set<std::string> connected;
    testkit::for_each_labeled_graph(n, [&](const Graph& g) {
      const std::string cf = canonical_form(g).graph6;
      all.insert(cf);
      if (is_connected(g)) connected.insert(cf);
    });
    std::set<std::string> got_all;
    for (const Graph& g : enumerate_graphs(n, false)) got_all.insert(graph6_encode(g));
    std::set<std::string> got_connected;
    for (const Graph& g : enumerate_connected(n)) got_connected.insert(graph6_encode(g));
    EXPECT_EQ(got_all, all) << "n=" << n;
    EXPECT_EQ(got_connected, connected) << "n=" << n;
  }
}

TEST(Enumeration, OutputIsCanonicalAndSorted) {
  const auto gs = enumerate_connected(6);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    EXPECT_EQ(canonical_form(gs[i]).graph6, graph6_encode(gs[i]));
    if (i > 0) {
      EXPECT_LT(graph6_encode(gs[i - 1]), graph6_encode(gs[i]));
    }
  }
  EXPECT_THROW(enumerate_connected(8), Error);
  EXPECT_THROW(enumerate_connected(0), Error);
}
