#include <mbdom/graph.hpp>
#include <mbdom/graph6.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace mbdom;

TEST(VertexSet, AlgebraAndIteration) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.to_string(), "{0,3,5}");
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 3, 5}));
  EXPECT_EQ(VertexSet::range(4), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(s - VertexSet{3}, (VertexSet{0, 5}));
  EXPECT_EQ(s & VertexSet({3, 4}), VertexSet{3});
  EXPECT_EQ(s | VertexSet{1}, (VertexSet{0, 1, 3, 5}));
  EXPECT_TRUE((VertexSet{3}).is_subset_of(s));
  EXPECT_FALSE(s.intersects(VertexSet{1, 2}));
  EXPECT_EQ(VertexSet::from_bits(0b101), (VertexSet{0, 2}));
  EXPECT_THROW(s.insert(64), Error);
  EXPECT_THROW(s.insert(-1), Error);
  EXPECT_EQ(VertexSet{}.to_string(), "{}");
}

TEST(Graph, Builders) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.edge_count(), 5);
  EXPECT_EQ(c5.min_degree(), 2);
  EXPECT_EQ(c5.max_degree(), 2);
  EXPECT_TRUE(c5.adjacent(4, 0));
  EXPECT_EQ(Graph::complete(4).edge_count(), 6);
  EXPECT_EQ(Graph::path(5).edge_count(), 4);
  const Graph k23 = Graph::complete_bipartite(2, 3);
  EXPECT_EQ(k23.edge_count(), 6);
  EXPECT_EQ(k23.degree(0), 3);
  EXPECT_EQ(k23.degree(4), 2);
  EXPECT_EQ(Graph::complete(3).universal_vertices(), VertexSet::range(3));
  EXPECT_TRUE(Graph::path(3).universal_vertices() == VertexSet{1});
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
  EXPECT_THROW(Graph::empty(65), Error);
  EXPECT_THROW(Graph::path(4).delete_edge({0, 2}), Error);
  EXPECT_THROW(Graph::path(4).neighbors(4), Error);
}

TEST(Graph, EdgeEditsAndTransforms) {
  const Graph p4 = Graph::path(4);
  const Graph g = p4.delete_edge(Edge::make(2, 1));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.add_edge({1, 2}), p4);
  EXPECT_EQ(Graph::complete(5).complement(), Graph::empty(5));
  const std::vector<int> perm{3, 2, 1, 0};
  EXPECT_EQ(p4.permuted(perm), p4);
  const auto induced = Graph::cycle(5).induced_subgraph(VertexSet{0, 1, 2});
  EXPECT_EQ(induced.graph, Graph::path(3));
  EXPECT_EQ(induced.vertices, (std::vector<int>{0, 1, 2}));
}

TEST(Graph, ConnectivityCutVerticesBridges) {
  const Graph p5 = Graph::path(5);
  EXPECT_TRUE(is_connected(p5));
  EXPECT_EQ(cut_vertices(p5), (VertexSet{1, 2, 3}));
  EXPECT_EQ(bridges(p5).size(), 4U);
  EXPECT_TRUE(cut_vertices(Graph::cycle(5)).empty());
  EXPECT_TRUE(bridges(Graph::cycle(5)).empty());
  const Graph two = disjoint_union(Graph::complete(3), Graph::complete(2));
  EXPECT_EQ(components(two).size(), 2U);
  EXPECT_FALSE(is_connected(two));
  EXPECT_TRUE(is_connected(Graph::empty(1)));
  EXPECT_TRUE(is_connected(Graph::empty(0)));
}

TEST(Graph, BipartiteAndTriangles) {
  EXPECT_FALSE(is_bipartite(Graph::cycle(5)).has_value());
  const auto bp = is_bipartite(Graph::cycle(6));
  ASSERT_TRUE(bp.has_value());
  EXPECT_EQ(bp->first.size(), 3);
  EXPECT_TRUE(is_triangle_free(Graph::cycle(5)));
  EXPECT_FALSE(is_triangle_free(Graph::complete(3)));
}

TEST(Graph, JoinAndEdgesBetween) {
  // K2 join an independent pair is K4 minus an edge.
  const Graph h4 = join(Graph::complete(2), Graph::empty(2));
  EXPECT_EQ(h4.edge_count(), 5);
  EXPECT_EQ(h4.universal_vertices(), (VertexSet{0, 1}));
  EXPECT_EQ(edges_between(Graph::complete(4), VertexSet{0}, VertexSet{1, 2}).size(), 2U);
  EXPECT_THROW(edges_between(Graph::complete(4), VertexSet{0, 1}, VertexSet{1}), Error);
}

TEST(Graph, Domination) {
  EXPECT_EQ(domination_number(Graph::cycle(5)), 2);
  EXPECT_EQ(domination_number(Graph::path(5)), 2);
  EXPECT_EQ(domination_number(Graph::complete(6)), 1);
  EXPECT_EQ(domination_number(Graph::empty(4)), 4);
  EXPECT_EQ(minimum_dominating_sets(Graph::cycle(5)).size(), 5U);
  EXPECT_TRUE(Graph::path(5).dominates(VertexSet{1, 3}));
  EXPECT_FALSE(Graph::path(5).dominates(VertexSet{0, 4}));
}

// Strings below were produced by an independent graph6 writer.
TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(Graph::cycle(5)), "Dhc");
  EXPECT_EQ(graph6_encode(Graph::path(5)), "DhC");
  EXPECT_EQ(graph6_encode(Graph::complete(2)), "A_");
  EXPECT_EQ(graph6_encode(Graph::complete_bipartite(2, 3)), "D]o");
  EXPECT_EQ(graph6_encode(Graph::empty(0)), "?");
  EXPECT_EQ(graph6_encode(Graph::empty(1)), "@");
  std::vector<Edge> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.push_back({i, (i + 1) % 5});
    petersen.push_back({i, i + 5});
    petersen.push_back({5 + i, 5 + (i + 2) % 5});
  }
  EXPECT_EQ(graph6_encode(Graph::from_edges(10, petersen)), "IheA@GUAo");
  const std::string long_path = graph6_encode(Graph::path(63));
  EXPECT_EQ(long_path.substr(0, 6), "~??~hC");
  EXPECT_EQ(long_path.size(), 330U);
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int n : {0, 1, 2, 5, 7, 13, 62, 63, 64}) {
    for (int rep = 0; rep < 5; ++rep) {
      const Graph g = testkit::random_graph(n, 0.4, rng);
      EXPECT_EQ(graph6_decode(graph6_encode(g)), g) << "n=" << n;
    }
  }
  EXPECT_EQ(graph6_decode(">>graph6<<Dhc"), Graph::cycle(5));
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("D"), ParseError);       // missing body
  EXPECT_THROW(graph6_decode("Dhcc"), ParseError);    // trailing byte
  EXPECT_THROW(graph6_decode("D h"), ParseError);     // byte out of range
  EXPECT_THROW(graph6_decode("Aw"), ParseError);      // nonzero padding
  EXPECT_EQ(graph6_decode("Bw"), Graph::complete(3));
  try {
    graph6_decode("D!c");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
}

TEST(Graph6, StreamReader) {
  std::istringstream in(">>graph6<<\nDhc\n\nA_\nnot-a-graph\n");
  const auto lines = read_graph6_stream(in);
  ASSERT_EQ(lines.size(), 3U);
  EXPECT_EQ(lines[0].line_number, 2U);
  EXPECT_EQ(*lines[0].graph, Graph::cycle(5));
  EXPECT_EQ(*lines[1].graph, Graph::complete(2));
  EXPECT_FALSE(lines[2].graph.has_value());
  EXPECT_EQ(lines[2].line_number, 5U);
  EXPECT_FALSE(lines[2].error.empty());
}
