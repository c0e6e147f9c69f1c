#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eccbounds/edge_list_io.hpp"
#include "eccbounds/graph.hpp"
#include "oracle.hpp"

using eccb::Graph;
using eccb::GraphErrc;
using eccb::GraphError;

namespace {

GraphErrc error_code_of(const eccb::EdgeList& list) {
  try {
    (void)Graph::from_edge_list(list);
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected GraphError";
  return GraphErrc::empty_graph;
}

Graph complete(int n) {
  eccb::EdgeList list{n, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) list.edges.push_back({u, v});
  return Graph::from_edge_list(list);
}

Graph cycle(int n) {
  eccb::EdgeList list{n, {}};
  for (int v = 0; v < n; ++v) list.edges.push_back({v, (v + 1) % n});
  return Graph::from_edge_list(list);
}

Graph path(int n) {
  eccb::EdgeList list{n, {}};
  for (int v = 0; v + 1 < n; ++v) list.edges.push_back({v, v + 1});
  return Graph::from_edge_list(list);
}

}  // namespace

TEST(Graph, SingleEdgeNeighborhoods) {
  const Graph g = oracle::from_edges(2, {{0, 1}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_EQ(g.neighbors(0), 0b10u);
  EXPECT_EQ(g.neighbors(1), 0b01u);
}

TEST(Graph, PathDegreeSequence) {
  const Graph g = path(4);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_EQ(g.degree(3), 1);
}

TEST(Graph, ValidationErrorsAreDistinct) {
  EXPECT_EQ(error_code_of({3, {{0, 1}, {0, 1}}}), GraphErrc::duplicate_edge);
  EXPECT_EQ(error_code_of({3, {{0, 1}, {1, 0}}}), GraphErrc::duplicate_edge);
  EXPECT_EQ(error_code_of({3, {{1, 1}}}), GraphErrc::self_loop);
  EXPECT_EQ(error_code_of({3, {{0, 3}}}), GraphErrc::vertex_out_of_range);
  EXPECT_EQ(error_code_of({3, {{-1, 2}}}), GraphErrc::vertex_out_of_range);
  EXPECT_EQ(error_code_of({0, {}}), GraphErrc::empty_graph);
  EXPECT_EQ(error_code_of({65, {}}), GraphErrc::too_many_vertices);
}

TEST(Graph, SixtyFourVerticesFit) {
  const Graph g = complete(64);
  EXPECT_EQ(g.size(), 64 * 63 / 2);
  EXPECT_EQ(g.all_vertices(), ~std::uint64_t{0});
  EXPECT_EQ(g.degree(63), 63);
}

TEST(Graph, FromRowsRejectsAsymmetry) {
  const std::uint64_t rows[] = {0b10, 0b00};
  try {
    (void)Graph::from_rows(2, rows);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrc::asymmetric_adjacency);
  }
  const std::uint64_t loop[] = {0b01};
  EXPECT_THROW((void)Graph::from_rows(1, loop), GraphError);
}

TEST(Graph, EdgesAreSortedWithSmallerEndpointFirst) {
  const Graph g = oracle::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
  const std::vector<eccb::Edge> expected{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(Graph, PairMaskUsesGraph6Order) {
  // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2), bit 3 = (0,3)
  EXPECT_EQ(Graph::from_pair_mask(4, 0b1000), oracle::from_edges(4, {{0, 3}}));
  EXPECT_EQ(Graph::from_pair_mask(3, 0b101), oracle::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW((void)Graph::from_pair_mask(3, 0b1000), GraphError);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(eccb::is_connected(complete(4)));
  EXPECT_FALSE(eccb::is_connected(Graph::from_edge_list({2, {}})));
  EXPECT_TRUE(eccb::is_connected(cycle(5)));
  EXPECT_TRUE(eccb::is_connected(Graph{}));
}

TEST(Connectivity, AgreesWithFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const double p = std::uniform_real_distribution<double>(0.0, 0.2)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    EXPECT_EQ(eccb::is_connected(g), oracle::compute(g).connected) << "trial " << trial;
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(eccb::complement(complete(4)), Graph::from_edge_list({4, {}}));
  // C5 with the relabeling i -> 2i mod 5 maps the complement back onto C5.
  const Graph c5 = cycle(5);
  const Graph c5bar = eccb::complement(c5);
  for (int v = 0; v < 5; ++v) EXPECT_TRUE(c5bar.adjacent((2 * v) % 5, (2 * (v + 1)) % 5));
  EXPECT_EQ(c5bar.size(), 5);
  // P4 = 0-1-2-3 has complement 1-3-0-2.
  EXPECT_EQ(eccb::complement(path(4)), oracle::from_edges(4, {{1, 3}, {3, 0}, {0, 2}}));
}

TEST(Complement, InvolutionAndDegreeSumProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const Graph h = eccb::complement(g);
    EXPECT_EQ(eccb::complement(h), g);
    EXPECT_EQ(g.size() + h.size(), eccb::pair_count(n));
    for (int v = 0; v < n; ++v) EXPECT_EQ(g.degree(v) + h.degree(v), n - 1);
  }
}

TEST(EdgeListIo, ParsesHeaderAndComments) {
  const Graph g = eccb::parse_edge_list("# a path\n4 3\n0 1\n1 2\n\n2 3\n");
  EXPECT_EQ(g, path(4));
}

TEST(EdgeListIo, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 30), 0.25, rng);
    std::ostringstream out;
    eccb::write_edge_list(out, g);
    EXPECT_EQ(eccb::parse_edge_list(out.str()), g);
  }
}

TEST(EdgeListIo, MalformedInputIsRejected) {
  const auto code = [](const std::string& text) {
    try {
      (void)eccb::parse_edge_list(text);
    } catch (const GraphError& e) {
      return e.code();
    }
    return GraphErrc::empty_graph;
  };
  EXPECT_EQ(code("3 2\n0 1\n"), GraphErrc::malformed_edge_list);
  EXPECT_EQ(code("3 1\n0 x\n"), GraphErrc::malformed_edge_list);
  EXPECT_EQ(code("3 1\n0 1 2\n"), GraphErrc::malformed_edge_list);
  EXPECT_EQ(code(""), GraphErrc::malformed_edge_list);
  EXPECT_EQ(code("3 1\n0 5\n"), GraphErrc::vertex_out_of_range);
  EXPECT_EQ(code("3 2\n0 1\n1 0\n"), GraphErrc::duplicate_edge);
  EXPECT_EQ(code("70 0\n"), GraphErrc::too_many_vertices);
}
