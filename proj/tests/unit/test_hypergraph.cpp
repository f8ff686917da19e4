#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sctree/corpus.hpp"
#include "sctree/error.hpp"
#include "sctree/hypergraph.hpp"

using namespace sctree;

namespace {

Labels numbered(std::size_t n) {
  Labels out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Hypergraph random_hypergraph(std::mt19937_64& rng) {
  std::size_t n = 2 + rng() % 7;
  std::size_t t = 1 + rng() % 6;
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < t; ++i) {
    VertexSet e(rng() & VertexSet::range(n).bits());
    if (e.empty()) e.insert(rng() % n);
    edges.push_back(e);
  }
  return Hypergraph(numbered(n), VertexSet::range(n), minimal_sets(edges));
}

}  // namespace

TEST(Hypergraph, RejectsBadInput) {
  EXPECT_THROW(Hypergraph(numbered(3), VertexSet{0, 1}, {VertexSet{0, 2}}), Error);
  EXPECT_THROW(Hypergraph(numbered(3), VertexSet::range(3), {VertexSet{}}), Error);
  EXPECT_THROW(Hypergraph(numbered(3), VertexSet::range(3), {VertexSet{0}, VertexSet{0, 1}}), Error);
  EXPECT_THROW(Hypergraph(numbered(2), VertexSet::range(3), {}), Error);
}

TEST(Hypergraph, IsolatedVertices) {
  Hypergraph h(numbered(4), VertexSet::range(4), {VertexSet{0}, VertexSet{1, 2}});
  EXPECT_TRUE(h.is_isolated_vertex(0));
  EXPECT_FALSE(h.is_isolated_vertex(1));
  EXPECT_TRUE(h.is_isolated_vertex(3));
  EXPECT_FALSE(h.is_isolated());
  auto stripped = strip_isolated(h);
  EXPECT_EQ(stripped.vertices(), (VertexSet{1, 2}));
  EXPECT_EQ(stripped.edges(), (std::vector<VertexSet>{{1, 2}}));
  EXPECT_THROW(h.is_isolated_vertex(7), Error);
}

TEST(Hypergraph, CoversOfThreeTriangles) {
  auto h = corpus::three_triangles();
  auto covers = minimal_vertex_covers(h);
  EXPECT_EQ(covers, oracle::brute_minimal_covers(h.vertices(), h.edges()));
  // Every minimal cover picks two vertices.
  EXPECT_EQ(covers.size(), 7u);
  EXPECT_TRUE(is_unmixed(h));
}

TEST(Hypergraph, TransversalsOfTheEmptyFamily) {
  EXPECT_EQ(minimal_transversals({}), (std::vector<VertexSet>{VertexSet{}}));
}

TEST(Hypergraph, ContractAndDelete) {
  auto h = corpus::three_triangles();
  auto c = contract(h, 2);  // x3
  EXPECT_EQ(c.vertices(), VertexSet::range(6).without(2));
  EXPECT_EQ(c.edges(), (std::vector<VertexSet>{{0, 1}, {3, 4}}));
  auto d = delete_vertex(h, 2);
  EXPECT_EQ(d.edges(), (std::vector<VertexSet>{{3, 4, 5}}));
  EXPECT_THROW(contract(c, 2), Error);
  Hypergraph trivial(numbered(2), VertexSet::range(2), {VertexSet{0}});
  EXPECT_THROW(contract(trivial, 0), Error);
}

TEST(Hypergraph, IndependenceComplex) {
  auto h = corpus::three_triangles();
  auto ind = independence_complex(h);
  for (VertexSet f : ind.facets()) {
    EXPECT_TRUE(is_independent(h, f));
    for (std::size_t v : h.vertices() - f) EXPECT_FALSE(is_independent(h, f.with(v)));
  }
  // Facets are complements of minimal covers.
  auto covers = minimal_vertex_covers(h);
  EXPECT_EQ(ind.facet_count(), covers.size());
}

// Covers of H/x are the covers of H avoiding x; covers of H\x are the
// minimal sets among C - x.
TEST(HypergraphProperty, CoversUnderContractionAndDeletion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto h = random_hypergraph(rng);
    auto covers = minimal_vertex_covers(h);
    ASSERT_EQ(covers, oracle::brute_minimal_covers(h.vertices(), h.edges())) << h.format();
    for (std::size_t x : h.vertices()) {
      std::vector<VertexSet> avoiding, removed;
      for (VertexSet c : covers) {
        if (!c.contains(x)) avoiding.push_back(c);
        removed.push_back(c.without(x));
      }
      if (!h.has_edge(VertexSet::singleton(x))) {
        auto hc = contract(h, x);
        EXPECT_EQ(minimal_vertex_covers(hc), minimal_sets(avoiding)) << h.format() << " / " << x;
      }
      auto hd = delete_vertex(h, x);
      EXPECT_EQ(minimal_vertex_covers(hd), minimal_sets(removed)) << h.format() << " \\ " << x;
    }
  }
}

TEST(HypergraphProperty, TransversalIsAnInvolutionOnAntichains) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = random_hypergraph(rng);
    EXPECT_EQ(minimal_transversals(minimal_transversals(h.edges())), h.edges()) << h.format();
  }
}
