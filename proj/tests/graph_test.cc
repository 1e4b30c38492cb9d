#include "dynbc/graph.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "dynbc/oracle.h"
#include "test_graphs.h"

namespace dynbc {
namespace {

using testing::B;
using testing::kA;
using testing::kB;
using testing::kX;
using testing::kY;

TEST(BipartiteGraph, LeftAndRightIdsAreIndependent) {
  BipartiteGraph g;
  g.AddVertex(LeftVertex(3));
  EXPECT_TRUE(g.HasVertex(LeftVertex(3)));
  EXPECT_FALSE(g.HasVertex(RightVertex(3)));
  EXPECT_NE(LeftVertex(3), RightVertex(3));
}

TEST(BipartiteGraph, AddDisjointEdge) {
  auto g = BipartiteGraph::FromEdges(std::vector<Edge>{{kA, kX}});
  g.AddEdges(std::vector<Edge>{{kB, kY}});
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{kA, kX}, {kB, kY}}));
  EXPECT_EQ(g.NumEdges(), 2u);
}

TEST(BipartiteGraph, AddBuildsT1) {
  auto g = testing::T0();
  g.AddEdges(std::vector<Edge>{{kA, kY}});
  EXPECT_EQ(g, testing::T1());
  EXPECT_TRUE(g.CheckInvariants());
}

TEST(BipartiteGraph, DuplicateInBatchRejected) {
  BipartiteGraph g;
  const std::vector<Edge> h{{kA, kX}, {kA, kX}};
  try {
    g.AddEdges(h);
    FAIL() << "expected BatchError";
  } catch (const BatchError& e) {
    EXPECT_EQ(e.edge(), (Edge{kA, kX}));
  }
  EXPECT_EQ(g.NumEdges(), 0u);
  EXPECT_EQ(g.NumVertices(), 0u);
}

TEST(BipartiteGraph, AddPresentEdgeRejectedAtomically) {
  auto g = testing::T0();
  const auto before = g;
  EXPECT_THROW(g.AddEdges(std::vector<Edge>{{kA, kY}, {kB, kY}}), BatchError);
  EXPECT_EQ(g, before);
}

TEST(BipartiteGraph, RemoveKeepsVertices) {
  auto g = BipartiteGraph::FromEdges(std::vector<Edge>{{kA, kX}});
  g.RemoveEdges(std::vector<Edge>{{kA, kX}});
  EXPECT_EQ(g.NumEdges(), 0u);
  EXPECT_TRUE(g.HasVertex(LeftVertex(kA)));
  EXPECT_TRUE(g.HasVertex(RightVertex(kX)));
  EXPECT_EQ(g.Degree(LeftVertex(kA)), 0u);
}

TEST(BipartiteGraph, RemoveInvertsAdd) {
  auto g = testing::T1();
  g.RemoveEdges(std::vector<Edge>{{kA, kY}});
  EXPECT_EQ(g.Edges(), testing::T0().Edges());
}

TEST(BipartiteGraph, RemoveAbsentRejected) {
  auto g = BipartiteGraph::FromEdges(std::vector<Edge>{{kA, kX}});
  EXPECT_THROW(g.RemoveEdges(std::vector<Edge>{{kB, kY}}), BatchError);
  EXPECT_EQ(g.NumEdges(), 1u);
}

TEST(BipartiteGraph, IdRangeEnforced) {
  BipartiteGraph g;
  EXPECT_THROW(g.AddEdges(std::vector<Edge>{{kMaxVertexId + 1, 0}}), BatchError);
}

TEST(BipartiteGraph, DegreeQueries) {
  const auto g = testing::T1();
  EXPECT_EQ(g.MaxDegree(), 2u);
  EXPECT_EQ(g.MinDegree(), 1u);
  EXPECT_EQ(g.Neighbors(LeftVertex(kA)), (std::vector<uint32_t>{kX, kY}));
  EXPECT_EQ(g.Degree(RightVertex(kY)), 2u);
  EXPECT_EQ(BipartiteGraph{}.MaxDegree(), 0u);
  EXPECT_THROW(BipartiteGraph{}.Degree(LeftVertex(0)), PreconditionError);
}

TEST(EdgeSubgraph, SingleEdge) {
  const auto g = BipartiteGraph::FromEdges(std::vector<Edge>{{kA, kX}});
  EXPECT_EQ(EdgeSubgraph(g, {kA, kX}).Edges(), (std::vector<Edge>{{kA, kX}}));
}

TEST(EdgeSubgraph, T1) {
  const auto sub = EdgeSubgraph(testing::T1(), {kA, kY});
  EXPECT_EQ(sub.LeftVertices(), (std::vector<uint32_t>{kA, kB}));
  EXPECT_EQ(sub.RightVertices(), (std::vector<uint32_t>{kX, kY}));
  EXPECT_EQ(sub.Edges(), (std::vector<Edge>{{kA, kX}, {kA, kY}, {kB, kY}}));
}

TEST(EdgeSubgraph, MissingEdgeRejected) {
  EXPECT_THROW(EdgeSubgraph(testing::T0(), {kA, kY}), PreconditionError);
}

TEST(EdgeSubgraph, ContainsEdgeAndOnlyNeighbours) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = GenRandom(7, 6, 0.4, seed);
    for (const Edge& e : g.Edges()) {
      const auto sub = EdgeSubgraph(g, e);
      EXPECT_TRUE(sub.HasEdge(e));
      for (uint32_t l : sub.LeftVertices()) EXPECT_TRUE(g.HasEdge({l, e.right}));
      for (uint32_t r : sub.RightVertices()) EXPECT_TRUE(g.HasEdge({e.left, r}));
    }
  }
}

TEST(IsMaximalBiclique, Examples) {
  const auto t1 = testing::T1();
  EXPECT_TRUE(IsMaximalBiclique(t1, B({kA}, {kX, kY})));
  EXPECT_FALSE(IsMaximalBiclique(t1, B({kA}, {kX})));
  EXPECT_FALSE(IsMaximalBiclique(t1, B({kA, kB}, {kX})));  // not a biclique
  EXPECT_TRUE(IsMaximalBiclique(BipartiteGraph::FromEdges(std::vector<Edge>{{kA, kX}}), B({kA}, {kX})));
}

TEST(IsMaximalBiclique, Preconditions) {
  const auto t1 = testing::T1();
  EXPECT_THROW(IsMaximalBiclique(t1, B({kA}, {})), PreconditionError);
  EXPECT_THROW(IsMaximalBiclique(t1, B({7}, {kX})), PreconditionError);
}

TEST(IsMaximalBiclique, AgreesWithBruteForce) {
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    const uint32_t nl = 1 + seed % 6;
    const uint32_t nr = 1 + (seed / 6) % 6;
    const auto g = GenRandom(nl, nr, 0.5, seed);
    const auto oracle = BruteForceBc(g, Convention::NonTrivial(1));
    // Every non-empty left subset, closed or not, paired with its common neighbourhood.
    for (uint32_t mask = 1; mask < (1u << nl); ++mask) {
      std::vector<uint32_t> left;
      for (uint32_t i = 0; i < nl; ++i) {
        if (mask >> i & 1u) left.push_back(i);
      }
      std::vector<uint32_t> right = g.RightVertices();
      for (uint32_t l : left) right = IntersectSorted(right, g.Neighbors(LeftVertex(l)));
      if (right.empty()) continue;
      const Biclique b{left, right};
      const bool in_oracle = std::binary_search(oracle.begin(), oracle.end(), b);
      EXPECT_EQ(IsMaximalBiclique(g, b), in_oracle) << ToString(b) << " seed " << seed;
    }
  }
}

TEST(BipartiteGraph, RandomMutationSequencesKeepInvariants) {
  Lcg rng(99);
  for (int round = 0; round < 40; ++round) {
    auto g = GenRandom(8, 8, 0.3, 1000 + round);
    for (int step = 0; step < 20; ++step) {
      const auto snapshot = g;
      std::vector<Edge> batch;
      const bool add = rng.NextBelow(2) == 0;
      for (uint32_t l = 0; l < 8; ++l) {
        for (uint32_t r = 0; r < 8; ++r) {
          if (g.HasEdge({l, r}) != add && rng.NextBelow(6) == 0) batch.push_back({l, r});
        }
      }
      if (add) {
        g.AddEdges(batch);
        ASSERT_TRUE(g.CheckInvariants());
        g.RemoveEdges(batch);
      } else {
        g.RemoveEdges(batch);
        ASSERT_TRUE(g.CheckInvariants());
        g.AddEdges(batch);
      }
      ASSERT_EQ(g, snapshot);
      // Keep the graph moving between rounds.
      if (add) g.AddEdges(batch);
      ASSERT_TRUE(g.CheckInvariants());
    }
  }
}

TEST(SortedHelpers, IntersectAndSubset) {
  const std::vector<uint32_t> a{1, 3, 5, 7}, b{3, 4, 5};
  EXPECT_EQ(IntersectSorted(a, b), (std::vector<uint32_t>{3, 5}));
  EXPECT_TRUE(IsSortedSubset(std::vector<uint32_t>{3, 7}, a));
  EXPECT_FALSE(IsSortedSubset(b, a));
}

}  // namespace
}  // namespace dynbc
