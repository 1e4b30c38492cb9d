// Small named graphs shared by the unit tests.
//
// Left labels a, b map to ids 0, 1; right labels x, y map to ids 0, 1.
#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

#include "dynbc/biclique.h"
#include "dynbc/graph.h"

namespace dynbc::testing {

inline constexpr uint32_t kA = 0, kB = 1;
inline constexpr uint32_t kX = 0, kY = 1;

// {(a,x), (b,y)}
inline BipartiteGraph T0() {
  const std::vector<Edge> edges{{kA, kX}, {kB, kY}};
  return BipartiteGraph::FromEdges(edges);
}

// T0 plus (a,y)
inline BipartiteGraph T1() {
  const std::vector<Edge> edges{{kA, kX}, {kB, kY}, {kA, kY}};
  return BipartiteGraph::FromEdges(edges);
}

inline Biclique B(std::vector<uint32_t> left, std::vector<uint32_t> right) {
  return Biclique::Make(std::move(left), std::move(right));
}

inline std::vector<Biclique> Sorted(std::vector<Biclique> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace dynbc::testing

namespace dynbc {

// Readable gtest failure output.
inline void PrintTo(const Biclique& b, std::ostream* os) { *os << ToString(b); }

}  // namespace dynbc
