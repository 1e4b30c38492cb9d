#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dynbc/biclique.h"
#include "dynbc/graph.h"

namespace dynbc {

// Minimum number of vertices required on each side of a reported biclique.
class SizeThreshold {
 public:
  explicit SizeThreshold(uint32_t s = 1) : value_(s) {
    if (s < 1) throw PreconditionError("size threshold must be at least 1");
  }
  uint32_t value() const { return value_; }

  bool Admits(const Biclique& b) const { return b.left.size() >= value_ && b.right.size() >= value_; }

 private:
  uint32_t value_;
};

using BicliqueSink = std::function<void(const Biclique&)>;

// Relabelled copy of (part of) a BipartiteGraph with dense local indices on
// each side. Local order follows global id order, so mapping a sorted local
// set back through *_ids yields a sorted global set.
struct CompactGraph {
  std::vector<uint32_t> left_ids;
  std::vector<uint32_t> right_ids;
  std::vector<std::vector<uint32_t>> left_adj;   // local right indices
  std::vector<std::vector<uint32_t>> right_adj;  // local left indices

  // Every vertex of g with at least one edge.
  static CompactGraph Whole(const BipartiteGraph& g);

  // Subgraph of g induced by the given sorted vertex sets.
  static CompactGraph Induced(const BipartiteGraph& g, std::span<const uint32_t> left,
                              std::span<const uint32_t> right);
};

// Enumerates every maximal biclique (X, Y) of g with |X| >= s and |Y| >= s,
// each exactly once, sides in ascending id order. Depth-first closure
// enumeration over the smaller side; emission order is deterministic.
// Returns the number of bicliques passed to `sink`.
std::size_t MineLmbc(const BipartiteGraph& g, SizeThreshold s, const BicliqueSink& sink);
std::size_t MineLmbc(const CompactGraph& g, SizeThreshold s, const BicliqueSink& sink);

std::vector<Biclique> MineLmbcAll(const BipartiteGraph& g, SizeThreshold s);

struct ClosureResult {
  Biclique biclique;
  // Y came out empty; biclique is (all left vertices, {}).
  bool degenerate = false;
};

// Y = ∩_{x∈X} Γ(x), X' = ∩_{y∈Y} Γ(y). Throws PreconditionError on an empty
// or unknown X.
ClosureResult Closure(const BipartiteGraph& g, std::span<const uint32_t> left_set);

}  // namespace dynbc
