#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dynbc/biclique.h"
#include "dynbc/dynamic_engine.h"
#include "dynbc/graph.h"
#include "dynbc/static_mbe.h"

namespace dynbc {

// Which maximal bicliques count. kNonTrivial: both sides hold at least
// `threshold` vertices. kTrivialInclusive: additionally admits maximal
// bicliques with one empty side, such as (L, {}) when no right vertex sees
// all of L.
struct Convention {
  enum class Kind { kNonTrivial, kTrivialInclusive };
  Kind kind = Kind::kNonTrivial;
  uint32_t threshold = 1;

  static Convention NonTrivial(uint32_t s = 1) { return {Kind::kNonTrivial, s}; }
  static Convention TrivialInclusive() { return {Kind::kTrivialInclusive, 0}; }
};

inline constexpr std::size_t kBruteForceMaxVertices = 20;

class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed pairs of a graph given as bitmasks: bit r of left_adj[l] is set iff
// left vertex l sees right vertex r. Closes every subset of the smaller side.
// Returned as (left mask, right mask), sorted. Both masks empty is never
// reported. Requires num_left, num_right <= 32.
std::vector<std::pair<uint32_t, uint32_t>> ClosedPairMasks(std::span<const uint32_t> left_adj, uint32_t num_right,
                                                           Convention c);

// Exact set of maximal bicliques by exhaustive closure, sorted. Every
// registered vertex takes part, isolated ones included. Refuses graphs with
// more than kBruteForceMaxVertices vertices.
std::vector<Biclique> BruteForceBc(const BipartiteGraph& g, Convention c);

// Set difference of two full enumerations: created = BC(after) \ BC(before),
// removed = BC(before) \ BC(after). Normalized.
ChangeSet DiffEnumerations(const std::vector<Biclique>& before, const std::vector<Biclique>& after);

// Baseline: enumerate BC(g) and BC(g + h) with MineLmbc and diff them.
ChangeSet BaselineBc(const BipartiteGraph& g, std::span<const Edge> h, SizeThreshold s);
ChangeSet BaselineDiff(const BipartiteGraph& before, const BipartiteGraph& after, SizeThreshold s);

ChangeSet BruteForceDiff(const BipartiteGraph& before, const BipartiteGraph& after, Convention c);

// Cocktail-party graph: left 0..k-1, right 0..k-1, edge (i, p) iff i != p.
BipartiteGraph GenCocktailParty(uint32_t k);

// n vertices, n even and >= 4: a CP(n/2 - 1) core on left/right ids
// 1..n/2-1, plus u = left 0 joined to every core right vertex and v = right 0
// joined to every core left vertex. The returned edge (u, v) is absent.
struct ExtremalInstance {
  BipartiteGraph graph;
  Edge edge;
};
ExtremalInstance GenSingleEdgeExtremal(uint32_t n);

// 64-bit linear congruential generator, x' = a·x + c mod 2^64 with Knuth's
// MMIX constants a = 6364136223846793005, c = 1442695040888963407. The state
// is seeded directly with the user seed. Only the high bits are consumed.
class Lcg {
 public:
  explicit Lcg(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, 1) from the top 53 bits.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform-ish in [0, bound) from the top 32 bits, bound < 2^32.
  uint32_t NextBelow(uint32_t bound) {
    return static_cast<uint32_t>(((Next() >> 32) * static_cast<uint64_t>(bound)) >> 32);
  }

 private:
  // Modulus 0 selects 2^64.
  std::linear_congruential_engine<uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> engine_;
};

// Left 0..nl-1 and right 0..nr-1 are all registered; each of the nl·nr pairs
// is an edge with probability p, drawn in (left, right) row-major order.
BipartiteGraph GenRandom(uint32_t nl, uint32_t nr, double p, uint64_t seed);

struct StreamSpec {
  double retain_fraction = 0.1;
  std::size_t batch_size = 100;
  uint64_t seed = 1;
};

struct EdgeStream {
  BipartiteGraph initial;
  std::vector<EdgeBatch> batches;
};

// Keeps each edge of g (in sorted order) with probability retain_fraction;
// the rest are Fisher-Yates shuffled and cut into batches. Initial graph has
// every vertex of g. Replaying the batches rebuilds g.
EdgeStream MakeStream(const BipartiteGraph& g, const StreamSpec& spec);

}  // namespace dynbc
