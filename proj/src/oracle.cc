#include "dynbc/oracle.h"

#include <algorithm>
#include <bit>
#include <set>

namespace dynbc {
namespace {

uint32_t FullMask(uint32_t n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

std::vector<uint32_t> MaskToIds(uint32_t mask, const std::vector<uint32_t>& ids) {
  std::vector<uint32_t> out;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    out.push_back(ids[bit]);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::vector<std::pair<uint32_t, uint32_t>> ClosedPairMasks(std::span<const uint32_t> left_adj, uint32_t num_right,
                                                           Convention c) {
  const auto num_left = static_cast<uint32_t>(left_adj.size());
  if (num_left > 32 || num_right > 32) throw OracleRefusal("closed pairs: side larger than 32");
  std::vector<uint32_t> right_adj(num_right, 0);
  for (uint32_t l = 0; l < num_left; ++l) {
    for (uint32_t r = 0; r < num_right; ++r) {
      if (left_adj[l] >> r & 1u) right_adj[r] |= 1u << l;
    }
  }
  const uint32_t full_left = FullMask(num_left);
  const uint32_t full_right = FullMask(num_right);
  auto common = [](std::span<const uint32_t> adj, uint32_t subset, uint32_t full) {
    uint32_t acc = full;
    while (subset != 0) {
      acc &= adj[std::countr_zero(subset)];
      subset &= subset - 1;
    }
    return acc;
  };

  std::set<std::pair<uint32_t, uint32_t>> pairs;
  const bool left_smaller = num_left <= num_right;
  const uint32_t k = left_smaller ? num_left : num_right;
  for (uint64_t subset = 0; subset < (uint64_t{1} << k); ++subset) {
    const auto sub = static_cast<uint32_t>(subset);
    uint32_t x, y;
    if (left_smaller) {
      y = common(left_adj, sub, full_right);
      x = common(right_adj, y, full_left);
    } else {
      x = common(right_adj, sub, full_left);
      y = common(left_adj, x, full_right);
    }
    if (x == 0 && y == 0) continue;
    if (c.kind == Convention::Kind::kNonTrivial) {
      if (static_cast<uint32_t>(std::popcount(x)) < std::max(c.threshold, 1u) ||
          static_cast<uint32_t>(std::popcount(y)) < std::max(c.threshold, 1u)) {
        continue;
      }
    }
    pairs.emplace(x, y);
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<Biclique> BruteForceBc(const BipartiteGraph& g, Convention c) {
  if (g.NumVertices() > kBruteForceMaxVertices) {
    throw OracleRefusal("brute force: " + std::to_string(g.NumVertices()) + " vertices exceeds the limit of " +
                        std::to_string(kBruteForceMaxVertices));
  }
  const std::vector<uint32_t> left_ids = g.LeftVertices();
  const std::vector<uint32_t> right_ids = g.RightVertices();
  std::vector<uint32_t> right_bit(g.RightIdBound(), 0);
  for (uint32_t i = 0; i < right_ids.size(); ++i) right_bit[right_ids[i]] = i;
  std::vector<uint32_t> left_adj(left_ids.size(), 0);
  for (uint32_t i = 0; i < left_ids.size(); ++i) {
    for (uint32_t r : g.Neighbors(LeftVertex(left_ids[i]))) left_adj[i] |= 1u << right_bit[r];
  }
  std::vector<Biclique> out;
  for (const auto& [x, y] : ClosedPairMasks(left_adj, static_cast<uint32_t>(right_ids.size()), c)) {
    out.push_back(Biclique{MaskToIds(x, left_ids), MaskToIds(y, right_ids)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChangeSet DiffEnumerations(const std::vector<Biclique>& before, const std::vector<Biclique>& after) {
  std::vector<Biclique> a = before;
  std::vector<Biclique> b = after;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ChangeSet cs;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(cs.created));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cs.removed));
  return cs;
}

ChangeSet BaselineDiff(const BipartiteGraph& before, const BipartiteGraph& after, SizeThreshold s) {
  return DiffEnumerations(MineLmbcAll(before, s), MineLmbcAll(after, s));
}

ChangeSet BaselineBc(const BipartiteGraph& g, std::span<const Edge> h, SizeThreshold s) {
  BipartiteGraph after = g;
  after.AddEdges(h);
  return BaselineDiff(g, after, s);
}

ChangeSet BruteForceDiff(const BipartiteGraph& before, const BipartiteGraph& after, Convention c) {
  return DiffEnumerations(BruteForceBc(before, c), BruteForceBc(after, c));
}

BipartiteGraph GenCocktailParty(uint32_t k) {
  if (k < 1) throw PreconditionError("cocktail party: k must be at least 1");
  BipartiteGraph g;
  for (uint32_t i = 0; i < k; ++i) {
    g.AddVertex(LeftVertex(i));
    g.AddVertex(RightVertex(i));
  }
  std::vector<Edge> edges;
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t p = 0; p < k; ++p) {
      if (i != p) edges.push_back({i, p});
    }
  }
  g.AddEdges(edges);
  return g;
}

ExtremalInstance GenSingleEdgeExtremal(uint32_t n) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("extremal construction needs an even n >= 4");
  const uint32_t half = n / 2;
  BipartiteGraph g;
  for (uint32_t i = 0; i < half; ++i) {
    g.AddVertex(LeftVertex(i));
    g.AddVertex(RightVertex(i));
  }
  std::vector<Edge> edges;
  for (uint32_t i = 1; i < half; ++i) {
    for (uint32_t p = 1; p < half; ++p) {
      if (i != p) edges.push_back({i, p});
    }
    edges.push_back({0, i});  // u to the core right side
    edges.push_back({i, 0});  // core left side to v
  }
  g.AddEdges(edges);
  return {std::move(g), Edge{0, 0}};
}

BipartiteGraph GenRandom(uint32_t nl, uint32_t nr, double p, uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw PreconditionError("random graph: p must lie in [0, 1]");
  BipartiteGraph g;
  for (uint32_t i = 0; i < nl; ++i) g.AddVertex(LeftVertex(i));
  for (uint32_t j = 0; j < nr; ++j) g.AddVertex(RightVertex(j));
  Lcg rng(seed);
  std::vector<Edge> edges;
  for (uint32_t i = 0; i < nl; ++i) {
    for (uint32_t j = 0; j < nr; ++j) {
      if (rng.NextDouble() < p) edges.push_back({i, j});
    }
  }
  g.AddEdges(edges);
  return g;
}

EdgeStream MakeStream(const BipartiteGraph& g, const StreamSpec& spec) {
  if (spec.batch_size < 1) throw PreconditionError("stream: batch size must be at least 1");
  if (spec.retain_fraction < 0.0 || spec.retain_fraction > 1.0) {
    throw PreconditionError("stream: retain fraction must lie in [0, 1]");
  }
  EdgeStream stream;
  for (uint32_t l : g.LeftVertices()) stream.initial.AddVertex(LeftVertex(l));
  for (uint32_t r : g.RightVertices()) stream.initial.AddVertex(RightVertex(r));
  Lcg rng(spec.seed);
  std::vector<Edge> kept;
  std::vector<Edge> rest;
  for (const Edge& e : g.Edges()) {
    (rng.NextDouble() < spec.retain_fraction ? kept : rest).push_back(e);
  }
  stream.initial.AddEdges(kept);
  for (std::size_t i = rest.size(); i > 1; --i) {
    std::swap(rest[i - 1], rest[rng.NextBelow(static_cast<uint32_t>(i))]);
  }
  for (std::size_t i = 0; i < rest.size(); i += spec.batch_size) {
    const std::size_t end = std::min(rest.size(), i + spec.batch_size);
    stream.batches.emplace_back(rest.begin() + i, rest.begin() + end);
  }
  return stream;
}

}  // namespace dynbc
