#include "dynbc/static_mbe.h"

#include <algorithm>
#include <numeric>

namespace dynbc {
namespace {

using AdjList = std::vector<std::vector<uint32_t>>;

// Expansion runs over side A (the smaller one); every node of the search is a
// closed set X ⊆ A together with N = Γ(X) ⊆ B. A child X' = Γ(Γ(X ∪ {v}))
// is accepted only if everything it adds beyond X ∪ {v} still lies in the
// unexplored tail, which makes each closed set reachable from exactly one
// parent.
class LmbcMiner {
 public:
  LmbcMiner(const AdjList& a_adj, const AdjList& b_adj, const std::vector<uint32_t>& a_ids,
            const std::vector<uint32_t>& b_ids, bool a_is_left, uint32_t s, const BicliqueSink& sink)
      : a_adj_(a_adj),
        b_adj_(b_adj),
        a_ids_(a_ids),
        b_ids_(b_ids),
        a_is_left_(a_is_left),
        s_(s),
        sink_(sink),
        tail_mark_(a_adj.size(), 0) {}

  std::size_t Run() {
    std::vector<uint32_t> all_b(b_adj_.size());
    std::iota(all_b.begin(), all_b.end(), 0u);
    std::vector<uint32_t> tail(a_adj_.size());
    std::iota(tail.begin(), tail.end(), 0u);
    Expand({}, all_b, tail, /*depth=*/1, /*root=*/true);
    return emitted_;
  }

 private:
  struct Candidate {
    uint32_t vertex;
    std::vector<uint32_t> neighbors;  // Γ(X ∪ {vertex})
  };

  void Expand(const std::vector<uint32_t>& x, const std::vector<uint32_t>& gx,
              const std::vector<uint32_t>& tail, uint32_t depth, bool root) {
    std::vector<Candidate> cands;
    cands.reserve(tail.size());
    for (uint32_t v : tail) {
      std::vector<uint32_t> nb = root ? a_adj_[v] : IntersectSorted(gx, a_adj_[v]);
      if (nb.size() >= s_) cands.push_back({v, std::move(nb)});
    }
    if (x.size() + cands.size() < s_) return;
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& p, const Candidate& q) {
      return p.neighbors.size() < q.neighbors.size();
    });

    for (const Candidate& c : cands) tail_mark_[c.vertex] = depth;

    for (std::size_t i = 0; i < cands.size(); ++i) {
      const Candidate& cand = cands[i];
      tail_mark_[cand.vertex] = 0;
      const std::size_t remaining = cands.size() - i - 1;
      if (x.size() + 1 + remaining < s_) continue;

      const std::vector<uint32_t>& n = cand.neighbors;
      std::vector<uint32_t> y = ClosureOf(n);
      // X ∪ {v} ⊆ Y always; the rest of Y must come from the live tail.
      std::size_t in_tail = 0;
      for (uint32_t w : y) in_tail += (tail_mark_[w] == depth);
      if (y.size() != x.size() + 1 + in_tail) continue;

      if (y.size() >= s_) Emit(y, n);

      std::vector<uint32_t> child_tail;
      child_tail.reserve(remaining);
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const uint32_t w = cands[j].vertex;
        if (!std::binary_search(y.begin(), y.end(), w)) child_tail.push_back(w);
      }
      if (!child_tail.empty() || y.size() >= s_) {
        Expand(y, n, child_tail, depth + 1, false);
        // The child clears its own marks on exit; restore ours.
        for (std::size_t j = i + 1; j < cands.size(); ++j) tail_mark_[cands[j].vertex] = depth;
      }
    }
  }

  // Γ(N) on side A, N non-empty.
  std::vector<uint32_t> ClosureOf(const std::vector<uint32_t>& n) const {
    std::size_t smallest = 0;
    for (std::size_t k = 1; k < n.size(); ++k) {
      if (b_adj_[n[k]].size() < b_adj_[n[smallest]].size()) smallest = k;
    }
    std::vector<uint32_t> y = b_adj_[n[smallest]];
    for (std::size_t k = 0; k < n.size() && !y.empty(); ++k) {
      if (k != smallest) y = IntersectSorted(y, b_adj_[n[k]]);
    }
    return y;
  }

  void Emit(const std::vector<uint32_t>& a_side, const std::vector<uint32_t>& b_side) {
    Biclique b;
    std::vector<uint32_t>& a_out = a_is_left_ ? b.left : b.right;
    std::vector<uint32_t>& b_out = a_is_left_ ? b.right : b.left;
    a_out.reserve(a_side.size());
    b_out.reserve(b_side.size());
    for (uint32_t i : a_side) a_out.push_back(a_ids_[i]);
    for (uint32_t i : b_side) b_out.push_back(b_ids_[i]);
    ++emitted_;
    sink_(b);
  }

  const AdjList& a_adj_;
  const AdjList& b_adj_;
  const std::vector<uint32_t>& a_ids_;
  const std::vector<uint32_t>& b_ids_;
  const bool a_is_left_;
  const uint32_t s_;
  const BicliqueSink& sink_;
  std::vector<uint32_t> tail_mark_;
  std::size_t emitted_ = 0;
};

}  // namespace

CompactGraph CompactGraph::Whole(const BipartiteGraph& g) {
  CompactGraph c;
  constexpr uint32_t kAbsent = UINT32_MAX;
  std::vector<uint32_t> right_local(g.RightIdBound(), kAbsent);
  for (uint32_t r : g.RightVertices()) {
    if (g.Degree(RightVertex(r)) == 0) continue;
    right_local[r] = static_cast<uint32_t>(c.right_ids.size());
    c.right_ids.push_back(r);
  }
  c.right_adj.resize(c.right_ids.size());
  for (uint32_t l : g.LeftVertices()) {
    const auto& nb = g.Neighbors(LeftVertex(l));
    if (nb.empty()) continue;
    const auto local = static_cast<uint32_t>(c.left_ids.size());
    c.left_ids.push_back(l);
    auto& adj = c.left_adj.emplace_back();
    adj.reserve(nb.size());
    for (uint32_t r : nb) {
      adj.push_back(right_local[r]);
      c.right_adj[right_local[r]].push_back(local);
    }
  }
  return c;
}

CompactGraph CompactGraph::Induced(const BipartiteGraph& g, std::span<const uint32_t> left,
                                   std::span<const uint32_t> right) {
  CompactGraph c;
  c.left_ids.assign(left.begin(), left.end());
  c.right_ids.assign(right.begin(), right.end());
  c.left_adj.resize(left.size());
  c.right_adj.resize(right.size());
  for (uint32_t i = 0; i < left.size(); ++i) {
    const auto& nb = g.Neighbors(LeftVertex(left[i]));
    // Merge the sorted neighbour list against the sorted right set.
    std::size_t p = 0, q = 0;
    while (p < nb.size() && q < right.size()) {
      if (nb[p] < right[q]) {
        ++p;
      } else if (right[q] < nb[p]) {
        ++q;
      } else {
        c.left_adj[i].push_back(static_cast<uint32_t>(q));
        c.right_adj[q].push_back(i);
        ++p;
        ++q;
      }
    }
  }
  return c;
}

std::size_t MineLmbc(const CompactGraph& g, SizeThreshold s, const BicliqueSink& sink) {
  if (g.left_ids.empty() || g.right_ids.empty()) return 0;
  const bool left_smaller = g.left_ids.size() <= g.right_ids.size();
  if (left_smaller) {
    LmbcMiner miner(g.left_adj, g.right_adj, g.left_ids, g.right_ids, true, s.value(), sink);
    return miner.Run();
  }
  LmbcMiner miner(g.right_adj, g.left_adj, g.right_ids, g.left_ids, false, s.value(), sink);
  return miner.Run();
}

std::size_t MineLmbc(const BipartiteGraph& g, SizeThreshold s, const BicliqueSink& sink) {
  return MineLmbc(CompactGraph::Whole(g), s, sink);
}

std::vector<Biclique> MineLmbcAll(const BipartiteGraph& g, SizeThreshold s) {
  std::vector<Biclique> out;
  MineLmbc(g, s, [&out](const Biclique& b) { out.push_back(b); });
  return out;
}

ClosureResult Closure(const BipartiteGraph& g, std::span<const uint32_t> left_set) {
  if (left_set.empty()) throw PreconditionError("closure: left set must be non-empty");
  std::vector<uint32_t> y = g.Neighbors(LeftVertex(left_set.front()));
  for (std::size_t i = 1; i < left_set.size(); ++i) y = IntersectSorted(y, g.Neighbors(LeftVertex(left_set[i])));
  if (y.empty()) return {Biclique{g.LeftVertices(), {}}, true};
  std::vector<uint32_t> x = g.Neighbors(RightVertex(y.front()));
  for (std::size_t i = 1; i < y.size(); ++i) x = IntersectSorted(x, g.Neighbors(RightVertex(y[i])));
  return {Biclique{std::move(x), std::move(y)}, false};
}

}  // namespace dynbc
