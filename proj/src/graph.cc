#include "dynbc/graph.h"

#include <algorithm>
#include <set>

namespace dynbc {
namespace {

std::string EdgeText(const Edge& e) {
  return "(L" + std::to_string(e.left) + ", R" + std::to_string(e.right) + ")";
}

void CheckId(uint32_t id) {
  if (id > kMaxVertexId) throw PreconditionError("vertex id " + std::to_string(id) + " out of range");
}

void InsertSorted(std::vector<uint32_t>& v, uint32_t x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void EraseSorted(std::vector<uint32_t>& v, uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

void BipartiteGraph::SideData::Register(uint32_t id) {
  CheckId(id);
  if (id >= present.size()) {
    present.resize(id + 1, 0);
    adj.resize(id + 1);
  }
  if (!present[id]) {
    present[id] = 1;
    ++count;
  }
}

BipartiteGraph BipartiteGraph::FromEdges(std::span<const Edge> edges) {
  BipartiteGraph g;
  g.AddEdges(edges);
  return g;
}

void BipartiteGraph::AddVertex(VertexId v) { side(v.side).Register(v.id); }

bool BipartiteGraph::HasVertex(VertexId v) const { return side(v.side).Has(v.id); }

bool BipartiteGraph::HasEdge(const Edge& e) const {
  if (!left_.Has(e.left) || !right_.Has(e.right)) return false;
  const auto& a = left_.adj[e.left];
  return std::binary_search(a.begin(), a.end(), e.right);
}

void BipartiteGraph::AddEdges(std::span<const Edge> batch) {
  std::set<Edge> seen;
  for (const Edge& e : batch) {
    if (e.left > kMaxVertexId || e.right > kMaxVertexId) {
      throw BatchError("vertex id out of range in edge " + EdgeText(e), e);
    }
    if (!seen.insert(e).second) throw BatchError("duplicate edge " + EdgeText(e) + " in batch", e);
    if (HasEdge(e)) throw BatchError("edge " + EdgeText(e) + " already present", e);
  }
  for (const Edge& e : batch) {
    left_.Register(e.left);
    right_.Register(e.right);
    InsertSorted(left_.adj[e.left], e.right);
    InsertSorted(right_.adj[e.right], e.left);
  }
  num_edges_ += batch.size();
}

void BipartiteGraph::RemoveEdges(std::span<const Edge> batch) {
  std::set<Edge> seen;
  for (const Edge& e : batch) {
    if (!seen.insert(e).second) throw BatchError("duplicate edge " + EdgeText(e) + " in batch", e);
    if (!HasEdge(e)) throw BatchError("edge " + EdgeText(e) + " not present", e);
  }
  for (const Edge& e : batch) {
    EraseSorted(left_.adj[e.left], e.right);
    EraseSorted(right_.adj[e.right], e.left);
  }
  num_edges_ -= batch.size();
}

const std::vector<uint32_t>& BipartiteGraph::Neighbors(VertexId v) const {
  const SideData& s = side(v.side);
  if (!s.Has(v.id)) {
    throw PreconditionError(std::string("unknown ") + (v.side == Side::kLeft ? "left" : "right") +
                            " vertex " + std::to_string(v.id));
  }
  return s.adj[v.id];
}

std::size_t BipartiteGraph::MaxDegree() const {
  std::size_t best = 0;
  for (const SideData* s : {&left_, &right_}) {
    for (const auto& a : s->adj) best = std::max(best, a.size());
  }
  return best;
}

std::size_t BipartiteGraph::MinDegree() const {
  std::size_t best = 0;
  bool any = false;
  for (const SideData* s : {&left_, &right_}) {
    for (std::size_t i = 0; i < s->present.size(); ++i) {
      if (!s->present[i]) continue;
      best = any ? std::min(best, s->adj[i].size()) : s->adj[i].size();
      any = true;
    }
  }
  return best;
}

std::vector<uint32_t> BipartiteGraph::LeftVertices() const {
  std::vector<uint32_t> out;
  out.reserve(left_.count);
  for (uint32_t i = 0; i < left_.present.size(); ++i) {
    if (left_.present[i]) out.push_back(i);
  }
  return out;
}

std::vector<uint32_t> BipartiteGraph::RightVertices() const {
  std::vector<uint32_t> out;
  out.reserve(right_.count);
  for (uint32_t i = 0; i < right_.present.size(); ++i) {
    if (right_.present[i]) out.push_back(i);
  }
  return out;
}

std::vector<Edge> BipartiteGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (uint32_t l = 0; l < left_.adj.size(); ++l) {
    for (uint32_t r : left_.adj[l]) out.push_back({l, r});
  }
  return out;
}

bool BipartiteGraph::CheckInvariants() const {
  std::size_t total = 0;
  for (uint32_t l = 0; l < left_.adj.size(); ++l) {
    const auto& a = left_.adj[l];
    if (!a.empty() && !left_.present[l]) return false;
    if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    for (uint32_t r : a) {
      if (!right_.Has(r)) return false;
      const auto& back = right_.adj[r];
      if (!std::binary_search(back.begin(), back.end(), l)) return false;
    }
    total += a.size();
  }
  std::size_t total_right = 0;
  for (uint32_t r = 0; r < right_.adj.size(); ++r) {
    const auto& a = right_.adj[r];
    if (!a.empty() && !right_.present[r]) return false;
    if (!std::is_sorted(a.begin(), a.end())) return false;
    for (uint32_t l : a) {
      if (!left_.Has(l)) return false;
    }
    total_right += a.size();
  }
  return total == total_right && total == num_edges_;
}

bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
  return a.num_edges_ == b.num_edges_ && a.LeftVertices() == b.LeftVertices() &&
         a.RightVertices() == b.RightVertices() && a.Edges() == b.Edges();
}

BipartiteGraph EdgeSubgraph(const BipartiteGraph& g, const Edge& e) {
  if (!g.HasEdge(e)) throw PreconditionError("edge_subgraph: edge is not in the graph");
  const auto& left_set = g.Neighbors(RightVertex(e.right));
  const auto& right_set = g.Neighbors(LeftVertex(e.left));
  BipartiteGraph sub;
  for (uint32_t l : left_set) sub.AddVertex(LeftVertex(l));
  for (uint32_t r : right_set) sub.AddVertex(RightVertex(r));
  std::vector<Edge> edges;
  for (uint32_t l : left_set) {
    for (uint32_t r : IntersectSorted(g.Neighbors(LeftVertex(l)), right_set)) edges.push_back({l, r});
  }
  sub.AddEdges(edges);
  return sub;
}

bool IsMaximalBiclique(const BipartiteGraph& g, const Biclique& b) {
  if (b.HasEmptySide()) throw PreconditionError("is_maximal_biclique: both sides must be non-empty");
  for (uint32_t l : b.left) {
    if (!g.HasVertex(LeftVertex(l))) throw PreconditionError("is_maximal_biclique: unknown left vertex");
  }
  for (uint32_t r : b.right) {
    if (!g.HasVertex(RightVertex(r))) throw PreconditionError("is_maximal_biclique: unknown right vertex");
  }
  // Common neighbourhood of X must be exactly Y and vice versa; this also
  // covers X×Y ⊆ E.
  std::vector<uint32_t> common = g.Neighbors(LeftVertex(b.left.front()));
  for (std::size_t i = 1; i < b.left.size() && common.size() >= b.right.size(); ++i) {
    common = IntersectSorted(common, g.Neighbors(LeftVertex(b.left[i])));
  }
  if (common != b.right) return false;
  common = g.Neighbors(RightVertex(b.right.front()));
  for (std::size_t i = 1; i < b.right.size() && common.size() >= b.left.size(); ++i) {
    common = IntersectSorted(common, g.Neighbors(RightVertex(b.right[i])));
  }
  return common == b.left;
}

std::vector<uint32_t> IntersectSorted(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  std::vector<uint32_t> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool IsSortedSubset(std::span<const uint32_t> sub, std::span<const uint32_t> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace dynbc
