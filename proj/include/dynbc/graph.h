#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynbc/biclique.h"

namespace dynbc {

// A batch could not be applied. Nothing was changed.
class BatchError : public std::runtime_error {
 public:
  BatchError(const std::string& what, Edge edge) : std::runtime_error(what), edge_(edge) {}
  const Edge& edge() const { return edge_; }

 private:
  Edge edge_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple bipartite graph over dense integer ids. Each side keeps its own id
// space; a vertex exists once it has been registered, either explicitly or as
// the endpoint of an inserted edge, and it is never dropped implicitly.
// Neighbor lists are sorted ascending.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  static BipartiteGraph FromEdges(std::span<const Edge> edges);

  void AddVertex(VertexId v);
  bool HasVertex(VertexId v) const;
  bool HasEdge(const Edge& e) const;

  // All-or-nothing. Throws BatchError on a duplicate inside the batch, on an
  // edge that already exists (AddEdges) or on a missing edge (RemoveEdges).
  void AddEdges(std::span<const Edge> batch);
  void RemoveEdges(std::span<const Edge> batch);

  // Throws PreconditionError for an unknown vertex.
  const std::vector<uint32_t>& Neighbors(VertexId v) const;
  std::size_t Degree(VertexId v) const { return Neighbors(v).size(); }

  std::size_t MaxDegree() const;
  // Exposed as a statistic only.
  std::size_t MinDegree() const;

  std::size_t NumEdges() const { return num_edges_; }
  std::size_t NumLeft() const { return left_.count; }
  std::size_t NumRight() const { return right_.count; }
  std::size_t NumVertices() const { return left_.count + right_.count; }

  // One past the largest id ever registered on that side.
  uint32_t LeftIdBound() const { return static_cast<uint32_t>(left_.present.size()); }
  uint32_t RightIdBound() const { return static_cast<uint32_t>(right_.present.size()); }

  std::vector<uint32_t> LeftVertices() const;
  std::vector<uint32_t> RightVertices() const;

  // Sorted by (left, right).
  std::vector<Edge> Edges() const;

  // Symmetry, side purity and edge count consistency.
  bool CheckInvariants() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b);

 private:
  struct SideData {
    std::vector<uint8_t> present;
    std::vector<std::vector<uint32_t>> adj;
    std::size_t count = 0;

    void Register(uint32_t id);
    bool Has(uint32_t id) const { return id < present.size() && present[id]; }
  };

  SideData& side(Side s) { return s == Side::kLeft ? left_ : right_; }
  const SideData& side(Side s) const { return s == Side::kLeft ? left_ : right_; }

  SideData left_;
  SideData right_;
  std::size_t num_edges_ = 0;
};

// Subgraph induced by left set Γ(v) and right set Γ(u) for e = (u, v) ∈ E(g).
// Throws PreconditionError if e is not an edge of g.
BipartiteGraph EdgeSubgraph(const BipartiteGraph& g, const Edge& e);

// True iff b is a biclique of g that cannot be extended on either side.
// Both sides of b must be non-empty and every vertex must exist in g.
bool IsMaximalBiclique(const BipartiteGraph& g, const Biclique& b);

// Sorted-range helpers shared by the enumerators.
std::vector<uint32_t> IntersectSorted(std::span<const uint32_t> a, std::span<const uint32_t> b);
bool IsSortedSubset(std::span<const uint32_t> sub, std::span<const uint32_t> super);

}  // namespace dynbc
