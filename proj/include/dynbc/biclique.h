#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dynbc {

// Largest id a vertex may carry on either side. Keeping ids below 2^31 leaves
// the top bit of every big-endian id encoding clear, which the canonical
// byte form relies on to place its side separator.
inline constexpr uint32_t kMaxVertexId = (1u << 31) - 1;

enum class Side : uint8_t { kLeft, kRight };

struct VertexId {
  Side side = Side::kLeft;
  uint32_t id = 0;

  auto operator<=>(const VertexId&) const = default;
};

inline constexpr VertexId LeftVertex(uint32_t id) { return {Side::kLeft, id}; }
inline constexpr VertexId RightVertex(uint32_t id) { return {Side::kRight, id}; }

// An edge always runs from the left side to the right side.
struct Edge {
  uint32_t left = 0;
  uint32_t right = 0;

  auto operator<=>(const Edge&) const = default;
};

using EdgeBatch = std::vector<Edge>;

// A pair (X, Y) of left and right vertex ids. Both sides are kept sorted and
// duplicate-free; construct through Make() when the input is not already in
// that form.
struct Biclique {
  std::vector<uint32_t> left;
  std::vector<uint32_t> right;

  static Biclique Make(std::vector<uint32_t> left, std::vector<uint32_t> right);

  bool ContainsLeft(uint32_t id) const;
  bool ContainsRight(uint32_t id) const;
  bool ContainsEdge(const Edge& e) const { return ContainsLeft(e.left) && ContainsRight(e.right); }

  // Both sides of `other` are subsets of the corresponding sides of *this.
  bool Contains(const Biclique& other) const;

  bool HasEmptySide() const { return left.empty() || right.empty(); }
  std::size_t NumEdges() const { return left.size() * right.size(); }

  auto operator<=>(const Biclique&) const = default;
};

// "({0,1},{4})"
std::string ToString(const Biclique& b);

}  // namespace dynbc
