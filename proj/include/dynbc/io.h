#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dynbc/biclique.h"
#include "dynbc/graph.h"

namespace dynbc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Maps alphanumeric vertex labels of one side to dense ids, in order of first
// appearance.
class LabelTable {
 public:
  uint32_t Intern(std::string_view label);
  std::optional<uint32_t> Find(std::string_view label) const;
  const std::string& Label(uint32_t id) const { return labels_.at(id); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, uint32_t> ids_;
  std::vector<std::string> labels_;
};

// Files use either all-numeric labels, which are taken as the vertex ids
// themselves, or symbolic labels, which are interned per side. The first
// label read decides; mixing the two is a parse error.
enum class LabelScheme { kUnset, kNumeric, kSymbolic };

struct LabeledGraph {
  BipartiteGraph graph;
  LabelScheme scheme = LabelScheme::kUnset;
  LabelTable left;
  LabelTable right;

  std::string LeftLabel(uint32_t id) const;
  std::string RightLabel(uint32_t id) const;
};

enum class StreamOp : char { kAdd = '+', kRemove = '-' };

struct StreamRecord {
  StreamOp op;
  Edge edge;
  std::size_t line;
};

// One edge per line: "<left-label> <right-label>". '#' starts a comment.
// Throws ParseError with the 1-based line number.
LabeledGraph ParseGraph(std::istream& in);

// One record per line: "<op> <left-label> <right-label> [timestamp]" with op
// in {+, -}. The timestamp is ignored; file order is authoritative. Labels
// are interned into the given tables.
std::vector<StreamRecord> ParseStream(std::istream& in, LabeledGraph& labels);

// Writers use the numeric ids as labels.
void WriteGraph(std::ostream& out, const BipartiteGraph& g);
void WriteStream(std::ostream& out, const std::vector<EdgeBatch>& batches, StreamOp op);

// "<l1>,<l2>|<r1>,<r2>" using the label tables.
std::string FormatBiclique(const Biclique& b, const LabeledGraph& labels);

}  // namespace dynbc
