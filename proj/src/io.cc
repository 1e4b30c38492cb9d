#include "dynbc/io.h"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dynbc {
namespace {

bool IsLabel(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-') return false;
  }
  return true;
}

std::vector<std::string> Tokens(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

bool IsNumeric(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

uint32_t Resolve(LabeledGraph& lg, Side side, std::string_view label, std::size_t line_no) {
  if (!IsLabel(label)) throw ParseError("malformed vertex label '" + std::string(label) + "'", line_no);
  const LabelScheme scheme = IsNumeric(label) ? LabelScheme::kNumeric : LabelScheme::kSymbolic;
  if (lg.scheme == LabelScheme::kUnset) lg.scheme = scheme;
  if (lg.scheme != scheme) throw ParseError("mixes numeric and symbolic vertex labels", line_no);
  if (scheme == LabelScheme::kSymbolic) return (side == Side::kLeft ? lg.left : lg.right).Intern(label);
  uint64_t id = 0;
  const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), id);
  if (ec != std::errc{} || ptr != label.data() + label.size() || id > kMaxVertexId) {
    throw ParseError("vertex id '" + std::string(label) + "' out of range", line_no);
  }
  return static_cast<uint32_t>(id);
}

}  // namespace

std::string LabeledGraph::LeftLabel(uint32_t id) const {
  return scheme == LabelScheme::kSymbolic ? left.Label(id) : std::to_string(id);
}

std::string LabeledGraph::RightLabel(uint32_t id) const {
  return scheme == LabelScheme::kSymbolic ? right.Label(id) : std::to_string(id);
}

uint32_t LabelTable::Intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<uint32_t>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<uint32_t> LabelTable::Find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

LabeledGraph ParseGraph(std::istream& in) {
  LabeledGraph lg;
  std::vector<Edge> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tok = Tokens(raw);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError("expected '<left> <right>'", line_no);
    const Edge e{Resolve(lg, Side::kLeft, tok[0], line_no), Resolve(lg, Side::kRight, tok[1], line_no)};
    lg.graph.AddVertex(LeftVertex(e.left));
    lg.graph.AddVertex(RightVertex(e.right));
    if (lg.graph.HasEdge(e)) throw ParseError("duplicate edge", line_no);
    lg.graph.AddEdges(std::span<const Edge>(&e, 1));
  }
  return lg;
}

std::vector<StreamRecord> ParseStream(std::istream& in, LabeledGraph& labels) {
  std::vector<StreamRecord> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tok = Tokens(raw);
    if (tok.empty()) continue;
    if (tok.size() != 3 && tok.size() != 4) throw ParseError("expected '<op> <left> <right> [timestamp]'", line_no);
    if (tok[0] != "+" && tok[0] != "-") throw ParseError("op must be '+' or '-'", line_no);
    const StreamOp op = tok[0] == "+" ? StreamOp::kAdd : StreamOp::kRemove;
    const Edge e{Resolve(labels, Side::kLeft, tok[1], line_no), Resolve(labels, Side::kRight, tok[2], line_no)};
    out.push_back({op, e, line_no});
  }
  return out;
}

void WriteGraph(std::ostream& out, const BipartiteGraph& g) {
  for (const Edge& e : g.Edges()) out << e.left << ' ' << e.right << '\n';
}

void WriteStream(std::ostream& out, const std::vector<EdgeBatch>& batches, StreamOp op) {
  for (const EdgeBatch& batch : batches) {
    for (const Edge& e : batch) out << static_cast<char>(op) << ' ' << e.left << ' ' << e.right << '\n';
  }
}

std::string FormatBiclique(const Biclique& b, const LabeledGraph& labels) {
  std::string out;
  for (std::size_t i = 0; i < b.left.size(); ++i) {
    if (i > 0) out += ',';
    out += labels.LeftLabel(b.left[i]);
  }
  out += '|';
  for (std::size_t i = 0; i < b.right.size(); ++i) {
    if (i > 0) out += ',';
    out += labels.RightLabel(b.right[i]);
  }
  return out;
}

}  // namespace dynbc
