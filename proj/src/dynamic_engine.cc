#include "dynbc/dynamic_engine.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

namespace dynbc {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Biclique WithoutLeft(const Biclique& b, uint32_t id) {
  Biclique out;
  out.left.reserve(b.left.size() - 1);
  for (uint32_t x : b.left) {
    if (x != id) out.left.push_back(x);
  }
  out.right = b.right;
  return out;
}

Biclique WithoutRight(const Biclique& b, uint32_t id) {
  Biclique out;
  out.left = b.left;
  out.right.reserve(b.right.size() - 1);
  for (uint32_t y : b.right) {
    if (y != id) out.right.push_back(y);
  }
  return out;
}

// Splitting without the final maximality filter. Non-maximal members of
// b − batch are never maximal in the host graph either, so the subsumed
// search can skip the quadratic filter.
std::vector<Biclique> SplitCandidates(const Biclique& b, std::span<const Edge> batch, uint32_t s) {
  if (b.left.size() < s || b.right.size() < s) return {};
  std::vector<Biclique> current{b};
  for (const Edge& e : batch) {
    if (!b.ContainsEdge(e)) continue;
    std::set<Biclique> next;
    for (const Biclique& c : current) {
      if (!c.ContainsEdge(e)) {
        next.insert(c);
        continue;
      }
      if (c.left.size() > s) next.insert(WithoutLeft(c, e.left));
      if (c.right.size() > s) next.insert(WithoutRight(c, e.right));
    }
    current.assign(next.begin(), next.end());
  }
  return current;
}

void ValidateRemoval(const BipartiteGraph& g, std::span<const Edge> batch, std::span<const Edge> pending_adds = {}) {
  std::set<Edge> seen;
  std::set<Edge> adds(pending_adds.begin(), pending_adds.end());
  for (const Edge& e : batch) {
    const std::string text = "(L" + std::to_string(e.left) + ", R" + std::to_string(e.right) + ")";
    if (!seen.insert(e).second) throw BatchError("duplicate edge " + text + " in batch", e);
    if (!g.HasEdge(e) && !adds.contains(e)) throw BatchError("edge " + text + " not present", e);
  }
}

void ValidateInsertion(const BipartiteGraph& g, std::span<const Edge> batch) {
  std::set<Edge> seen;
  for (const Edge& e : batch) {
    const std::string text = "(L" + std::to_string(e.left) + ", R" + std::to_string(e.right) + ")";
    if (e.left > kMaxVertexId || e.right > kMaxVertexId) throw BatchError("vertex id out of range in " + text, e);
    if (!seen.insert(e).second) throw BatchError("duplicate edge " + text + " in batch", e);
    if (g.HasEdge(e)) throw BatchError("edge " + text + " already present", e);
  }
}

std::vector<Biclique> Minus(const std::vector<Biclique>& a, const std::vector<Biclique>& b) {
  std::set<Biclique> drop(b.begin(), b.end());
  std::vector<Biclique> out;
  for (const Biclique& x : a) {
    if (!drop.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::size_t ChangeSet::ChangeEdges() const {
  std::size_t total = 0;
  for (const Biclique& b : created) total += b.NumEdges();
  for (const Biclique& b : removed) total += b.NumEdges();
  return total;
}

ChangeSet& ChangeSet::Normalize() {
  std::sort(created.begin(), created.end());
  std::sort(removed.begin(), removed.end());
  return *this;
}

std::size_t NewBc(const BipartiteGraph& updated, std::span<const Edge> batch, SizeThreshold s,
                  const BicliqueSink& sink) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Edge& e = batch[i];
    if (!updated.HasEdge(e)) throw PreconditionError("new_bc: batch edge missing from the updated graph");
    const CompactGraph local = CompactGraph::Induced(updated, updated.Neighbors(RightVertex(e.right)),
                                                     updated.Neighbors(LeftVertex(e.left)));
    MineLmbc(local, s, [&](const Biclique& b) {
      for (std::size_t j = 0; j < i; ++j) {
        if (b.ContainsEdge(batch[j])) return;
      }
      ++count;
      sink(b);
    });
  }
  return count;
}

std::vector<Biclique> SplitBicliques(const Biclique& b, std::span<const Edge> batch, SizeThreshold s) {
  std::vector<Biclique> candidates = SplitCandidates(b, batch, s.value());
  std::vector<Biclique> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = j != i && candidates[j].Contains(candidates[i]);
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  return out;
}

SubsumedFinder::SubsumedFinder(std::span<const Edge> batch, const SignatureStore& store, SizeThreshold s,
                               BicliqueSink sink)
    : batch_(batch.begin(), batch.end()), store_(store), s_(s), sink_(std::move(sink)) {}

void SubsumedFinder::Feed(const Biclique& created) {
  for (Biclique& c : SplitCandidates(created, batch_, s_.value())) {
    if (!store_.Contains(c)) continue;
    const uint64_t key = ComputeSignature(c).value;
    if (!reported_.insert(key).second) continue;
    ++emitted_;
    sink_(c);
  }
}

std::size_t SubBc(std::span<const Edge> batch, const SignatureStore& store, std::span<const Biclique> created,
                  SizeThreshold s, const BicliqueSink& sink) {
  SubsumedFinder finder(batch, store, s, sink);
  for (const Biclique& b : created) finder.Feed(b);
  return finder.emitted();
}

MaintainedState::MaintainedState(BipartiteGraph graph, SizeThreshold s, SignatureMode mode)
    : graph_(std::move(graph)), store_(mode), threshold_(s) {
  MineLmbc(graph_, threshold_, [this](const Biclique& b) { store_.Insert(b); });
}

ChangeSet MaintainedState::AddBatch(std::span<const Edge> batch, PhaseTimings* timings) {
  graph_.AddEdges(batch);
  ChangeSet cs;
  const auto t0 = Clock::now();
  NewBc(graph_, batch, threshold_, [&cs](const Biclique& b) { cs.created.push_back(b); });
  const auto t1 = Clock::now();
  SubBc(batch, store_, cs.created, threshold_, [&cs](const Biclique& b) { cs.removed.push_back(b); });
  if (timings != nullptr) {
    timings->new_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    timings->sub_ms = MillisSince(t1);
  }
  store_.ApplyChangeset(cs.removed, cs.created);
  return cs;
}

void MaintainedState::AddBatchStreaming(std::span<const Edge> batch, const BicliqueSink& on_created,
                                        const BicliqueSink& on_removed, PhaseTimings* timings) {
  graph_.AddEdges(batch);
  // A split candidate never carries a batch edge while every new biclique
  // does, so inserting new bicliques early cannot disturb later lookups.
  SubsumedFinder finder(batch, store_, threshold_, [&](const Biclique& b) {
    store_.Remove(b);
    on_removed(b);
  });
  double sub_ms = 0;
  const auto start = Clock::now();
  NewBc(graph_, batch, threshold_, [&](const Biclique& b) {
    on_created(b);
    const auto t = Clock::now();
    finder.Feed(b);
    sub_ms += MillisSince(t);
    store_.Insert(b);
  });
  if (timings != nullptr) {
    timings->sub_ms = sub_ms;
    timings->new_ms = MillisSince(start) - sub_ms;
  }
}

ChangeSet MaintainedState::RemoveBatch(std::span<const Edge> batch, PhaseTimings* timings) {
  ValidateRemoval(graph_, batch);
  ChangeSet cs;
  const auto t0 = Clock::now();
  // Bicliques lost are exactly those gained when the batch is added back.
  NewBc(graph_, batch, threshold_, [&cs](const Biclique& b) { cs.removed.push_back(b); });
  const auto t1 = Clock::now();
  graph_.RemoveEdges(batch);
  std::set<Biclique> seen;
  for (const Biclique& b : cs.removed) {
    for (Biclique& c : SplitCandidates(b, batch, threshold_.value())) {
      if (!seen.insert(c).second) continue;
      if (IsMaximalBiclique(graph_, c)) cs.created.push_back(std::move(c));
    }
  }
  if (timings != nullptr) {
    timings->new_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    timings->sub_ms = MillisSince(t1);
  }
  store_.ApplyChangeset(cs.removed, cs.created);
  return cs;
}

ChangeSet MaintainedState::ApplyMixed(std::span<const Edge> adds, std::span<const Edge> dels,
                                      PhaseTimings* timings) {
  ValidateInsertion(graph_, adds);
  ValidateRemoval(graph_, dels, adds);
  PhaseTimings add_t, del_t;
  ChangeSet a = AddBatch(adds, &add_t);
  ChangeSet d = RemoveBatch(dels, &del_t);
  if (timings != nullptr) {
    timings->new_ms = add_t.new_ms + del_t.new_ms;
    timings->sub_ms = add_t.sub_ms + del_t.sub_ms;
  }
  ChangeSet net;
  net.created = Minus(a.created, d.removed);
  for (Biclique& b : Minus(d.created, a.removed)) net.created.push_back(std::move(b));
  net.removed = Minus(a.removed, d.created);
  for (Biclique& b : Minus(d.removed, a.created)) net.removed.push_back(std::move(b));
  return net;
}

}  // namespace dynbc
