#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynbc/biclique.h"
#include "dynbc/graph.h"
#include "dynbc/signature.h"
#include "dynbc/static_mbe.h"

namespace dynbc {

// Change in the set of maximal bicliques caused by one update. `created`
// holds bicliques that became maximal, `removed` those that stopped being
// maximal (subsumed ones, for an edge insertion).
struct ChangeSet {
  std::vector<Biclique> created;
  std::vector<Biclique> removed;

  bool empty() const { return created.empty() && removed.empty(); }
  std::size_t size() const { return created.size() + removed.size(); }
  // Σ |X|·|Y| over both sides of the change.
  std::size_t ChangeEdges() const;
  // Sorts both lists so that two change sets compare by content.
  ChangeSet& Normalize();

  friend bool operator==(const ChangeSet&, const ChangeSet&) = default;
};

// Wall-clock split of one update between the new-biclique and the
// subsumed-biclique phase.
struct PhaseTimings {
  double new_ms = 0;
  double sub_ms = 0;
};

// Emits every maximal biclique of `updated` (meeting `s`) that contains at
// least one edge of `batch`, each once. `updated` must already contain the
// batch. For each batch edge e_i the miner runs on the subgraph induced by
// the endpoint neighbourhoods, and a result is dropped if it contains an
// earlier batch edge e_j, j < i.
std::size_t NewBc(const BipartiteGraph& updated, std::span<const Edge> batch, SizeThreshold s,
                  const BicliqueSink& sink);

// Maximal bicliques of b − batch with both sides of size >= s, by repeated
// splitting on the batch edges inside b. At most 2^|E(b) ∩ batch| results.
std::vector<Biclique> SplitBicliques(const Biclique& b, std::span<const Edge> batch,
                                     SizeThreshold s = SizeThreshold{1});

// Streaming form of the subsumed-biclique search: feed each new maximal
// biclique once; every split candidate found in `store` is reported once.
class SubsumedFinder {
 public:
  SubsumedFinder(std::span<const Edge> batch, const SignatureStore& store, SizeThreshold s, BicliqueSink sink);

  void Feed(const Biclique& created);
  std::size_t emitted() const { return emitted_; }

 private:
  std::vector<Edge> batch_;
  const SignatureStore& store_;
  SizeThreshold s_;
  BicliqueSink sink_;
  std::unordered_set<uint64_t> reported_;
  std::size_t emitted_ = 0;
};

std::size_t SubBc(std::span<const Edge> batch, const SignatureStore& store, std::span<const Biclique> created,
                  SizeThreshold s, const BicliqueSink& sink);

// A bipartite graph together with the set of its maximal bicliques that meet
// the size threshold. Single writer.
class MaintainedState {
 public:
  // Seeds the store with a full enumeration of `graph`.
  MaintainedState(BipartiteGraph graph, SizeThreshold s, SignatureMode mode = SignatureMode::kHash64);

  // Edge insertion. Throws BatchError (state untouched) on an invalid batch.
  ChangeSet AddBatch(std::span<const Edge> batch, PhaseTimings* timings = nullptr);

  // Same as AddBatch without materialising the change; new and subsumed
  // bicliques go straight to the sinks and the store is updated in place.
  void AddBatchStreaming(std::span<const Edge> batch, const BicliqueSink& on_created,
                         const BicliqueSink& on_removed, PhaseTimings* timings = nullptr);

  // Edge deletion, by reduction to insertion of the same edges into the
  // smaller graph.
  ChangeSet RemoveBatch(std::span<const Edge> batch, PhaseTimings* timings = nullptr);

  // Insertions first, then deletions (validated against the graph after the
  // insertions). Returns the net change: a biclique created by one step and
  // removed by the other cancels out.
  ChangeSet ApplyMixed(std::span<const Edge> adds, std::span<const Edge> dels, PhaseTimings* timings = nullptr);

  const BipartiteGraph& graph() const { return graph_; }
  const SignatureStore& store() const { return store_; }
  SizeThreshold threshold() const { return threshold_; }

 private:
  BipartiteGraph graph_;
  SignatureStore store_;
  SizeThreshold threshold_;
};

}  // namespace dynbc
