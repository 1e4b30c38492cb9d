// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpus.h"
#include "dynbc/dynamic_engine.h"
#include "dynbc/oracle.h"
#include "dynbc/signature.h"
#include "dynbc/static_mbe.h"

namespace dynbc {
namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kCorpusSize = 1000;

double Seconds(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }
double Millis(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}
double G(double n) { return std::pow(2.0, n / 2.0); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<testing::Instance> Corpus() {
  std::vector<testing::Instance> out;
  for (uint64_t seed = 1; seed <= kCorpusSize; ++seed) out.push_back(testing::MakeInstance(seed, 7, 6));
  return out;
}

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// dynamic == baseline == brute force on every corpus instance.
Outcome OracleEquivalence(const std::vector<testing::Instance>& corpus) {
  const auto start = Clock::now();
  std::size_t mismatches = 0, changes = 0, nonempty = 0;
  for (const auto& inst : corpus) {
    MaintainedState state(inst.graph, SizeThreshold{inst.threshold});
    ChangeSet dyn = state.AddBatch(inst.batch);
    dyn.Normalize();
    const ChangeSet base = BaselineBc(inst.graph, inst.batch, SizeThreshold{inst.threshold});
    BipartiteGraph after = inst.graph;
    after.AddEdges(inst.batch);
    const ChangeSet brute = BruteForceDiff(inst.graph, after, Convention::NonTrivial(inst.threshold));
    if (!(dyn == base) || !(dyn == brute)) {
      ++mismatches;
      std::printf("  mismatch at seed %llu\n", static_cast<unsigned long long>(inst.seed));
    }
    changes += dyn.size();
    nonempty += !dyn.empty();
  }
  const double secs = Seconds(start);
  return {mismatches == 0 && secs < 60.0,
          Fmt("%zu instances, %zu with a non-empty change, %zu bicliques changed, %zu mismatches, %.2f s",
              corpus.size(), nonempty, changes, mismatches, secs)};
}

Outcome BicliqueCountCeiling() {
  bool pass = true;
  for (uint32_t k = 2; k <= 8; ++k) {
    pass &= BruteForceBc(GenCocktailParty(k), Convention::TrivialInclusive()).size() == (std::size_t{1} << k);
  }
  Lcg rng(2024);
  std::size_t violations = 0;
  double tightest = 0;
  for (uint64_t i = 0; i < 300; ++i) {
    const uint32_t nl = 1 + rng.NextBelow(8);
    const uint32_t nr = 1 + rng.NextBelow(8);
    const double p = 0.1 + 0.8 * rng.NextDouble();
    const auto count = BruteForceBc(GenRandom(nl, nr, p, 5000 + i), Convention::TrivialInclusive()).size();
    const double ratio = static_cast<double>(count) / G(nl + nr);
    tightest = std::max(tightest, ratio);
    violations += ratio > 1.0 + 1e-12;
  }
  pass &= violations == 0;
  return {pass, Fmt("CP(k) = 2^k for k=2..8; 300 random graphs (n <= 16): %zu above 2^(n/2), max ratio %.3f",
                    violations, tightest)};
}

// Largest single-edge change over every bipartite graph with n vertices.
std::size_t MaxSingleEdgeChange(uint32_t n) {
  std::size_t best = 0;
  const Convention c = Convention::TrivialInclusive();
  for (uint32_t nl = 1; nl < n; ++nl) {
    const uint32_t nr = n - nl;
    const uint32_t cells = nl * nr;
    std::vector<uint32_t> adj(nl);
    for (uint64_t mask = 0; mask < (uint64_t{1} << cells); ++mask) {
      for (uint32_t l = 0; l < nl; ++l) adj[l] = static_cast<uint32_t>(mask >> (l * nr)) & ((1u << nr) - 1);
      const auto before = ClosedPairMasks(adj, nr, c);
      for (uint32_t cell = 0; cell < cells; ++cell) {
        if (mask >> cell & 1u) continue;
        const uint32_t l = cell / nr, r = cell % nr;
        adj[l] |= 1u << r;
        const auto after = ClosedPairMasks(adj, nr, c);
        adj[l] &= ~(1u << r);
        std::vector<std::pair<uint32_t, uint32_t>> diff;
        std::set_symmetric_difference(before.begin(), before.end(), after.begin(), after.end(),
                                      std::back_inserter(diff));
        best = std::max(best, diff.size());
      }
    }
  }
  return best;
}

Outcome SingleEdgeBound() {
  bool pass = true;
  std::string detail = "extremal n=4..12:";
  for (uint32_t n = 4; n <= 12; n += 2) {
    const auto inst = GenSingleEdgeExtremal(n);
    BipartiteGraph after = inst.graph;
    after.AddEdges(std::vector<Edge>{inst.edge});
    const std::size_t got = BruteForceDiff(inst.graph, after, Convention::TrivialInclusive()).size();
    const std::size_t want = std::size_t{3} << ((n - 2) / 2);
    pass &= got == want;
    detail += Fmt(" %zu/%zu", got, want);
  }
  detail += "; exhaustive max over all graphs n=2..8:";
  for (uint32_t n = 2; n <= 8; ++n) {
    const std::size_t worst = MaxSingleEdgeChange(n);
    const double bound = 3.0 * G(n - 2.0);
    pass &= static_cast<double>(worst) <= bound + 1e-9;
    detail += Fmt(" %zu<=%.2f", worst, bound);
  }
  return {pass, detail};
}

Outcome Structure(const std::vector<testing::Instance>& corpus) {
  std::size_t bad_new = 0, bad_sub = 0, bad_split = 0, splits = 0;
  for (const auto& inst : corpus) {
    MaintainedState state(inst.graph, SizeThreshold{inst.threshold});
    const ChangeSet cs = state.AddBatch(inst.batch);
    for (const Biclique& b : cs.created) {
      std::size_t inside = 0;
      for (const Edge& e : inst.batch) inside += b.ContainsEdge(e);
      bad_new += inside == 0;
      const auto parts = SplitBicliques(b, inst.batch, SizeThreshold{inst.threshold});
      bad_split += parts.size() > (std::size_t{1} << inside);
      ++splits;
    }
    for (const Biclique& old : cs.removed) {
      const bool covered = std::any_of(cs.created.begin(), cs.created.end(),
                                       [&](const Biclique& b) { return b != old && b.Contains(old); });
      bad_sub += !covered;
    }
  }
  return {bad_new + bad_sub + bad_split == 0,
          Fmt("new without a batch edge: %zu; subsumed not inside a new one: %zu; split bound exceeded: %zu of %zu",
              bad_new, bad_sub, bad_split, splits)};
}

Outcome DecrementalInverse(const std::vector<testing::Instance>& corpus) {
  std::size_t failures = 0;
  for (const auto& inst : corpus) {
    for (SignatureMode mode : {SignatureMode::kHash64, SignatureMode::kExact}) {
      MaintainedState state(inst.graph, SizeThreshold{inst.threshold}, mode);
      const SignatureStore before = state.store();
      ChangeSet up = state.AddBatch(inst.batch);
      ChangeSet down = state.RemoveBatch(inst.batch);
      up.Normalize();
      down.Normalize();
      const bool ok = state.graph().Edges() == inst.graph.Edges() && state.store() == before &&
                      up.created == down.removed && up.removed == down.created;
      failures += !ok;
    }
  }
  return {failures == 0, Fmt("%zu add/remove round trips (both store modes), %zu not restored", 2 * corpus.size(),
                             failures)};
}

struct StreamRun {
  std::vector<double> dynamic_ms;
  std::vector<double> baseline_ms;
  std::size_t emissions = 0;
  std::size_t mismatches = 0;
};

EdgeStream BenchmarkStream(BipartiteGraph* full) {
  *full = GenRandom(1000, 1000, 0.01, 7);
  return MakeStream(*full, {0.1, 100, 7});
}

// Skewed and denser than the benchmark graph so that several thresholds see changes.
Outcome ThresholdMonotone() {
  const BipartiteGraph full = GenRandom(100, 500, 0.205, 7);
  const EdgeStream stream = MakeStream(full, {0.1, 100, 7});
  std::vector<std::size_t> totals;
  std::string detail = Fmt("%zu edges, %zu batches; emissions s=1..6:", full.NumEdges(), stream.batches.size());
  for (uint32_t s = 1; s <= 6; ++s) {
    MaintainedState state(stream.initial, SizeThreshold{s});
    std::size_t total = 0;
    for (const EdgeBatch& batch : stream.batches) total += state.AddBatch(batch).size();
    totals.push_back(total);
    detail += Fmt(" %zu", total);
  }
  const bool monotone = std::is_sorted(totals.rbegin(), totals.rend());
  return {monotone && totals.front() > 0 && full.NumEdges() >= 10000, detail};
}

Outcome ChangeSensitivity() {
  BipartiteGraph full;
  const EdgeStream stream = BenchmarkStream(&full);
  const SizeThreshold s{1};
  MaintainedState state(stream.initial, s);
  std::vector<double> speedups;
  std::size_t wins = 0, mismatches = 0;
  double dyn_total = 0, base_total = 0;
  for (const EdgeBatch& batch : stream.batches) {
    const BipartiteGraph before = state.graph();
    const auto t0 = Clock::now();
    ChangeSet dyn = state.AddBatch(batch);
    const auto t1 = Clock::now();
    const ChangeSet base = BaselineBc(before, batch, s);
    const auto t2 = Clock::now();
    const double d = Millis(t0, t1), b = Millis(t1, t2);
    dyn_total += d;
    base_total += b;
    wins += d <= b;
    speedups.push_back(b / std::max(d, 1e-6));
    mismatches += !(dyn.Normalize() == base);
  }
  std::sort(speedups.begin(), speedups.end());
  const double fraction = static_cast<double>(wins) / static_cast<double>(stream.batches.size());
  const double median = speedups[speedups.size() / 2];
  return {fraction >= 0.95 && mismatches == 0 && full.NumEdges() >= 10000,
          Fmt("%zu edges, batch 100: dynamic faster on %zu/%zu batches (%.1f%%), median speedup %.1fx, "
              "totals %.0f ms vs %.0f ms, %zu output mismatches",
              full.NumEdges(), wins, stream.batches.size(), 100.0 * fraction, median, dyn_total, base_total,
              mismatches)};
}

// Collision audit: distinct canonical forms must have distinct signatures.
class Audit {
 public:
  void Add(const Biclique& b) {
    const std::string form = CanonicalForm(b);
    const auto [it, inserted] = by_sig_.try_emplace(ComputeSignature(b).value, form);
    collisions_ += !inserted && it->second != form;
  }
  std::size_t size() const { return by_sig_.size(); }
  std::size_t collisions() const { return collisions_; }

 private:
  std::unordered_map<uint64_t, std::string> by_sig_;
  std::size_t collisions_ = 0;
};

Outcome SignatureSoundness(const std::vector<testing::Instance>& corpus) {
  Audit audit;
  std::size_t disagreements = 0;
  auto lockstep = [&](const BipartiteGraph& g, const std::vector<EdgeBatch>& batches, uint32_t threshold) {
    MaintainedState hashed(g, SizeThreshold{threshold}, SignatureMode::kHash64);
    MaintainedState exact(g, SizeThreshold{threshold}, SignatureMode::kExact);
    for (const auto& b : MineLmbcAll(g, SizeThreshold{threshold})) audit.Add(b);
    for (const EdgeBatch& batch : batches) {
      ChangeSet h = hashed.AddBatch(batch);
      ChangeSet e = exact.AddBatch(batch);
      disagreements += !(h.Normalize() == e.Normalize()) || hashed.store().size() != exact.store().size();
      for (const Biclique& b : e.created) {
        audit.Add(b);
        for (const Biclique& part : SplitBicliques(b, batch, SizeThreshold{threshold})) {
          audit.Add(part);
          disagreements += hashed.store().Contains(part) != exact.store().Contains(part);
        }
      }
    }
  };
  for (const auto& inst : corpus) lockstep(inst.graph, {inst.batch}, inst.threshold);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const BipartiteGraph g = GenRandom(40, 30, 0.15, 900 + seed);
    const EdgeStream stream = MakeStream(g, {0.1, 10, seed});
    lockstep(stream.initial, stream.batches, 1 + seed % 2);
  }
  for (uint64_t seed = 1; seed <= 500; ++seed) {
    const uint32_t nl = 3 + seed % 9;
    for (const auto& b : BruteForceBc(GenRandom(nl, 14 - nl, 0.5, 7000 + seed), Convention::NonTrivial(1))) {
      audit.Add(b);
    }
  }
  return {disagreements == 0 && audit.collisions() == 0,
          Fmt("hash64 vs exact disagreements: %zu; %zu distinct bicliques audited, %zu signature collisions",
              disagreements, audit.size(), audit.collisions())};
}

}  // namespace
}  // namespace dynbc

int main() {
  using namespace dynbc;
  const auto corpus = Corpus();
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", [&] { return OracleEquivalence(corpus); }},
      {2, "cocktail-party count and 2^(n/2) ceiling", BicliqueCountCeiling},
      {3, "single-edge change bound 3*2^((n-2)/2)", SingleEdgeBound},
      {4, "structural properties of new/subsumed/split", [&] { return Structure(corpus); }},
      {5, "decremental inverse", [&] { return DecrementalInverse(corpus); }},
      {6, "threshold monotonicity", ThresholdMonotone},
      {7, "change-sensitive speed vs full re-enumeration", ChangeSensitivity},
      {8, "signature soundness", [&] { return SignatureSoundness(corpus); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                Seconds(start));
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
