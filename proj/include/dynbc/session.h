#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynbc/io.h"
#include "dynbc/signature.h"

namespace dynbc {

// Process exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitStream = 3;
inline constexpr int kExitMismatch = 4;

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RunMode { kAdd, kDelete, kMixed };

struct RunConfig {
  std::string graph_path;
  std::string stream_path;
  std::size_t batch_size = 100;
  uint32_t threshold = 1;
  RunMode mode = RunMode::kAdd;
  SignatureMode signature = SignatureMode::kHash64;
  std::string metrics_out;  // empty: no metrics file
  std::string changes_out;  // empty: no change log
  bool verify = false;
  uint64_t seed = 1;
};

struct BatchMetrics {
  std::size_t iteration = 0;
  std::size_t batch_size = 0;
  std::size_t num_new = 0;
  std::size_t num_subsumed = 0;
  std::size_t change_edges = 0;
  double time_new_ms = 0;
  double time_sub_ms = 0;
  double time_total_ms = 0;
  std::size_t store_count = 0;
  std::size_t graph_edges = 0;
};

inline constexpr const char* kMetricsHeader =
    "iteration,batch_size,num_new,num_subsumed,change_edges,time_new_ms,time_sub_ms,time_total_ms,store_count,"
    "graph_edges";

void WriteMetricsRow(std::ostream& out, const BatchMetrics& m);

// Replays `records` onto `graph` in batches of cfg.batch_size. Metrics rows
// go to `metrics` and change-set lines ("N <biclique>" / "S <biclique>") to
// `changes` when those are non-null. In delete mode a batch's lost bicliques
// are logged as S and its newly maximal ones as N.
// Throws StreamError on an inconsistent record and VerificationError when
// cfg.verify is set and the baseline disagrees.
std::vector<BatchMetrics> RunSession(const RunConfig& cfg, LabeledGraph graph, const std::vector<StreamRecord>& records,
                                     std::ostream* metrics, std::ostream* changes);

// File-level driver: reads cfg.graph_path / cfg.stream_path, writes the
// configured outputs and maps failures to the exit codes above.
int RunSessionFromFiles(const RunConfig& cfg, std::ostream& err);

struct BoundRow {
  uint32_t n = 0;
  std::size_t observed = 0;
  std::size_t predicted = 0;
  bool pass = false;
};

inline constexpr uint32_t kBoundMaxVertices = 14;

// For every even n in [n_min, n_max], the size of the change caused by adding
// the missing edge of the single-edge extremal graph, counted with trivial
// bicliques, against 3·2^((n-2)/2). Throws PreconditionError on an odd
// bound or n outside [4, kBoundMaxVertices].
std::vector<BoundRow> BoundExperiment(uint32_t n_min, uint32_t n_max);
void WriteBoundCsv(std::ostream& out, const std::vector<BoundRow>& rows);

}  // namespace dynbc
