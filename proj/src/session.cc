#include "dynbc/session.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include "dynbc/dynamic_engine.h"
#include "dynbc/oracle.h"
#include "dynbc/static_mbe.h"

namespace dynbc {
namespace {

using Clock = std::chrono::steady_clock;

const char* ModeName(RunMode m) {
  switch (m) {
    case RunMode::kAdd: return "add";
    case RunMode::kDelete: return "delete";
    case RunMode::kMixed: return "mixed";
  }
  return "?";
}

// Names the first record of the batch that carries the rejected edge.
std::string DescribeRejected(const std::vector<StreamRecord>& records, std::size_t begin, std::size_t end,
                             const BatchError& err, const LabeledGraph& lg) {
  for (std::size_t i = begin; i < end; ++i) {
    const StreamRecord& r = records[i];
    if (r.edge != err.edge()) continue;
    return "line " + std::to_string(r.line) + ": '" + static_cast<char>(r.op) + ' ' + lg.LeftLabel(r.edge.left) +
           ' ' + lg.RightLabel(r.edge.right) + "' rejected: " + err.what();
  }
  return err.what();
}

void LogChanges(std::ostream& out, std::size_t iteration, const ChangeSet& cs, const LabeledGraph& lg) {
  out << "# batch " << iteration << '\n';
  for (const Biclique& b : cs.created) out << "N " << FormatBiclique(b, lg) << '\n';
  for (const Biclique& b : cs.removed) out << "S " << FormatBiclique(b, lg) << '\n';
}

}  // namespace

void WriteMetricsRow(std::ostream& out, const BatchMetrics& m) {
  out << m.iteration << ',' << m.batch_size << ',' << m.num_new << ',' << m.num_subsumed << ',' << m.change_edges
      << ',' << m.time_new_ms << ',' << m.time_sub_ms << ',' << m.time_total_ms << ',' << m.store_count << ','
      << m.graph_edges << '\n';
}

std::vector<BatchMetrics> RunSession(const RunConfig& cfg, LabeledGraph lg, const std::vector<StreamRecord>& records,
                                     std::ostream* metrics, std::ostream* changes) {
  if (cfg.batch_size < 1) throw PreconditionError("batch size must be at least 1");
  const SizeThreshold s(cfg.threshold);
  MaintainedState state(std::move(lg.graph), s, cfg.signature);
  if (metrics != nullptr) *metrics << kMetricsHeader << '\n';

  std::vector<BatchMetrics> rows;
  for (std::size_t begin = 0, iteration = 1; begin < records.size(); begin += cfg.batch_size, ++iteration) {
    const std::size_t end = std::min(records.size(), begin + cfg.batch_size);
    EdgeBatch adds, dels;
    for (std::size_t i = begin; i < end; ++i) {
      const StreamRecord& r = records[i];
      const bool is_add = r.op == StreamOp::kAdd;
      if ((cfg.mode == RunMode::kAdd && !is_add) || (cfg.mode == RunMode::kDelete && is_add)) {
        throw StreamError("line " + std::to_string(r.line) + ": '" + static_cast<char>(r.op) + "' record in " +
                          ModeName(cfg.mode) + " mode");
      }
      (is_add ? adds : dels).push_back(r.edge);
    }

    BipartiteGraph before;
    if (cfg.verify) before = state.graph();

    PhaseTimings phases;
    ChangeSet cs;
    const auto start = Clock::now();
    try {
      switch (cfg.mode) {
        case RunMode::kAdd: cs = state.AddBatch(adds, &phases); break;
        case RunMode::kDelete: cs = state.RemoveBatch(dels, &phases); break;
        case RunMode::kMixed: cs = state.ApplyMixed(adds, dels, &phases); break;
      }
    } catch (const BatchError& e) {
      throw StreamError(DescribeRejected(records, begin, end, e, lg));
    }
    const double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    if (cfg.verify) {
      const std::vector<Biclique> after_all = MineLmbcAll(state.graph(), s);
      ChangeSet expected = DiffEnumerations(MineLmbcAll(before, s), after_all);
      ChangeSet got = cs;
      got.Normalize();
      if (!(got == expected)) {
        throw VerificationError("batch " + std::to_string(iteration) + ": change set differs from baseline (" +
                                std::to_string(got.created.size()) + "/" + std::to_string(got.removed.size()) +
                                " vs " + std::to_string(expected.created.size()) + "/" +
                                std::to_string(expected.removed.size()) + ")");
      }
      if (after_all.size() != state.store().size()) {
        throw VerificationError("batch " + std::to_string(iteration) + ": store holds " +
                                std::to_string(state.store().size()) + " bicliques, baseline " +
                                std::to_string(after_all.size()));
      }
    }

    BatchMetrics m;
    m.iteration = iteration;
    m.batch_size = end - begin;
    m.num_new = cs.created.size();
    m.num_subsumed = cs.removed.size();
    m.change_edges = cs.ChangeEdges();
    m.time_new_ms = phases.new_ms;
    m.time_sub_ms = phases.sub_ms;
    m.time_total_ms = total_ms;
    m.store_count = state.store().size();
    m.graph_edges = state.graph().NumEdges();
    if (metrics != nullptr) WriteMetricsRow(*metrics, m);
    if (changes != nullptr) LogChanges(*changes, iteration, cs, lg);
    rows.push_back(m);
  }
  return rows;
}

int RunSessionFromFiles(const RunConfig& cfg, std::ostream& err) {
  try {
    std::ifstream graph_in(cfg.graph_path);
    if (!graph_in) {
      err << "cannot open graph file " << cfg.graph_path << '\n';
      return kExitUsage;
    }
    LabeledGraph lg = ParseGraph(graph_in);
    std::vector<StreamRecord> records;
    if (!cfg.stream_path.empty()) {
      std::ifstream stream_in(cfg.stream_path);
      if (!stream_in) {
        err << "cannot open stream file " << cfg.stream_path << '\n';
        return kExitUsage;
      }
      records = ParseStream(stream_in, lg);
    }
    std::ofstream metrics_file, changes_file;
    if (!cfg.metrics_out.empty()) metrics_file.open(cfg.metrics_out);
    if (!cfg.changes_out.empty()) changes_file.open(cfg.changes_out);
    RunSession(cfg, std::move(lg), records, cfg.metrics_out.empty() ? nullptr : &metrics_file,
               cfg.changes_out.empty() ? nullptr : &changes_file);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const StreamError& e) {
    err << "stream inconsistency: " << e.what() << '\n';
    return kExitStream;
  } catch (const VerificationError& e) {
    err << "verification mismatch: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::vector<BoundRow> BoundExperiment(uint32_t n_min, uint32_t n_max) {
  if (n_min % 2 != 0 || n_max % 2 != 0) throw PreconditionError("bound experiment: n must be even");
  if (n_min < 4 || n_max > kBoundMaxVertices || n_min > n_max) {
    throw PreconditionError("bound experiment: n must lie in [4, " + std::to_string(kBoundMaxVertices) + "]");
  }
  std::vector<BoundRow> rows;
  for (uint32_t n = n_min; n <= n_max; n += 2) {
    ExtremalInstance inst = GenSingleEdgeExtremal(n);
    BipartiteGraph after = inst.graph;
    after.AddEdges(std::span<const Edge>(&inst.edge, 1));
    const ChangeSet cs = BruteForceDiff(inst.graph, after, Convention::TrivialInclusive());
    BoundRow row;
    row.n = n;
    row.observed = cs.size();
    row.predicted = std::size_t{3} << ((n - 2) / 2);
    row.pass = row.observed == row.predicted;
    rows.push_back(row);
  }
  return rows;
}

void WriteBoundCsv(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << "n,observed,predicted,pass\n";
  for (const BoundRow& r : rows) {
    out << r.n << ',' << r.observed << ',' << r.predicted << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
}

}  // namespace dynbc
