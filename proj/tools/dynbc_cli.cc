// Command-line driver: maintain maximal bicliques over an edge stream,
// generate test graphs and run the single-edge change-bound experiment.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "dynbc/io.h"
#include "dynbc/oracle.h"
#include "dynbc/session.h"

namespace {

void AddRunOptions(CLI::App* cmd, dynbc::RunConfig& cfg) {
  static const std::map<std::string, dynbc::RunMode> kModes{
      {"add", dynbc::RunMode::kAdd}, {"delete", dynbc::RunMode::kDelete}, {"mixed", dynbc::RunMode::kMixed}};
  static const std::map<std::string, dynbc::SignatureMode> kSignatures{
      {"hash64", dynbc::SignatureMode::kHash64}, {"exact", dynbc::SignatureMode::kExact}};
  cmd->add_option("--graph", cfg.graph_path, "Initial graph, one '<left> <right>' edge per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--stream", cfg.stream_path, "Edge stream, one '<+|-> <left> <right>' record per line")
      ->check(CLI::ExistingFile);
  cmd->add_option("--batch-size", cfg.batch_size, "Records per batch")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--threshold", cfg.threshold, "Minimum vertices per biclique side")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", cfg.mode, "add, delete or mixed")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--signature", cfg.signature, "hash64 or exact")
      ->transform(CLI::CheckedTransformer(kSignatures, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--metrics-out", cfg.metrics_out, "Per-batch metrics CSV");
  cmd->add_option("--changes-out", cfg.changes_out, "Change-set log (N/S lines)");
  cmd->add_option("--seed", cfg.seed, "Seed (reserved for generated inputs)")->capture_default_str();
}

bool WriteFile(const std::string& path, const auto& writer) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return false;
  }
  writer(out);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maintain maximal bicliques of a dynamic bipartite graph"};
  app.require_subcommand(1);

  dynbc::RunConfig run_cfg;
  auto* run = app.add_subcommand("run", "Replay a stream and report the change per batch");
  AddRunOptions(run, run_cfg);
  run->add_flag("--verify", run_cfg.verify, "Check every batch against the full-enumeration baseline");

  dynbc::RunConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Same as 'run --verify'");
  AddRunOptions(verify, verify_cfg);

  auto* gen = app.add_subcommand("gen", "Write generated graphs and streams");
  gen->require_subcommand(1);
  std::string graph_out, stream_out;
  uint32_t k = 3, n = 6, nl = 10, nr = 10;
  double p = 0.3, retain = 0.1;
  std::size_t gen_batch = 100;
  uint64_t seed = 1;
  bool as_deletions = false;

  auto* gen_cp = gen->add_subcommand("cp", "Cocktail-party graph CP(k)");
  gen_cp->add_option("--k", k)->capture_default_str()->check(CLI::PositiveNumber);
  gen_cp->add_option("--graph-out", graph_out)->required();

  auto* gen_ext = gen->add_subcommand("extremal", "Single-edge extremal graph on n vertices and its missing edge");
  gen_ext->add_option("--n", n, "Even, at least 4")->capture_default_str();
  gen_ext->add_option("--graph-out", graph_out)->required();
  gen_ext->add_option("--stream-out", stream_out, "Writes '+ u v' for the missing edge");

  auto* gen_rand = gen->add_subcommand("random", "Random bipartite graph, optionally split into an edge stream");
  gen_rand->add_option("--nl", nl)->capture_default_str();
  gen_rand->add_option("--nr", nr)->capture_default_str();
  gen_rand->add_option("--p", p)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  gen_rand->add_option("--seed", seed)->capture_default_str();
  gen_rand->add_option("--graph-out", graph_out)->required();
  gen_rand->add_option("--stream-out", stream_out, "Edge stream of the edges not retained");
  gen_rand->add_option("--retain", retain, "Fraction of edges kept in the initial graph")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen_rand->add_option("--batch-size", gen_batch)->capture_default_str()->check(CLI::PositiveNumber);
  gen_rand->add_flag("--delete", as_deletions,
                     "Write the full graph and a '-' stream that deletes the non-retained edges");

  auto* bound = app.add_subcommand("bound", "Change size for the single-edge extremal graphs");
  uint32_t n_min = 4, n_max = 12;
  std::string bound_out;
  bound->add_option("--n-min", n_min)->capture_default_str();
  bound->add_option("--n-max", n_max)->capture_default_str();
  bound->add_option("--out", bound_out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? dynbc::kExitOk : dynbc::kExitUsage;
  }

  try {
    if (*run) return dynbc::RunSessionFromFiles(run_cfg, std::cerr);
    if (*verify) {
      verify_cfg.verify = true;
      return dynbc::RunSessionFromFiles(verify_cfg, std::cerr);
    }
    if (*gen_cp) {
      const auto g = dynbc::GenCocktailParty(k);
      return WriteFile(graph_out, [&](std::ostream& o) { dynbc::WriteGraph(o, g); }) ? 0 : dynbc::kExitUsage;
    }
    if (*gen_ext) {
      const auto inst = dynbc::GenSingleEdgeExtremal(n);
      bool ok = WriteFile(graph_out, [&](std::ostream& o) { dynbc::WriteGraph(o, inst.graph); });
      if (ok && !stream_out.empty()) {
        ok = WriteFile(stream_out, [&](std::ostream& o) {
          dynbc::WriteStream(o, {dynbc::EdgeBatch{inst.edge}}, dynbc::StreamOp::kAdd);
        });
      }
      return ok ? 0 : dynbc::kExitUsage;
    }
    if (*gen_rand) {
      const auto g = dynbc::GenRandom(nl, nr, p, seed);
      if (stream_out.empty()) {
        return WriteFile(graph_out, [&](std::ostream& o) { dynbc::WriteGraph(o, g); }) ? 0 : dynbc::kExitUsage;
      }
      const auto stream = dynbc::MakeStream(g, {retain, gen_batch, seed});
      const auto& start = as_deletions ? g : stream.initial;
      bool ok = WriteFile(graph_out, [&](std::ostream& o) { dynbc::WriteGraph(o, start); });
      if (ok) {
        ok = WriteFile(stream_out, [&](std::ostream& o) {
          dynbc::WriteStream(o, stream.batches, as_deletions ? dynbc::StreamOp::kRemove : dynbc::StreamOp::kAdd);
        });
      }
      return ok ? 0 : dynbc::kExitUsage;
    }
    if (*bound) {
      const auto rows = dynbc::BoundExperiment(n_min, n_max);
      if (bound_out.empty()) {
        dynbc::WriteBoundCsv(std::cout, rows);
      } else if (!WriteFile(bound_out, [&](std::ostream& o) { dynbc::WriteBoundCsv(o, rows); })) {
        return dynbc::kExitUsage;
      }
      for (const auto& r : rows) {
        if (!r.pass) return dynbc::kExitMismatch;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dynbc::kExitUsage;
  }
  return 0;
}
