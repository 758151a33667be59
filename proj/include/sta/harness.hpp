#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sta/benchmarks.hpp"
#include "sta/discrete.hpp"
#include "sta/solver.hpp"

namespace sta {
namespace harness {

struct ExperimentSpec {
  std::string function;
  std::size_t dimension = 10;
  int max_iterations = 1000;
  int trials = 50;
  std::uint64_t base_seed = 0;
  SearchParams params;  // se/alpha/beta/gamma overrides; seed is per trial
  int jobs = 1;
};

struct TrialStats {
  double best = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;  // sample std (n-1 denominator), 0 for a single trial
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  double best_value = 0.0;
  long long evaluations = 0;
  double ms = 0.0;  // wall time, informational only
  std::vector<std::pair<int, double>> history;  // kept when tracing
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<TrialRecord> records;  // in trial-index order
  TrialStats stats;
};

// Minimum, mean, sample standard deviation. Throws on an empty list.
TrialStats compute_stats(const std::vector<double>& values);

// Runs spec.trials independent solves with seeds base_seed + t. Trials may
// run on up to spec.jobs threads; aggregation is in trial order either way.
// keep_history retains per-trial convergence traces for emit_traces.
ExperimentResult run_experiment(const ExperimentSpec& spec,
                                bool keep_history = false);

// Paper protocol defaults: dims {10, 20, 30} paired with iteration budgets
// {1000, 1500, 2000}.
const std::vector<std::pair<std::size_t, int>>& default_protocol();

// Plain text: first line n, then n lines "id x y" (1-based ids). Also accepts
// TSPLIB-style files with a NODE_COORD_SECTION (EUC_2D coordinates). Parse
// errors carry the offending line number.
discrete::TspInstance parse_instance(const std::filesystem::path& path);

// Inverse of parse_instance's plain format.
void write_instance(const discrete::TspInstance& inst,
                    const std::filesystem::path& path);

discrete::TspInstance generate_instance(std::size_t n, std::uint64_t seed);

// CSV with header function,dim,trial,seed,best_value,evaluations,ms.
void emit_csv(const ExperimentResult& result, const std::filesystem::path& path);

// JSON object with the spec echo, per-trial array, and the stats block.
void emit_json(const ExperimentResult& result, const std::filesystem::path& path);

// One CSV per trial (iteration,best_value) under dir; requires history.
void emit_traces(const ExperimentResult& result,
                 const std::filesystem::path& dir);

}  // namespace harness
}  // namespace sta
