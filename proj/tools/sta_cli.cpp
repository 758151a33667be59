// Command-line experiment runner for the state transition optimizer.
//
//   sta bench --function sphere --dim 10 --iterations 1000 --trials 50 \
//       --seed 42 --se 32 --out results.csv [--trace dir/] [--json results.json]
//   sta tsp --instance cities.txt --iterations 2000 --trials 10 --seed 7 \
//       --out tour.json
//   sta gen-instance --n 16 --seed 1 --out cities.txt

#include <fstream>
#include <iostream>
#include <limits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sta/harness.hpp"

namespace {

int run_bench(const sta::harness::ExperimentSpec& spec, const std::string& out,
              const std::string& json_out, const std::string& trace_dir) {
  const bool keep_history = !trace_dir.empty();
  const auto result = sta::harness::run_experiment(spec, keep_history);
  if (!out.empty()) sta::harness::emit_csv(result, out);
  if (!json_out.empty()) sta::harness::emit_json(result, json_out);
  if (keep_history) sta::harness::emit_traces(result, trace_dir);
  std::cout << spec.function << " dim=" << spec.dimension
            << " iters=" << spec.max_iterations << " trials=" << spec.trials
            << "  best=" << result.stats.best << " mean=" << result.stats.mean
            << " std=" << result.stats.std_dev << "\n";
  return 0;
}

int run_tsp(const std::string& instance_path, sta::SearchParams params,
            int trials, std::uint64_t base_seed, const std::string& out) {
  const auto inst = sta::harness::parse_instance(instance_path);

  nlohmann::json j;
  j["instance"] = instance_path;
  j["cities"] = inst.size();
  j["trials"] = nlohmann::json::array();

  sta::discrete::DiscreteSolveResult best;
  best.best_value = std::numeric_limits<double>::infinity();
  std::vector<double> finals;
  for (int t = 0; t < trials; ++t) {
    params.seed = base_seed + static_cast<std::uint64_t>(t);
    auto r = sta::discrete::solve_discrete(inst, params);
    finals.push_back(r.best_value);
    j["trials"].push_back({{"trial", t},
                           {"seed", params.seed},
                           {"length", r.best_value},
                           {"evaluations", r.evaluations}});
    if (r.best_value < best.best_value) best = std::move(r);
  }

  // Display form: 1-based ids with the start city repeated (closed tour).
  std::vector<std::size_t> tour;
  tour.reserve(best.best_sequence.size() + 1);
  for (std::size_t v : best.best_sequence) tour.push_back(v + 1);
  tour.push_back(best.best_sequence.front() + 1);
  j["best"] = {{"length", best.best_value}, {"tour", tour}};
  const auto stats = sta::harness::compute_stats(finals);
  j["stats"] = {{"best", stats.best}, {"mean", stats.mean}, {"std", stats.std_dev}};

  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write: " + out);
    os << j.dump(2) << "\n";
  }
  std::cout << "tsp n=" << inst.size() << " trials=" << trials
            << "  best length=" << best.best_value << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State transition optimizer experiment harness"};
  app.require_subcommand(1);

  // bench
  sta::harness::ExperimentSpec spec;
  spec.function = "sphere";
  std::string bench_out, bench_json, trace_dir;
  auto* bench = app.add_subcommand("bench", "Run continuous benchmark trials");
  bench->add_option("--function", spec.function, "sphere|rosenbrock|rastrigin|griewank");
  bench->add_option("--dim", spec.dimension, "problem dimension")->default_val(10);
  bench->add_option("--iterations", spec.max_iterations, "outer iterations")
      ->default_val(1000);
  bench->add_option("--trials", spec.trials, "independent trials")->default_val(50);
  bench->add_option("--seed", spec.base_seed, "base seed; trial t uses seed+t")
      ->default_val(0);
  bench->add_option("--se", spec.params.se, "search enforcement")->default_val(32);
  bench->add_option("--beta", spec.params.beta, "translation factor")->default_val(1.0);
  bench->add_option("--gamma", spec.params.gamma, "expansion factor")->default_val(1.0);
  bench->add_option("--jobs", spec.jobs, "parallel trial workers")->default_val(1);
  bench->add_option("--out", bench_out, "per-trial CSV output path");
  bench->add_option("--json", bench_json, "JSON output path (spec, trials, stats)");
  bench->add_option("--trace", trace_dir, "directory for per-trial convergence CSVs");

  // tsp
  std::string instance_path, tsp_out;
  sta::SearchParams tsp_params;
  int tsp_trials = 1;
  std::uint64_t tsp_seed = 0;
  auto* tsp = app.add_subcommand("tsp", "Solve a TSP instance file");
  tsp->add_option("--instance", instance_path, "instance file (plain or TSPLIB EUC_2D)")
      ->required();
  tsp->add_option("--iterations", tsp_params.max_iterations, "iterations")
      ->default_val(2000);
  tsp->add_option("--trials", tsp_trials, "independent trials")->default_val(1);
  tsp->add_option("--seed", tsp_seed, "base seed")->default_val(0);
  tsp->add_option("--se", tsp_params.se, "search enforcement")->default_val(32);
  tsp->add_option("--out", tsp_out, "JSON output path (best tour and stats)");

  // gen-instance
  std::size_t gen_n = 16;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-instance",
                                 "Generate uniform random cities in [0,100]^2");
  gen->add_option("--n", gen_n, "number of cities")->default_val(16);
  gen->add_option("--seed", gen_seed, "generator seed")->default_val(1);
  gen->add_option("--out", gen_out, "output instance path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) return run_bench(spec, bench_out, bench_json, trace_dir);
    if (tsp->parsed()) return run_tsp(instance_path, tsp_params, tsp_trials,
                                      tsp_seed, tsp_out);
    if (gen->parsed()) {
      sta::harness::write_instance(sta::harness::generate_instance(gen_n, gen_seed),
                                   gen_out);
      std::cout << "wrote " << gen_n << " cities to " << gen_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
