#include "sta/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sta {
namespace harness {

TrialStats compute_stats(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("compute_stats: empty value list");
  }
  TrialStats st;
  st.best = *std::min_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - st.mean) * (v - st.mean);
    st.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return st;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, bool keep_history) {
  if (spec.trials < 1) {
    throw std::invalid_argument("run_experiment: trials must be >= 1");
  }
  const auto bench = benchmarks::lookup(spec.function, spec.dimension);

  ExperimentResult result;
  result.spec = spec;
  result.records.resize(static_cast<std::size_t>(spec.trials));

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int t = next.fetch_add(1); t < spec.trials; t = next.fetch_add(1)) {
      SearchParams params = spec.params;
      params.max_iterations = spec.max_iterations;
      params.seed = spec.base_seed + static_cast<std::uint64_t>(t);
      const auto t0 = std::chrono::steady_clock::now();
      SolveResult sr = solve(bench.evaluator, bench.bounds, params);
      const auto t1 = std::chrono::steady_clock::now();
      TrialRecord& rec = result.records[static_cast<std::size_t>(t)];
      rec.trial = t;
      rec.seed = params.seed;
      rec.best_value = sr.best_value;
      rec.evaluations = sr.evaluations;
      rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (keep_history) rec.history = std::move(sr.history);
    }
  };

  const int jobs = std::max(1, std::min(spec.jobs, spec.trials));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<double> finals;
  finals.reserve(result.records.size());
  for (const auto& rec : result.records) finals.push_back(rec.best_value);
  result.stats = compute_stats(finals);
  return result;
}

const std::vector<std::pair<std::size_t, int>>& default_protocol() {
  static const std::vector<std::pair<std::size_t, int>> kProtocol = {
      {10, 1000}, {20, 1500}, {30, 2000}};
  return kProtocol;
}

namespace {

[[noreturn]] void parse_fail(const std::filesystem::path& path, int line,
                             const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           what);
}

discrete::TspInstance parse_coord_lines(const std::filesystem::path& path,
                                        std::istream& in, std::size_t n,
                                        int& lineno) {
  discrete::TspInstance inst;
  inst.cities.resize(n, {0.0, 0.0});
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t count = 0;
  while (count < n && std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long id;
    double x, y;
    if (!(ls >> id)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      parse_fail(path, lineno, "expected 'id x y', got '" + line + "'");
    }
    if (!(ls >> x >> y)) {
      parse_fail(path, lineno, "expected 'id x y', got '" + line + "'");
    }
    if (id < 1 || static_cast<std::size_t>(id) > n) {
      parse_fail(path, lineno, "city id out of range 1.." + std::to_string(n));
    }
    const auto idx = static_cast<std::size_t>(id - 1);
    if (seen[idx]) parse_fail(path, lineno, "duplicate city id " + std::to_string(id));
    seen[idx] = true;
    inst.cities[idx] = {x, y};
    ++count;
  }
  if (count < n) {
    parse_fail(path, lineno, "expected " + std::to_string(n) +
                                 " city lines, got " + std::to_string(count));
  }
  inst.validate();
  return inst;
}

}  // namespace

discrete::TspInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path.string());

  // Sniff the header: TSPLIB files carry KEYWORD : value lines before
  // NODE_COORD_SECTION; the plain format starts with a bare count.
  std::string first;
  int lineno = 0;
  std::streampos start = in.tellg();
  if (!std::getline(in, first)) parse_fail(path, 1, "empty file");
  ++lineno;

  std::istringstream fs(first);
  std::size_t n = 0;
  char extra;
  if (fs >> n && !(fs >> extra)) {
    if (n < 2) parse_fail(path, lineno, "instance needs at least 2 cities");
    return parse_coord_lines(path, in, n, lineno);
  }

  // TSPLIB route.
  in.clear();
  in.seekg(start);
  lineno = 0;
  std::string line;
  std::size_t dimension = 0;
  bool in_coords = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string upper = line;
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    if (upper.find("DIMENSION") != std::string::npos) {
      const auto colon = line.find(':');
      std::istringstream ds(colon == std::string::npos ? line.substr(9)
                                                       : line.substr(colon + 1));
      if (!(ds >> dimension)) parse_fail(path, lineno, "unreadable DIMENSION");
    } else if (upper.find("NODE_COORD_SECTION") != std::string::npos) {
      in_coords = true;
      break;
    }
  }
  if (!in_coords) parse_fail(path, lineno, "no NODE_COORD_SECTION found");
  if (dimension < 2) parse_fail(path, lineno, "missing or invalid DIMENSION");
  return parse_coord_lines(path, in, dimension, lineno);
}

void write_instance(const discrete::TspInstance& inst,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path.string());
  out.precision(17);
  out << inst.size() << "\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out << (i + 1) << " " << inst.cities[i].first << " "
        << inst.cities[i].second << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

discrete::TspInstance generate_instance(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_instance: n must be >= 2");
  RngStream rng(seed);
  discrete::TspInstance inst;
  inst.cities.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, 100.0);
    const double y = rng.uniform(0.0, 100.0);
    inst.cities.emplace_back(x, y);
  }
  return inst;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void emit_csv(const ExperimentResult& result, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path.string());
  out << "function,dim,trial,seed,best_value,evaluations,ms\n";
  for (const auto& rec : result.records) {
    out << result.spec.function << "," << result.spec.dimension << ","
        << rec.trial << "," << rec.seed << "," << fmt(rec.best_value) << ","
        << rec.evaluations << "," << fmt(rec.ms) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_json(const ExperimentResult& result, const std::filesystem::path& path) {
  nlohmann::json j;
  j["spec"] = {{"function", result.spec.function},
               {"dim", result.spec.dimension},
               {"iterations", result.spec.max_iterations},
               {"trials", result.spec.trials},
               {"seed", result.spec.base_seed},
               {"se", result.spec.params.se},
               {"beta", result.spec.params.beta},
               {"gamma", result.spec.params.gamma}};
  j["trials"] = nlohmann::json::array();
  for (const auto& rec : result.records) {
    j["trials"].push_back({{"trial", rec.trial},
                           {"seed", rec.seed},
                           {"best_value", rec.best_value},
                           {"evaluations", rec.evaluations},
                           {"ms", rec.ms}});
  }
  j["stats"] = {{"best", result.stats.best},
                {"mean", result.stats.mean},
                {"std", result.stats.std_dev}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_traces(const ExperimentResult& result,
                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& rec : result.records) {
    if (rec.history.empty()) {
      throw std::logic_error("emit_traces: run_experiment without keep_history");
    }
    const auto path =
        dir / (result.spec.function + "_trial" + std::to_string(rec.trial) + ".csv");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path.string());
    // no header: one line per history entry, max_iterations + 1 lines total
    for (const auto& [it, v] : rec.history) {
      out << it << "," << fmt(v) << "\n";
    }
  }
}

}  // namespace harness
}  // namespace sta
