#pragma once

#include <utility>

#include "sta/continuous_ops.hpp"

namespace sta {

// [alpha_max, alpha_max/base, alpha_max/base^2, ...], truncated before the
// first value below alpha_min. Strictly decreasing, never empty.
std::vector<double> alpha_schedule(const SearchParams& params);

struct SolveResult {
  Point best_point;
  double best_value = 0.0;
  // (iteration index, best value so far); entry 0 is the initialization.
  std::vector<std::pair<int, double>> history;
  long long evaluations = 0;
  // Number of translation phases run (one per accepted improvement with a
  // defined direction). Each costs exactly `se` evaluations.
  long long translation_phases = 0;
};

// Mutable per-run state threaded through iterate().
struct SolverState {
  EvaluatedState incumbent;
  std::optional<Point> previous;  // where the incumbent last moved from
  long long evaluations = 0;
  long long translation_phases = 0;
};

// Line search along the incumbent's last displacement; keeps the incumbent
// unless a strictly better candidate appears. Runs only right after an
// improvement.
void translation_phase(SolverState& st, const SearchParams& params,
                       const Objective& objective, const Bounds& b,
                       RngStream& rng);

// One outer iteration: expansion phase, then the rotation inner loop over
// the alpha schedule; a translation phase follows every improvement. The
// incumbent value never increases.
void iterate(SolverState& st, const SearchParams& params,
             const Objective& objective, const Bounds& b, RngStream& rng);

// Full run: init_continuous, then params.max_iterations outer iterations.
SolveResult solve(const Objective& objective, const Bounds& b,
                  const SearchParams& params);

}  // namespace sta
