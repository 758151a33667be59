#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sta/rng.hpp"

namespace sta {

// A continuous state: one candidate solution in R^n.
using Point = std::vector<double>;

// Objective to minimize. NaN results are treated as +infinity by the
// solvers, so such candidates are never selected.
using Objective = std::function<double(const Point&)>;

struct Bounds {
  Point lower;
  Point upper;

  Bounds() = default;
  Bounds(Point lo, Point up);

  // Replicates the scalar range [lo, up] across `dim` coordinates.
  static Bounds uniform(double lo, double up, std::size_t dim);

  std::size_t dimension() const { return lower.size(); }
};

struct SearchParams {
  double alpha_max = 1.0;
  double alpha_min = 1e-4;
  double alpha_base = 4.0;
  double beta = 1.0;
  double gamma = 1.0;
  int se = 32;  // search enforcement: candidates per transformation
  int max_iterations = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EvaluatedState {
  Point point;
  double value = 0.0;
};

// Componentwise projection of p onto the box b. Idempotent.
Point clamp(const Point& p, const Bounds& b);

// Candidate with minimum value; ties broken by lowest index.
// Throws std::logic_error on an empty set (an internal solver bug).
const EvaluatedState& select_best(const std::vector<EvaluatedState>& candidates);

// Evaluates the objective, mapping NaN to +infinity.
double evaluate(const Objective& objective, const Point& p);

// Draws `se` points uniformly inside b, evaluates each, returns the best.
EvaluatedState init_continuous(const Objective& objective, const Bounds& b,
                               int se, RngStream& rng);

}  // namespace sta
