#include "sta/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sta {

Bounds::Bounds(Point lo, Point up) : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("bounds: lower/upper dimension mismatch");
  }
  if (lower.empty()) {
    throw std::invalid_argument("bounds: dimension must be at least 1");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("bounds: lower[i] must be < upper[i]");
    }
  }
}

Bounds Bounds::uniform(double lo, double up, std::size_t dim) {
  return Bounds(Point(dim, lo), Point(dim, up));
}

void SearchParams::validate() const {
  if (!(alpha_min > 0.0) || !(alpha_min <= alpha_max)) {
    throw std::invalid_argument("params: require 0 < alpha_min <= alpha_max");
  }
  if (!(alpha_base > 1.0)) {
    throw std::invalid_argument("params: require alpha_base > 1");
  }
  if (beta < 0.0 || gamma < 0.0) {
    throw std::invalid_argument("params: factors must be non-negative");
  }
  if (se < 1) {
    throw std::invalid_argument("params: search enforcement must be >= 1");
  }
  if (max_iterations < 0) {
    throw std::invalid_argument("params: max_iterations must be >= 0");
  }
}

Point clamp(const Point& p, const Bounds& b) {
  if (p.size() != b.dimension()) {
    throw std::invalid_argument("clamp: point/bounds dimension mismatch");
  }
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = std::min(std::max(p[i], b.lower[i]), b.upper[i]);
  }
  return out;
}

const EvaluatedState& select_best(const std::vector<EvaluatedState>& candidates) {
  if (candidates.empty()) {
    throw std::logic_error("select_best: empty candidate set");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].value < candidates[best].value) best = i;
  }
  return candidates[best];
}

double evaluate(const Objective& objective, const Point& p) {
  const double v = objective(p);
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

EvaluatedState init_continuous(const Objective& objective, const Bounds& b,
                               int se, RngStream& rng) {
  if (se < 1) throw std::invalid_argument("init_continuous: se must be >= 1");
  std::vector<EvaluatedState> set;
  set.reserve(static_cast<std::size_t>(se));
  for (int k = 0; k < se; ++k) {
    Point p(b.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = rng.uniform(b.lower[i], b.upper[i]);
    }
    double v = evaluate(objective, p);
    set.push_back({std::move(p), v});
  }
  return select_best(set);
}

}  // namespace sta
