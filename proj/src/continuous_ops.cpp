#include "sta/continuous_ops.hpp"

#include <cmath>

namespace sta {

namespace {

double norm2(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

std::optional<Point> rotate(const Point& x, double alpha, RngStream& rng) {
  if (alpha < 0.0) throw std::invalid_argument("rotate: alpha must be >= 0");
  const std::size_t n = x.size();
  const double nrm = norm2(x);
  if (nrm == 0.0) return std::nullopt;
  // R is drawn row by row; row i only feeds result[i], so no matrix is stored.
  const double scale = alpha / (static_cast<double>(n) * nrm);
  Point out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      dot += rng.uniform(-1.0, 1.0) * x[j];
    }
    out[i] = x[i] + scale * dot;
  }
  return out;
}

std::optional<Point> translate(const Point& x, const Point& x_prev, double beta,
                               RngStream& rng) {
  if (beta < 0.0) throw std::invalid_argument("translate: beta must be >= 0");
  if (x.size() != x_prev.size()) {
    throw std::invalid_argument("translate: dimension mismatch");
  }
  Point dir(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) dir[i] = x[i] - x_prev[i];
  const double nrm = norm2(dir);
  if (nrm == 0.0) return std::nullopt;
  const double step = beta * rng.next_unit() / nrm;
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + step * dir[i];
  return out;
}

Point expand(const Point& x, double gamma, RngStream& rng) {
  if (gamma < 0.0) throw std::invalid_argument("expand: gamma must be >= 0");
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] * (1.0 + gamma * rng.gaussian());
  }
  return out;
}

std::optional<EvaluatedState> sample_candidates(
    TransformKind kind, const EvaluatedState& incumbent,
    const std::optional<Point>& prev, const OperatorParams& op, int se,
    const Objective& objective, const Bounds& b, RngStream& rng) {
  if (se < 1) throw std::invalid_argument("sample_candidates: se must be >= 1");
  if (kind == TransformKind::Translation && !prev.has_value()) {
    throw std::invalid_argument("sample_candidates: translation requires prev");
  }
  std::vector<EvaluatedState> set;
  set.reserve(static_cast<std::size_t>(se));
  for (int k = 0; k < se; ++k) {
    std::optional<Point> cand;
    switch (kind) {
      case TransformKind::Rotation:
        cand = rotate(incumbent.point, op.alpha, rng);
        break;
      case TransformKind::Translation:
        cand = translate(incumbent.point, *prev, op.beta, rng);
        break;
      case TransformKind::Expansion:
        cand = expand(incumbent.point, op.gamma, rng);
        break;
    }
    if (!cand) continue;
    Point repaired = clamp(*cand, b);
    double v = evaluate(objective, repaired);
    set.push_back({std::move(repaired), v});
  }
  if (set.empty()) return std::nullopt;
  return select_best(set);
}

}  // namespace sta
