#pragma once

#include <optional>

#include "sta/core.hpp"

namespace sta {

enum class TransformKind { Rotation, Translation, Expansion };

// Rotation (local search): x + alpha * (1 / (n * ||x||)) * R * x with R an
// n x n matrix of independent uniforms on [-1, 1]. The displacement never
// exceeds alpha. Returns nullopt when ||x|| = 0 (rotation is undefined at
// the origin).
std::optional<Point> rotate(const Point& x, double alpha, RngStream& rng);

// Translation (1-D line search): x + beta * r * (x - x_prev) / ||x - x_prev||
// with scalar r uniform on [0, 1]. Returns nullopt when x == x_prev.
std::optional<Point> translate(const Point& x, const Point& x_prev, double beta,
                               RngStream& rng);

// Expansion (global search): result[i] = x[i] * (1 + gamma * g_i) with g_i
// independent standard Gaussians. Zero coordinates stay exactly zero.
Point expand(const Point& x, double gamma, RngStream& rng);

struct OperatorParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
};

// Generates `se` candidates with the chosen operator, clamps each to b,
// evaluates, and returns the best of the set. The incumbent itself is not a
// member; acceptance is the caller's decision. Returns nullopt when every
// candidate generation was degenerate (zero-norm rotation or zero-direction
// translation).
std::optional<EvaluatedState> sample_candidates(
    TransformKind kind, const EvaluatedState& incumbent,
    const std::optional<Point>& prev, const OperatorParams& op, int se,
    const Objective& objective, const Bounds& b, RngStream& rng);

}  // namespace sta
