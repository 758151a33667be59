#include "sta/solver.hpp"

namespace sta {

std::vector<double> alpha_schedule(const SearchParams& params) {
  params.validate();
  std::vector<double> values;
  for (double a = params.alpha_max; a >= params.alpha_min; a /= params.alpha_base) {
    values.push_back(a);
  }
  return values;
}

void translation_phase(SolverState& st, const SearchParams& params,
                       const Objective& objective, const Bounds& b,
                       RngStream& rng) {
  if (!st.previous.has_value()) return;
  OperatorParams op;
  op.beta = params.beta;
  auto best = sample_candidates(TransformKind::Translation, st.incumbent,
                                st.previous, op, params.se, objective, b, rng);
  if (!best) return;  // degenerate direction
  st.evaluations += params.se;
  st.translation_phases += 1;
  if (best->value < st.incumbent.value) {
    st.previous = st.incumbent.point;
    st.incumbent = std::move(*best);
  }
}

namespace {

// Runs one transformation phase; on strict improvement accepts the candidate
// and chains a translation phase.
void phase(TransformKind kind, const OperatorParams& op, SolverState& st,
           const SearchParams& params, const Objective& objective,
           const Bounds& b, RngStream& rng) {
  auto best = sample_candidates(kind, st.incumbent, st.previous, op, params.se,
                                objective, b, rng);
  if (!best) return;  // degenerate state, no candidates produced
  st.evaluations += params.se;
  if (best->value < st.incumbent.value) {
    st.previous = st.incumbent.point;
    st.incumbent = std::move(*best);
    translation_phase(st, params, objective, b, rng);
  }
}

}  // namespace

void iterate(SolverState& st, const SearchParams& params,
             const Objective& objective, const Bounds& b, RngStream& rng) {
  OperatorParams op;
  op.beta = params.beta;
  op.gamma = params.gamma;
  phase(TransformKind::Expansion, op, st, params, objective, b, rng);
  for (double alpha : alpha_schedule(params)) {
    op.alpha = alpha;
    phase(TransformKind::Rotation, op, st, params, objective, b, rng);
  }
}

SolveResult solve(const Objective& objective, const Bounds& b,
                  const SearchParams& params) {
  params.validate();
  RngStream rng(params.seed);
  SolverState st;
  st.incumbent = init_continuous(objective, b, params.se, rng);
  st.evaluations = params.se;

  SolveResult result;
  result.history.reserve(static_cast<std::size_t>(params.max_iterations) + 1);
  result.history.emplace_back(0, st.incumbent.value);
  for (int k = 1; k <= params.max_iterations; ++k) {
    iterate(st, params, objective, b, rng);
    result.history.emplace_back(k, st.incumbent.value);
  }
  result.best_point = std::move(st.incumbent.point);
  result.best_value = st.incumbent.value;
  result.evaluations = st.evaluations;
  result.translation_phases = st.translation_phases;
  return result;
}

}  // namespace sta
