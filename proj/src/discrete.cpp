#include "sta/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sta {
namespace discrete {

bool is_permutation(const Sequence& s) {
  std::vector<bool> seen(s.size(), false);
  for (std::size_t v : s) {
    if (v >= s.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Sequence apply_transformation(const GeneralElementaryTransformation& t,
                              const Sequence& s) {
  if (t.size() != s.size()) {
    throw std::invalid_argument("apply_transformation: size mismatch");
  }
  if (!is_permutation(t.mapping)) {
    throw std::invalid_argument("apply_transformation: mapping is not bijective");
  }
  Sequence out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[t.mapping[i]];
  return out;
}

namespace {

GeneralElementaryTransformation identity(std::size_t n) {
  GeneralElementaryTransformation t;
  t.mapping.resize(n);
  std::iota(t.mapping.begin(), t.mapping.end(), std::size_t{0});
  return t;
}

}  // namespace

GeneralElementaryTransformation random_swap(std::size_t n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("random_swap: n must be >= 2");
  auto t = identity(n);
  const auto i = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  auto j = static_cast<std::size_t>(rng.uniform_int(0, n - 2));
  if (j >= i) ++j;  // distinct positions
  std::swap(t.mapping[i], t.mapping[j]);
  return t;
}

GeneralElementaryTransformation random_insert(std::size_t n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("random_insert: n must be >= 2");
  auto t = identity(n);
  const auto from = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  const auto to = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  const std::size_t v = t.mapping[from];
  t.mapping.erase(t.mapping.begin() + static_cast<std::ptrdiff_t>(from));
  t.mapping.insert(t.mapping.begin() + static_cast<std::ptrdiff_t>(to), v);
  return t;
}

GeneralElementaryTransformation random_reverse(std::size_t n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("random_reverse: n must be >= 2");
  auto t = identity(n);
  auto i = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  auto j = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  if (i > j) std::swap(i, j);
  std::reverse(t.mapping.begin() + static_cast<std::ptrdiff_t>(i),
               t.mapping.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return t;
}

void TspInstance::validate() const {
  if (cities.size() < 2) {
    throw std::invalid_argument("tsp instance: need at least 2 cities");
  }
  for (const auto& [x, y] : cities) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("tsp instance: coordinates must be finite");
    }
  }
}

double tour_length(const TspInstance& inst, const Sequence& s) {
  if (s.size() != inst.size() || !is_permutation(s)) {
    throw std::invalid_argument("tour_length: sequence is not a permutation of the cities");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = inst.cities[s[i]];
    const auto& b = inst.cities[s[(i + 1) % s.size()]];
    total += std::hypot(a.first - b.first, a.second - b.second);
  }
  return total;
}

Sequence random_sequence(std::size_t n, RngStream& rng) {
  Sequence s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  // Fisher-Yates with our own stream (std::shuffle draws are not portable).
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, i));
    std::swap(s[i], s[j]);
  }
  return s;
}

DiscreteSolveResult solve_discrete(const TspInstance& inst,
                                   const SearchParams& params) {
  params.validate();
  inst.validate();
  RngStream rng(params.seed);
  const std::size_t n = inst.size();

  // Step 1: random initial state set, keep the best.
  Sequence best = random_sequence(n, rng);
  double best_len = tour_length(inst, best);
  long long evals = 1;
  for (int k = 1; k < params.se; ++k) {
    Sequence s = random_sequence(n, rng);
    const double len = tour_length(inst, s);
    ++evals;
    if (len < best_len) {
      best = std::move(s);
      best_len = len;
    }
  }

  DiscreteSolveResult result;
  result.history.reserve(static_cast<std::size_t>(params.max_iterations) + 1);
  result.history.emplace_back(0, best_len);

  using Generator = GeneralElementaryTransformation (*)(std::size_t, RngStream&);
  constexpr Generator kFamilies[] = {random_swap, random_insert, random_reverse};

  for (int k = 1; k <= params.max_iterations; ++k) {
    Sequence cand_best;
    double cand_len = std::numeric_limits<double>::infinity();
    for (Generator gen : kFamilies) {
      for (int c = 0; c < params.se; ++c) {
        Sequence cand = apply_transformation(gen(n, rng), best);
        const double len = tour_length(inst, cand);
        ++evals;
        if (len < cand_len) {
          cand_best = std::move(cand);
          cand_len = len;
        }
      }
    }
    if (cand_len < best_len) {
      best = std::move(cand_best);
      best_len = cand_len;
    }
    result.history.emplace_back(k, best_len);
  }

  result.best_sequence = std::move(best);
  result.best_value = best_len;
  result.evaluations = evals;
  return result;
}

}  // namespace discrete
}  // namespace sta
