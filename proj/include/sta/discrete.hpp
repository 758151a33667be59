#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sta/core.hpp"

namespace sta {
namespace discrete {

// A discrete state: a permutation of 0..n-1 (displayed 1-based).
using Sequence = std::vector<std::size_t>;

// A permutation matrix acting on positions. mapping[i] = j means row i of
// the matrix has its 1 in column j, so result[i] = s[j].
struct GeneralElementaryTransformation {
  std::vector<std::size_t> mapping;

  std::size_t size() const { return mapping.size(); }
};

bool is_permutation(const Sequence& s);

// result[i] = s[mapping[i]]. Throws on size mismatch or non-bijective mapping.
Sequence apply_transformation(const GeneralElementaryTransformation& t,
                              const Sequence& s);

// Exchanges two distinct positions.
GeneralElementaryTransformation random_swap(std::size_t n, RngStream& rng);
// Removes one position and reinserts it at another.
GeneralElementaryTransformation random_insert(std::size_t n, RngStream& rng);
// Inverts a contiguous position range.
GeneralElementaryTransformation random_reverse(std::size_t n, RngStream& rng);

struct TspInstance {
  std::vector<std::pair<double, double>> cities;

  std::size_t size() const { return cities.size(); }
  void validate() const;  // n >= 2, coordinates finite
};

// Closed-tour Euclidean length, including the edge from last back to first.
double tour_length(const TspInstance& inst, const Sequence& s);

struct DiscreteSolveResult {
  Sequence best_sequence;
  double best_value = 0.0;
  std::vector<std::pair<int, double>> history;
  long long evaluations = 0;
};

Sequence random_sequence(std::size_t n, RngStream& rng);

// Random restarts for the initial state set, then greedy incumbent search:
// each iteration draws `se` candidates per operator family (swap, insert,
// reverse) and accepts the overall best on strict improvement.
DiscreteSolveResult solve_discrete(const TspInstance& inst,
                                   const SearchParams& params);

}  // namespace discrete
}  // namespace sta
