#pragma once

#include <string>
#include <vector>

#include "sta/core.hpp"

namespace sta {
namespace benchmarks {

double sphere(const Point& x);
double rosenbrock(const Point& x);  // requires dimension >= 2
double rastrigin(const Point& x);
double griewank(const Point& x);

struct BenchmarkSpec {
  std::string name;
  std::size_t dimension;
  Bounds bounds;
  Objective evaluator;
};

// Known names: sphere, rosenbrock, rastrigin, griewank. Throws
// std::invalid_argument listing the valid names otherwise.
BenchmarkSpec lookup(const std::string& name, std::size_t dimension);

const std::vector<std::string>& names();

}  // namespace benchmarks
}  // namespace sta
