#include "sta/benchmarks.hpp"

#include <cmath>

namespace sta {
namespace benchmarks {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double sphere(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double rosenbrock(const Point& x) {
  if (x.size() < 2) {
    throw std::invalid_argument("rosenbrock: dimension must be >= 2");
  }
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double rastrigin(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
  return s;
}

double griewank(const Point& x) {
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

BenchmarkSpec lookup(const std::string& name, std::size_t dimension) {
  if (dimension < 1) throw std::invalid_argument("lookup: dimension must be >= 1");
  if (name == "sphere") {
    return {name, dimension, Bounds::uniform(-100.0, 100.0, dimension), sphere};
  }
  if (name == "rosenbrock") {
    if (dimension < 2) {
      throw std::invalid_argument("lookup: rosenbrock needs dimension >= 2");
    }
    return {name, dimension, Bounds::uniform(-30.0, 30.0, dimension), rosenbrock};
  }
  if (name == "rastrigin") {
    return {name, dimension, Bounds::uniform(-5.12, 5.12, dimension), rastrigin};
  }
  if (name == "griewank") {
    return {name, dimension, Bounds::uniform(-600.0, 600.0, dimension), griewank};
  }
  throw std::invalid_argument(
      "unknown benchmark '" + name +
      "'; valid names: sphere, rosenbrock, rastrigin, griewank");
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {"sphere", "rosenbrock",
                                                  "rastrigin", "griewank"};
  return kNames;
}

}  // namespace benchmarks
}  // namespace sta
