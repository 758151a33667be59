#include <doctest.h>

#include <cmath>

#include "sta/benchmarks.hpp"

using namespace sta;
using namespace sta::benchmarks;

TEST_CASE("sphere values") {
  CHECK(sphere(Point(10, 0.0)) == 0.0);
  CHECK(sphere({3.0, 4.0}) == 25.0);
  CHECK(sphere(Point(10, 1.0)) == 10.0);
}

TEST_CASE("rosenbrock values") {
  CHECK(rosenbrock(Point(7, 1.0)) == 0.0);
  CHECK(rosenbrock({0.0, 0.0}) == 1.0);
  CHECK(rosenbrock({-1.0, 1.0}) == 4.0);
  CHECK_THROWS_AS(rosenbrock({1.0}), std::invalid_argument);
}

TEST_CASE("rastrigin values") {
  CHECK(rastrigin(Point(10, 0.0)) == 0.0);
  CHECK(rastrigin({1.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rastrigin({0.5}) == doctest::Approx(20.25).epsilon(1e-12));
}

TEST_CASE("griewank values against independent scalar evaluation") {
  CHECK(griewank(Point(10, 0.0)) == 0.0);

  const double r = std::sqrt(4000.0);
  CHECK(griewank({r}) == doctest::Approx(2.0 - std::cos(r)).epsilon(1e-12));
  CHECK(griewank({600.0}) ==
        doctest::Approx(90.0 + 1.0 - std::cos(600.0)).epsilon(1e-12));

  // dim-3 spot check against a hand-expanded formula
  const Point x = {1.0, 2.0, 3.0};
  const double expect = (1.0 + 4.0 + 9.0) / 4000.0 -
                        std::cos(1.0) * std::cos(2.0 / std::sqrt(2.0)) *
                            std::cos(3.0 / std::sqrt(3.0)) +
                        1.0;
  CHECK(griewank(x) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("all four functions are non-negative in their boxes, zero at optimum") {
  RngStream rng(30);
  for (const auto& name : names()) {
    const auto spec = lookup(name, 6);
    const Point opt(6, name == "rosenbrock" ? 1.0 : 0.0);
    CHECK(spec.evaluator(opt) == doctest::Approx(0.0).epsilon(1e-12));
    for (int k = 0; k < 10000; ++k) {
      Point p(6);
      for (std::size_t i = 0; i < 6; ++i) {
        p[i] = rng.uniform(spec.bounds.lower[i], spec.bounds.upper[i]);
      }
      CHECK(spec.evaluator(p) >= 0.0);
    }
  }
}

TEST_CASE("lookup returns the paper bounds") {
  const auto s = lookup("sphere", 10);
  CHECK(s.bounds.lower == Point(10, -100.0));
  CHECK(s.bounds.upper == Point(10, 100.0));
  const auto g = lookup("griewank", 30);
  CHECK(g.bounds.lower == Point(30, -600.0));
  CHECK(g.bounds.upper == Point(30, 600.0));
  CHECK(lookup("rosenbrock", 20).bounds.upper == Point(20, 30.0));
  CHECK(lookup("rastrigin", 10).bounds.upper == Point(10, 5.12));
}

TEST_CASE("lookup rejects unknown names") {
  CHECK_THROWS_WITH_AS(lookup("foo", 5),
                       doctest::Contains("sphere, rosenbrock, rastrigin, griewank"),
                       std::invalid_argument);
}
