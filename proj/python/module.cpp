#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sta/harness.hpp"

namespace py = pybind11;
using namespace sta;

namespace {

SearchParams make_params(double beta, double gamma, int se, int max_iterations,
                         std::uint64_t seed) {
  SearchParams p;
  p.beta = beta;
  p.gamma = gamma;
  p.se = se;
  p.max_iterations = max_iterations;
  p.seed = seed;
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_sta, m) {
  m.doc() = "State transition optimizer: continuous rotation/translation/"
            "expansion operators, permutation transformations, and solvers";

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &RngStream::uniform, py::arg("a"), py::arg("b"))
      .def("gaussian", &RngStream::gaussian)
      .def("uniform_int", &RngStream::uniform_int, py::arg("lo"), py::arg("hi"));

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("best_point", &SolveResult::best_point)
      .def_readonly("best_value", &SolveResult::best_value)
      .def_readonly("history", &SolveResult::history)
      .def_readonly("evaluations", &SolveResult::evaluations);

  py::class_<discrete::DiscreteSolveResult>(m, "DiscreteSolveResult")
      .def_readonly("best_sequence", &discrete::DiscreteSolveResult::best_sequence)
      .def_readonly("best_value", &discrete::DiscreteSolveResult::best_value)
      .def_readonly("history", &discrete::DiscreteSolveResult::history)
      .def_readonly("evaluations", &discrete::DiscreteSolveResult::evaluations);

  // Continuous operators. Degenerate inputs (zero-norm rotation, zero
  // direction translation) return None.
  m.def("rotate",
        [](const Point& x, double alpha, RngStream& rng) {
          return rotate(x, alpha, rng);
        },
        py::arg("x"), py::arg("alpha"), py::arg("rng"));
  m.def("translate",
        [](const Point& x, const Point& x_prev, double beta, RngStream& rng) {
          return translate(x, x_prev, beta, rng);
        },
        py::arg("x"), py::arg("x_prev"), py::arg("beta"), py::arg("rng"));
  m.def("expand",
        [](const Point& x, double gamma, RngStream& rng) {
          return expand(x, gamma, rng);
        },
        py::arg("x"), py::arg("gamma"), py::arg("rng"));

  // Benchmark functions.
  m.def("sphere", &benchmarks::sphere);
  m.def("rosenbrock", &benchmarks::rosenbrock);
  m.def("rastrigin", &benchmarks::rastrigin);
  m.def("griewank", &benchmarks::griewank);
  m.def("benchmark_names", [] { return benchmarks::names(); });

  m.def("solve",
        [](const std::function<double(const Point&)>& objective,
           const Point& lower, const Point& upper, double beta, double gamma,
           int se, int max_iterations, std::uint64_t seed) {
          return solve(objective, Bounds(lower, upper),
                       make_params(beta, gamma, se, max_iterations, seed));
        },
        py::arg("objective"), py::arg("lower"), py::arg("upper"),
        py::arg("beta") = 1.0, py::arg("gamma") = 1.0, py::arg("se") = 32,
        py::arg("max_iterations") = 1000, py::arg("seed") = 0,
        "Minimize a python callable over box bounds");

  m.def("solve_benchmark",
        [](const std::string& name, std::size_t dim, double beta, double gamma,
           int se, int max_iterations, std::uint64_t seed) {
          const auto bench = benchmarks::lookup(name, dim);
          return solve(bench.evaluator, bench.bounds,
                       make_params(beta, gamma, se, max_iterations, seed));
        },
        py::arg("name"), py::arg("dim"), py::arg("beta") = 1.0,
        py::arg("gamma") = 1.0, py::arg("se") = 32,
        py::arg("max_iterations") = 1000, py::arg("seed") = 0,
        "Minimize a named benchmark with its paper bounds");

  // Discrete operators over permutations of 0..n-1.
  m.def("apply_transformation",
        [](const std::vector<std::size_t>& mapping, const discrete::Sequence& s) {
          return discrete::apply_transformation({mapping}, s);
        },
        py::arg("mapping"), py::arg("sequence"));
  m.def("random_swap",
        [](std::size_t n, RngStream& rng) { return discrete::random_swap(n, rng).mapping; });
  m.def("random_insert",
        [](std::size_t n, RngStream& rng) { return discrete::random_insert(n, rng).mapping; });
  m.def("random_reverse",
        [](std::size_t n, RngStream& rng) { return discrete::random_reverse(n, rng).mapping; });

  m.def("tour_length",
        [](const std::vector<std::pair<double, double>>& cities,
           const discrete::Sequence& s) {
          return discrete::tour_length({cities}, s);
        },
        py::arg("cities"), py::arg("sequence"));

  m.def("solve_tsp",
        [](const std::vector<std::pair<double, double>>& cities, int se,
           int max_iterations, std::uint64_t seed) {
          SearchParams p;
          p.se = se;
          p.max_iterations = max_iterations;
          p.seed = seed;
          return discrete::solve_discrete({cities}, p);
        },
        py::arg("cities"), py::arg("se") = 32, py::arg("max_iterations") = 2000,
        py::arg("seed") = 0);

  m.def("compute_stats",
        [](const std::vector<double>& values) {
          const auto st = harness::compute_stats(values);
          return py::make_tuple(st.best, st.mean, st.std_dev);
        },
        py::arg("values"), "Returns (best, mean, sample_std)");

  m.def("generate_instance",
        [](std::size_t n, std::uint64_t seed) {
          return harness::generate_instance(n, seed).cities;
        },
        py::arg("n"), py::arg("seed"), "Uniform random cities in [0,100]^2");
}
