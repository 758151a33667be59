from ._sta import (
    RngStream,
    SolveResult,
    DiscreteSolveResult,
    rotate,
    translate,
    expand,
    sphere,
    rosenbrock,
    rastrigin,
    griewank,
    benchmark_names,
    solve,
    solve_benchmark,
    apply_transformation,
    random_swap,
    random_insert,
    random_reverse,
    tour_length,
    solve_tsp,
    compute_stats,
    generate_instance,
)

__all__ = [
    "RngStream",
    "SolveResult",
    "DiscreteSolveResult",
    "rotate",
    "translate",
    "expand",
    "sphere",
    "rosenbrock",
    "rastrigin",
    "griewank",
    "benchmark_names",
    "solve",
    "solve_benchmark",
    "apply_transformation",
    "random_swap",
    "random_insert",
    "random_reverse",
    "tour_length",
    "solve_tsp",
    "compute_stats",
    "generate_instance",
]
