"""Random-restart local search used as the comparison algorithm.

Each iteration draws a fresh random configuration, sweeps one randomized
neighborhood around it and keeps every point that satisfies the criterion.
There is no memory between iterations.
"""

from __future__ import annotations

import time
from typing import Optional, Tuple

import numpy as np

from .problem import Configuration, Problem, random_configuration
from .search import (
    RunStats,
    SearchParams,
    SolutionSet,
    TraceCallback,
    apply,
    neighborhood_generation,
)


def local_search(
    v: Configuration,
    problem: Problem,
    solutions: SolutionSet,
    rng: np.random.Generator,
    chi_max: int,
    iteration: int = 0,
) -> int:
    """Insert every solution in one neighborhood of ``v``; return how many were new."""
    nbhd = neighborhood_generation(v, rng, chi_max, problem.n_syllables)
    added = 0
    for m in nbhd:
        u = apply(v, m)
        if problem.score(u) == 1.0:
            text = problem.text(u)
            if text not in solutions:
                solutions.add(text, problem.decode(u).syllables, iteration)
                added += 1
    return added


def run_cils(
    problem: Problem,
    params: SearchParams,
    rng: np.random.Generator,
    callback: Optional[TraceCallback] = None,
) -> Tuple[SolutionSet, RunStats]:
    stats = RunStats("cils")
    start = time.perf_counter()
    solutions = SolutionSet()
    t = 0
    while t < params.max_iterations:
        if params.target_solutions is not None and len(solutions) >= params.target_solutions:
            break
        v = random_configuration(rng, problem.d, problem.n_syllables)
        if callback:
            callback(t, v, False)
        local_search(v, problem, solutions, rng, params.chi_max, t)
        t += 1
    stats.iterations = t
    stats.solutions = len(solutions)
    stats.seconds = time.perf_counter() - start
    return solutions, stats
