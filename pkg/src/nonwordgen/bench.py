"""Replicated CRS-vs-CILS runs summarized like the published result tables."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .baseline import run_cils
from .lexicon import Lexicon, build_syllable_inventory
from .problem import CriterionConfig, Problem
from .search import RunStats, SearchParams, SolutionSet, run_crs

ALGORITHMS = {"crs": run_crs, "cils": run_cils}

SEED_MODULUS = 2**64

ROW_SOLUTIONS = "Solutions found"
ROW_STD = "Standard deviation"
ROW_TIME = "Running time (s)"


def replicate_seed(seed: int, i: int) -> int:
    return (seed + i) % SEED_MODULUS


def run_once(algorithm: str, problem: Problem, params: SearchParams, seed: int
             ) -> Tuple[SolutionSet, RunStats]:
    return ALGORITHMS[algorithm](problem, params, np.random.default_rng(seed))


def run_replicates(
    algorithm: str,
    problem: Problem,
    params: SearchParams,
    seed: int,
    replicates: int,
    jobs: int = 1,
) -> List[Tuple[SolutionSet, RunStats]]:
    """Runs with seeds ``seed, seed + 1, ...``, returned in seed order."""
    seeds = [replicate_seed(seed, i) for i in range(replicates)]
    if jobs <= 1 or replicates == 1:
        return [run_once(algorithm, problem, params, s) for s in seeds]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_once, algorithm, problem, params, s) for s in seeds]
        return [f.result() for f in futures]


@dataclass(frozen=True)
class BenchCell:
    solutions: Tuple[int, ...]
    seconds: Tuple[float, ...]

    @property
    def mean(self) -> float:
        return float(np.mean(self.solutions))

    @property
    def std(self) -> float:
        # population form
        return float(np.std(self.solutions))

    @property
    def mean_seconds(self) -> float:
        return float(np.mean(self.seconds))


@dataclass
class BenchReport:
    algorithms: Tuple[str, ...]
    dims: Tuple[int, ...]
    cells: Dict[Tuple[str, int], BenchCell] = field(default_factory=dict)

    def table(self, include_timing: bool = True) -> Dict[str, Dict[str, List[float]]]:
        out = {}
        for alg in self.algorithms:
            rows = {
                ROW_SOLUTIONS: [self.cells[alg, d].mean for d in self.dims],
                ROW_STD: [self.cells[alg, d].std for d in self.dims],
            }
            if include_timing:
                rows[ROW_TIME] = [self.cells[alg, d].mean_seconds for d in self.dims]
            out[alg] = rows
        return out


def run_bench(
    lex: Lexicon,
    criterion: CriterionConfig,
    dims: Sequence[int],
    algorithms: Sequence[str],
    params: SearchParams,
    seed: int,
    replicates: int,
    jobs: int = 1,
) -> BenchReport:
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    inventory = build_syllable_inventory(lex)
    report = BenchReport(tuple(algorithms), tuple(dims))
    for d in dims:
        problem = Problem(lex, inventory, criterion, d)
        for alg in algorithms:
            runs = run_replicates(alg, problem, params, seed, replicates, jobs)
            report.cells[alg, d] = BenchCell(
                tuple(len(sols) for sols, _ in runs), tuple(st.seconds for _, st in runs)
            )
    return report


def format_bench_report(report: BenchReport, include_timing: bool = True) -> str:
    """Tab-separated: ``algorithm, statistic, <one column per d>``."""
    header = ["algorithm", "statistic"] + [f"d={d}" for d in report.dims]
    lines = ["\t".join(header)]
    for alg, rows in report.table(include_timing).items():
        for name, values in rows.items():
            lines.append("\t".join([alg, name] + [f"{x:.6f}" for x in values]))
    return "\n".join(lines) + "\n"


def parse_bench_report(text: str) -> Dict[str, Dict[str, Dict[int, float]]]:
    """Read :func:`format_bench_report` output back as ``{alg: {statistic: {d: value}}}``."""
    lines = [ln for ln in text.splitlines() if ln]
    header = lines[0].split("\t")
    if header[:2] != ["algorithm", "statistic"]:
        raise ValueError("not a bench report")
    dims = [int(h.split("=", 1)[1]) for h in header[2:]]
    out: Dict[str, Dict[str, Dict[int, float]]] = {}
    for ln in lines[1:]:
        alg, stat, *values = ln.split("\t")
        out.setdefault(alg, {})[stat] = {d: float(x) for d, x in zip(dims, values)}
    return out
