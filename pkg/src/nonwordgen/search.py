"""Combinatorial reactive search over syllable-index vectors.

The trajectory moves one component at a time. Recently replaced values are
prohibited from being restored for a period ``T`` that grows when
configurations repeat and shrinks when they don't; if too many
configurations repeat too often the search escapes with a random walk.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

import numpy as np

from .problem import Configuration, Problem, random_configuration


@dataclass(frozen=True)
class SearchParams:
    rep: int = 3
    chaos: int = 3
    increase: float = 1.3
    decrease: float = 0.8
    chi_max: int = 300
    r_max: int = 8000
    max_iterations: int = 500
    target_solutions: Optional[int] = None
    # "random" or "best": how a move is picked when every move is prohibited
    prohibited_choice: str = "random"
    # also keep solutions reached only through prohibited moves
    record_prohibited: bool = True

    def __post_init__(self) -> None:
        for name in ("rep", "chaos", "chi_max", "r_max", "max_iterations"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not self.increase > 1:
            raise ValueError("increase must be > 1")
        if not 0 < self.decrease < 1:
            raise ValueError("decrease must be in (0, 1)")
        if self.target_solutions is not None and self.target_solutions < 1:
            raise ValueError("target_solutions must be >= 1 when set")
        if self.prohibited_choice not in ("random", "best"):
            raise ValueError("prohibited_choice must be 'random' or 'best'")


class MoveKey(NamedTuple):
    """Set component ``position`` to ``value``."""

    position: int
    value: int


@dataclass
class TabuMemory:
    last_use: Dict[MoveKey, int] = field(default_factory=dict)
    last_visit: Dict[Configuration, int] = field(default_factory=dict)
    repetitions: Dict[Configuration, int] = field(default_factory=dict)
    repeated: Set[Configuration] = field(default_factory=set)
    r_ave: float = 1.0
    T: float = 1.0
    t_T: int = 0

    def is_prohibited(self, m: MoveKey, t: int) -> bool:
        last = self.last_use.get(m)
        # a move stays prohibited for ceil(T) iterations after its last use
        return last is not None and last >= t - math.ceil(self.T)


@dataclass(frozen=True)
class Neighborhood:
    """Moves for every component and every value drawn into ``chi``.

    Ordered component-major, as a ``d x len(chi)`` matrix flattened by rows.
    """

    chi: Tuple[int, ...]
    moves: Tuple[MoveKey, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[MoveKey]:
        return iter(self.moves)


class SolutionEntry(NamedTuple):
    text: str
    syllables: Tuple[str, ...]
    iteration: int


class SolutionSet:
    """Insertion-ordered, duplicate-free store of accepted nonwords keyed by text."""

    def __init__(self) -> None:
        self._entries: Dict[str, SolutionEntry] = {}

    def add(self, text: str, syllables: Sequence[str], iteration: int) -> bool:
        if text in self._entries:
            return False
        self._entries[text] = SolutionEntry(text, tuple(syllables), iteration)
        return True

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, text: object) -> bool:
        return text in self._entries

    def __iter__(self) -> Iterator[SolutionEntry]:
        return iter(self._entries.values())

    def texts(self) -> Set[str]:
        return set(self._entries)

    def __repr__(self) -> str:
        return f"SolutionSet({len(self)} entries)"


@dataclass
class RunStats:
    algorithm: str
    iterations: int = 0
    solutions: int = 0
    diversifications: int = 0
    seconds: float = 0.0


def apply(v: Configuration, m: MoveKey) -> Configuration:
    return v[:m.position] + (m.value,) + v[m.position + 1:]


def neighborhood_generation(
    v: Configuration, rng: np.random.Generator, chi_max: int, n_syllables: int
) -> Neighborhood:
    """Randomized axis-aligned neighborhood of ``v``.

    ``min(chi_max, n_syllables)`` distinct values are drawn uniformly; every
    component is paired with every drawn value. Moves that leave a component
    unchanged are kept.
    """
    size = min(chi_max, n_syllables)
    chi = tuple(int(x) for x in rng.choice(n_syllables, size=size, replace=False))
    moves = tuple(MoveKey(j, x) for j in range(len(v)) for x in chi)
    return Neighborhood(chi, moves)


def partition_moves(
    nbhd: Neighborhood, mem: TabuMemory, t: int
) -> Tuple[List[MoveKey], List[MoveKey]]:
    """Split into ``(admissible, prohibited)`` at iteration ``t``."""
    admissible, prohibited = [], []
    for m in nbhd:
        (prohibited if mem.is_prohibited(m, t) else admissible).append(m)
    return admissible, prohibited


def memory_based_reaction(
    mem: TabuMemory, v: Configuration, t: int, params: SearchParams
) -> bool:
    """Update visit memory for ``v`` and adapt ``T``; True means escape."""
    last = mem.last_visit.get(v)
    if last is not None:
        cycle = t - last
        mem.last_visit[v] = t
        mem.repetitions[v] += 1
        if mem.repetitions[v] > params.rep:
            mem.repeated.add(v)
            if len(mem.repeated) > params.chaos:
                mem.repeated.clear()
                return True
        if cycle < params.r_max:
            mem.r_ave = 0.1 * cycle + 0.9 * mem.r_ave
            mem.T *= params.increase
            mem.t_T = t
    else:
        mem.last_visit[v] = t
        mem.repetitions[v] = 1
    if t - mem.t_T > mem.r_ave:
        mem.T = max(mem.T * params.decrease, 1.0)
        mem.t_T = t
    return False


def _argmax(
    moves: Sequence[MoveKey], scores: Sequence[float], rng: np.random.Generator
) -> MoveKey:
    best = max(scores)
    ties = [m for m, s in zip(moves, scores) if s == best]
    if len(ties) == 1:
        return ties[0]
    return ties[int(rng.integers(len(ties)))]


def best_move(
    nbhd: Neighborhood,
    v: Configuration,
    mem: TabuMemory,
    problem: Problem,
    solutions: SolutionSet,
    rng: np.random.Generator,
    t: int,
    params: SearchParams,
) -> MoveKey:
    """Pick the next move and record the solutions it sees.

    If some admissible move reaches a solution, one such move is taken at
    random; otherwise the best-scoring admissible move is taken (ties broken at
    random). With no admissible move at all, ``T`` shrinks and a prohibited
    move is taken, at random or by best score depending on
    ``params.prohibited_choice``.

    Solutions reached by admissible moves are always added to ``solutions``;
    those behind prohibited moves only when ``params.record_prohibited``.
    """
    if not len(nbhd):
        raise ValueError("empty neighborhood")
    admissible, prohibited = partition_moves(nbhd, mem, t)
    a_scores = [problem.score(apply(v, m)) for m in admissible]
    hits = [m for m, s in zip(admissible, a_scores) if s == 1.0]
    found = list(hits)
    if params.record_prohibited:
        found += [m for m in prohibited if problem.score(apply(v, m)) == 1.0]
    for m in found:
        u = apply(v, m)
        text = problem.text(u)
        if text not in solutions:
            solutions.add(text, problem.decode(u).syllables, t)

    if not admissible:
        mem.T = max(mem.T * params.decrease, 1.0)
        mem.t_T = t
        if params.prohibited_choice == "random":
            return prohibited[int(rng.integers(len(prohibited)))]
        return _argmax(prohibited, [problem.score(apply(v, m)) for m in prohibited], rng)
    if not hits:
        return _argmax(admissible, a_scores, rng)
    return hits[int(rng.integers(len(hits)))]


def apply_move(v: Configuration, m: MoveKey, mem: TabuMemory, t: int) -> Configuration:
    """Apply ``m`` and prohibit restoring the value it replaced."""
    mem.last_use[MoveKey(m.position, v[m.position])] = t
    return apply(v, m)


def diversification_steps(r_ave: float, n_moves: int) -> int:
    return max(1, math.floor(min(1 + r_ave / 2, n_moves)))


def diversify_search(
    mem: TabuMemory,
    v: Configuration,
    rng: np.random.Generator,
    t: int,
    n_syllables: int,
    n_moves: int,
    max_steps: Optional[int] = None,
) -> Tuple[Configuration, int]:
    """Forget visited configurations and random-walk away.

    Returns the new current configuration and iteration counter. ``r_ave``
    and ``T`` are left alone; each random jump prohibits restoring the
    values it overwrote.
    """
    mem.last_visit.clear()
    mem.repetitions.clear()
    steps = diversification_steps(mem.r_ave, n_moves)
    if max_steps is not None:
        steps = max(1, min(steps, max_steps))
    d = len(v)
    for _ in range(steps):
        sigma = random_configuration(rng, d, n_syllables)
        for i in range(d):
            mem.last_use[MoveKey(i, v[i])] = t
        v = sigma
        t += 1
    return v, t


TraceCallback = Callable[[int, Configuration, bool], None]


def run_crs(
    problem: Problem,
    params: SearchParams,
    rng: np.random.Generator,
    callback: Optional[TraceCallback] = None,
    memory: Optional[TabuMemory] = None,
    solutions: Optional[SolutionSet] = None,
) -> Tuple[SolutionSet, RunStats]:
    """Run the reactive search until the iteration budget or target is hit.

    ``callback(t, v, diversifying)`` is called with the start configuration
    and after every move; after a random walk it gets the walk's endpoint with
    ``diversifying=True``. ``memory`` and ``solutions`` may be supplied to
    observe the run's state from the callback.
    """
    stats = RunStats("crs")
    start = time.perf_counter()
    mem = memory if memory is not None else TabuMemory()
    solutions = solutions if solutions is not None else SolutionSet()
    n_syl = problem.n_syllables
    n_moves = min(params.chi_max, n_syl) * problem.d
    t = 0
    v = random_configuration(rng, problem.d, n_syl)
    if callback:
        callback(t, v, False)

    def done() -> bool:
        if params.target_solutions is not None and len(solutions) >= params.target_solutions:
            return True
        return t >= params.max_iterations

    while not done():
        if memory_based_reaction(mem, v, t, params):
            stats.diversifications += 1
            v, t = diversify_search(
                mem, v, rng, t, n_syl, n_moves, max_steps=params.max_iterations - t
            )
            if callback:
                callback(t, v, True)
            continue
        nbhd = neighborhood_generation(v, rng, params.chi_max, n_syl)
        m = best_move(nbhd, v, mem, problem, solutions, rng, t, params)
        v = apply_move(v, m, mem, t)
        t += 1
        if callback:
            callback(t, v, False)

    stats.iterations = t
    stats.solutions = len(solutions)
    stats.seconds = time.perf_counter() - start
    return solutions, stats
