"""scikit-learn style front ends.

``fit`` takes a lexicon (a :class:`Lexicon`, a path, lines or records) and
builds everything the criterion needs; generators also run their search and
expose the result as ``solutions_`` and ``stats_``.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .baseline import run_cils
from .lexicon import build_syllable_inventory
from .problem import CriterionConfig, Problem
from .search import SearchParams, SolutionEntry, run_crs
from .validation import check_configurations, check_lexicon, check_rng


class NonwordScorer(BaseEstimator):
    """Score syllable-index configurations against a lexicon-derived criterion.

    Parameters
    ----------
    n_syllables : int
        Number of syllables per candidate.
    criterion : {"bigram", "neighbors"}
    mode : {"type", "token"}
        Bigram frequency mode; ignored by the neighbors criterion.
    delta_b : float or None
        Bigram penalty scale. ``None`` uses the table's maximum count.
    delta_n : float
        Neighbor penalty scale.
    neighbor_range : tuple of int
        Accepted neighborhood sizes ``(a, b)``, inclusive.
    """

    def __init__(
        self,
        n_syllables: int = 2,
        criterion: str = "bigram",
        mode: str = "type",
        delta_b: Optional[float] = None,
        delta_n: float = 100.0,
        neighbor_range: Tuple[int, int] = (1, 4),
    ):
        self.n_syllables = n_syllables
        self.criterion = criterion
        self.mode = mode
        self.delta_b = delta_b
        self.delta_n = delta_n
        self.neighbor_range = neighbor_range

    def _criterion_config(self) -> CriterionConfig:
        return CriterionConfig(
            kind=self.criterion,
            mode=self.mode,
            delta_b=self.delta_b,
            delta_n=self.delta_n,
            neighbor_range=tuple(self.neighbor_range),
        )

    def _build_problem(self, X) -> Problem:
        lex = check_lexicon(X)
        self.lexicon_ = lex
        self.inventory_ = build_syllable_inventory(lex)
        self.problem_ = Problem(lex, self.inventory_, self._criterion_config(), self.n_syllables)
        return self.problem_

    def fit(self, X, y=None):
        self._build_problem(X)
        return self

    def score_samples(self, X) -> np.ndarray:
        """Relaxed scores in ``[0, 1]`` for each row of syllable indices."""
        check_is_fitted(self, "problem_")
        rows = check_configurations(X, self.n_syllables, len(self.inventory_))
        return np.array([self.problem_.score(v) for v in rows], dtype=float)

    def predict(self, X) -> np.ndarray:
        """True where a row satisfies the criterion and is not a real word."""
        return self.score_samples(X) == 1.0

    def decode(self, X) -> List[str]:
        check_is_fitted(self, "problem_")
        rows = check_configurations(X, self.n_syllables, len(self.inventory_))
        return [self.problem_.text(v) for v in rows]

    def encode(self, syllables) -> np.ndarray:
        """Inverse of :meth:`decode` for lists of syllable strings."""
        check_is_fitted(self, "problem_")
        return np.array([[self.inventory_.index(s) for s in row] for row in syllables], dtype=int)


class _SearchGenerator(NonwordScorer):
    _algorithm = None

    def __init__(
        self,
        n_syllables: int = 2,
        criterion: str = "bigram",
        mode: str = "type",
        delta_b: Optional[float] = None,
        delta_n: float = 100.0,
        neighbor_range: Tuple[int, int] = (1, 4),
        max_iter: int = 500,
        target_solutions: Optional[int] = None,
        chi_max: int = 300,
        rep: int = 3,
        chaos: int = 3,
        increase: float = 1.3,
        decrease: float = 0.8,
        r_max: int = 8000,
        prohibited_choice: str = "random",
        record_prohibited: bool = True,
        random_state=None,
    ):
        super().__init__(n_syllables, criterion, mode, delta_b, delta_n, neighbor_range)
        self.max_iter = max_iter
        self.target_solutions = target_solutions
        self.chi_max = chi_max
        self.rep = rep
        self.chaos = chaos
        self.increase = increase
        self.decrease = decrease
        self.r_max = r_max
        self.prohibited_choice = prohibited_choice
        self.record_prohibited = record_prohibited
        self.random_state = random_state

    def search_params(self) -> SearchParams:
        return SearchParams(
            rep=self.rep,
            chaos=self.chaos,
            increase=self.increase,
            decrease=self.decrease,
            chi_max=self.chi_max,
            r_max=self.r_max,
            max_iterations=self.max_iter,
            target_solutions=self.target_solutions,
            prohibited_choice=self.prohibited_choice,
            record_prohibited=self.record_prohibited,
        )

    def fit(self, X, y=None):
        problem = self._build_problem(X)
        self.solutions_, self.stats_ = self._algorithm(
            problem, self.search_params(), check_rng(self.random_state)
        )
        return self

    def get_solutions(self) -> List[SolutionEntry]:
        check_is_fitted(self, "solutions_")
        return list(self.solutions_)


class ReactiveSearchGenerator(_SearchGenerator):
    """Generate nonwords with the reactive prohibition-based search.

    Takes every parameter of :class:`NonwordScorer` plus the search budget
    (``max_iter``, ``target_solutions``), neighborhood sampling size
    ``chi_max``, the reaction constants ``rep``, ``chaos``, ``increase``,
    ``decrease`` and ``r_max``, and ``random_state``.

    ``prohibited_choice`` ("random" or "best") selects how a move is picked
    when every move is prohibited; ``record_prohibited`` controls whether
    solutions reached only through prohibited moves are kept.
    """

    _algorithm = staticmethod(run_crs)


class IteratedLocalSearchGenerator(_SearchGenerator):
    """Random-restart baseline; same parameters, reaction settings unused."""

    _algorithm = staticmethod(run_cils)
