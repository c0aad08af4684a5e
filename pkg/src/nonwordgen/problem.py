"""Candidate encoding and the relaxed criterion functions.

A candidate is a tuple of syllable indices into a :class:`SyllableInventory`.
Scores live in ``[0, 1]`` and equal 1 exactly when the underlying 0-1
criterion holds and the decoded string is not a real word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from .lexicon import Lexicon, SyllableInventory, build_syllable_inventory
from .stats import (
    MODES,
    TYPE,
    BigramPositionTable,
    NeighborIndex,
    build_bigram_table,
    count_orthographic_neighbors,
    psi_b,
    psi_w,
)

Configuration = Tuple[int, ...]

BIGRAM = "bigram"
NEIGHBORS = "neighbors"
KINDS = (BIGRAM, NEIGHBORS)

# largest float strictly below 1; failing candidates never reach a perfect score
_BELOW_ONE = math.nextafter(1.0, 0.0)


class EncodingError(ValueError):
    pass


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Nonword:
    text: str
    syllables: Tuple[str, ...]
    offsets: Tuple[int, ...]

    @classmethod
    def from_syllables(cls, syllables: Sequence[str]) -> "Nonword":
        syllables = tuple(syllables)
        offsets = (0,) + tuple(accumulate(len(s) for s in syllables[:-1]))
        return cls("".join(syllables), syllables, offsets)


@dataclass(frozen=True)
class CriterionConfig:
    """Which criterion to evaluate and its constants.

    ``delta_b=None`` means "use the bigram table's maximum count", which keeps
    the bigram penalty non-negative for any table.
    """

    kind: str = BIGRAM
    mode: str = TYPE
    delta_b: Optional[float] = None
    delta_n: float = 100.0
    neighbor_range: Tuple[int, int] = (1, 4)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.delta_b is not None and not self.delta_b > 0:
            raise ValueError("delta_b must be positive")
        if not self.delta_n > 0:
            raise ValueError("delta_n must be positive")
        a, b = self.neighbor_range
        if not 0 <= a <= b:
            raise ValueError(f"neighbor range must satisfy 0 <= a <= b, got {self.neighbor_range}")
        object.__setattr__(self, "neighbor_range", (int(a), int(b)))


def random_configuration(rng: np.random.Generator, d: int, n_syllables: int) -> Configuration:
    """Draw ``d`` independent uniform indices in ``[0, n_syllables)``."""
    if d < 1 or n_syllables < 1:
        raise ValueError("d and n_syllables must be positive")
    return tuple(int(x) for x in rng.integers(0, n_syllables, size=d))


def decode(v: Sequence[int], inv: SyllableInventory) -> Nonword:
    n = len(inv)
    for x in v:
        if not 0 <= x < n:
            raise EncodingError(f"component {x} outside [0, {n - 1}]")
    return Nonword.from_syllables([inv.syllables[x] for x in v])


def encode(syllables: Sequence[str], inv: SyllableInventory) -> Configuration:
    try:
        return tuple(inv.index(s) for s in syllables)
    except KeyError as exc:
        raise EncodingError(f"syllable {exc.args[0]!r} not in inventory") from None


def bigram_averages(w: Nonword, table: BigramPositionTable) -> Tuple[float, float]:
    """Mean within-syllable and mean boundary positional frequency of ``w``."""
    n = len(w.syllables)
    length = len(w.text)
    if n < 2:
        raise EvaluationError(f"{w.text!r}: bigram criterion needs at least two syllables")
    if length <= n:
        raise EvaluationError(f"{w.text!r}: no within-syllable bigrams")
    within = sum(psi_w(table, s, off) for s, off in zip(w.syllables, w.offsets))
    between = sum(
        psi_b(table, w.syllables[i], w.syllables[i + 1], w.offsets[i + 1] - 1)
        for i in range(n - 1)
    )
    return within / (length - n), between / (n - 1)


def _bigram_penalty(within: float, between: float, delta_b: float) -> float:
    if within <= between:
        return 1.0
    return min(max(0.0, 1.0 - (within - between) / delta_b), _BELOW_ONE)


def _neighbor_penalty(n: int, neighbor_range: Tuple[int, int], delta_n: float) -> float:
    a, b = neighbor_range
    if a <= n <= b:
        return 1.0
    return min(max(0.0, 1.0 - abs((a + b) / 2 - n) / delta_n), _BELOW_ONE)


def resolve_delta_b(cfg: CriterionConfig, table: BigramPositionTable) -> float:
    if cfg.delta_b is not None:
        return cfg.delta_b
    return table.max_count if table.max_count > 0 else 1.0


def score_bigram(
    w: Nonword, table: BigramPositionTable, cfg: CriterionConfig, lex: Lexicon
) -> float:
    """Relaxed "within-syllable bigrams are no more frequent than boundary bigrams"."""
    within, between = bigram_averages(w, table)
    if w.text in lex.word_set:
        return 0.0
    return _bigram_penalty(within, between, resolve_delta_b(cfg, table))


def score_neighbors(
    w: Nonword, index: NeighborIndex, cfg: CriterionConfig, lex: Lexicon
) -> float:
    """Relaxed "orthographic neighborhood size lies in the configured range"."""
    if w.text in lex.word_set:
        return 0.0
    n = count_orthographic_neighbors(index, w.text)
    return _neighbor_penalty(n, cfg.neighbor_range, cfg.delta_n)


@dataclass
class Problem:
    """Everything a search run reads: inventory, criterion data, dimension.

    ``score`` memoizes per configuration; all other state is immutable.
    Configurations the bigram criterion cannot evaluate (every syllable one
    letter long) score 0 here instead of raising, so a search never aborts on
    them.
    """

    lexicon: Lexicon
    inventory: SyllableInventory
    criterion: CriterionConfig
    d: int
    table: Optional[BigramPositionTable] = None
    index: Optional[NeighborIndex] = None
    _cache: Dict[Configuration, float] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if self.criterion.kind == BIGRAM:
            if self.d < 2:
                raise ValueError("the bigram criterion needs d >= 2 syllables")
            if self.table is None:
                self.table = build_bigram_table(self.lexicon, self.criterion.mode)
            self._delta_b = resolve_delta_b(self.criterion, self.table)
        elif self.index is None:
            self.index = NeighborIndex.from_lexicon(self.lexicon)
        syl = self.inventory.syllables
        self._first = tuple(s[0] for s in syl)
        self._last = tuple(s[-1] for s in syl)
        self._lens = tuple(len(s) for s in syl)
        self._psi_w_cache: Dict[Tuple[int, int], float] = {}

    @classmethod
    def from_lexicon(cls, lex: Lexicon, criterion: CriterionConfig, d: int) -> "Problem":
        return cls(lex, build_syllable_inventory(lex), criterion, d)

    @property
    def n_syllables(self) -> int:
        return len(self.inventory)

    def decode(self, v: Sequence[int]) -> Nonword:
        return decode(v, self.inventory)

    def text(self, v: Sequence[int]) -> str:
        syl = self.inventory.syllables
        return "".join(syl[x] for x in v)

    def score(self, v: Configuration) -> float:
        cached = self._cache.get(v)
        if cached is None:
            cached = self._cache[v] = self._evaluate(v)
        return cached

    def evaluate_nonword(self, w: Nonword) -> float:
        """Uncached scoring of an arbitrary decoded nonword; may raise."""
        if self.criterion.kind == BIGRAM:
            return score_bigram(w, self.table, self.criterion, self.lexicon)
        return score_neighbors(w, self.index, self.criterion, self.lexicon)

    def _evaluate(self, v: Configuration) -> float:
        text = self.text(v)
        if text in self.lexicon.word_set:
            return 0.0
        if self.criterion.kind == NEIGHBORS:
            n = count_orthographic_neighbors(self.index, text)
            return _neighbor_penalty(n, self.criterion.neighbor_range, self.criterion.delta_n)
        length = len(text)
        if length <= len(v):
            return 0.0
        counts = self.table.counts
        within = between = 0.0
        off = 0
        for i, x in enumerate(v):
            if i:
                between += counts.get((self._last[v[i - 1]] + self._first[x], off - 1), 0.0)
            within += self._psi_w(x, off)
            off += self._lens[x]
        return _bigram_penalty(within / (length - len(v)), between / (len(v) - 1), self._delta_b)

    def _psi_w(self, x: int, offset: int) -> float:
        key = (x, offset)
        value = self._psi_w_cache.get(key)
        if value is None:
            value = self._psi_w_cache[key] = psi_w(self.table, self.inventory.syllables[x], offset)
        return value
