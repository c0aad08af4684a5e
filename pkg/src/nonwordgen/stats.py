"""Positional bigram frequencies and orthographic neighbor counts."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from .lexicon import Lexicon, type_view

TOKEN = "token"
TYPE = "type"
MODES = (TOKEN, TYPE)

BigramKey = Tuple[str, int]


@dataclass(frozen=True)
class BigramPositionTable:
    """Counts of ``(bigram, position)`` pairs.

    ``position`` is the 0-based index of the bigram's first character in the
    word, so "ic" sits at 5 in "pacific" and at 6 in "specific". Keys that were
    never observed are simply absent and read as 0.
    """

    counts: Mapping[BigramKey, float]
    mode: str
    max_count: float = field(init=False)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        counts = {k: float(v) for k, v in self.counts.items() if v > 0}
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "max_count", max(counts.values(), default=0.0))

    def get(self, bigram: str, position: int) -> float:
        return self.counts.get((bigram, position), 0.0)

    def __len__(self) -> int:
        return len(self.counts)

    def total(self) -> float:
        return sum(self.counts.values())


def build_bigram_table(lex: Lexicon, mode: str = TYPE) -> BigramPositionTable:
    """Tabulate positional bigram frequencies.

    In ``token`` mode every occurrence is weighted by the entry's frequency; in
    ``type`` mode each distinct word contributes once.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not lex.entries:
        raise ValueError("cannot build a bigram table from an empty lexicon")
    source = type_view(lex) if mode == TYPE else lex
    counts: Dict[BigramKey, float] = defaultdict(float)
    for entry in source:
        w = entry.word
        for p in range(len(w) - 1):
            counts[(w[p:p + 2], p)] += entry.frequency
    return BigramPositionTable(counts, mode)


def psi_w(table: BigramPositionTable, syllable: str, offset: int) -> float:
    """Summed positional frequency of the bigrams inside ``syllable``.

    ``offset`` is where the syllable starts within the whole nonword.
    """
    get = table.counts.get
    return sum(get((syllable[k:k + 2], offset + k), 0.0) for k in range(len(syllable) - 1))


def psi_b(table: BigramPositionTable, left: str, right: str, boundary_pos: int) -> float:
    """Positional frequency of the bigram straddling a syllable boundary.

    ``boundary_pos`` is the position of the last character of ``left``.
    """
    return table.counts.get((left[-1] + right[0], boundary_pos), 0.0)


def dump_bigram_table(table: BigramPositionTable) -> str:
    """Tab-separated ``bigram, position, count`` lines sorted by key."""
    lines = []
    for (bigram, pos), count in sorted(table.counts.items()):
        c = int(count) if float(count).is_integer() else count
        lines.append(f"{bigram}\t{pos}\t{c}\n")
    return "".join(lines)


def _wildcards(word: str) -> Iterable[str]:
    for i in range(len(word)):
        yield word[:i] + "\0" + word[i + 1:]


@dataclass(frozen=True)
class NeighborIndex:
    """Lexicon words grouped by length, plus one-letter-wildcard pattern counts.

    A word ``u`` of the same length as ``c`` differs from it in exactly one
    position ``i`` iff both share the pattern with position ``i`` blanked out
    and ``u != c``; each such neighbor matches exactly one pattern of ``c``.
    """

    words_by_length: Mapping[int, FrozenSet[str]]
    _patterns: Mapping[str, int] = field(repr=False, compare=False)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "NeighborIndex":
        by_len: Dict[int, set] = defaultdict(set)
        for w in words:
            by_len[len(w)].add(w)
        frozen = {n: frozenset(ws) for n, ws in by_len.items()}
        patterns = Counter(p for ws in frozen.values() for w in ws for p in _wildcards(w))
        return cls(frozen, dict(patterns))

    @classmethod
    def from_lexicon(cls, lex: Lexicon) -> "NeighborIndex":
        return cls.from_words(lex.word_set)

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and word in self.words_by_length.get(len(word), ())


def count_orthographic_neighbors(index: NeighborIndex, candidate: str) -> int:
    """Number of indexed words at Hamming distance exactly 1 from ``candidate``."""
    if candidate not in index:
        return sum(index._patterns.get(p, 0) for p in _wildcards(candidate))
    # the candidate matches each of its own patterns once
    return sum(index._patterns.get(p, 0) - 1 for p in _wildcards(candidate))


def is_word(lex: Lexicon, candidate: str) -> bool:
    return candidate in lex.word_set
