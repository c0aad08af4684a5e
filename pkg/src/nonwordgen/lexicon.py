"""Syllabified frequency lexicons: parsing, serialization and derived views."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

SYLLABLE_SEP = "-"
FIELD_SEP = "\t"


class LexiconError(ValueError):
    """Base class for lexicon problems."""


class LexiconParseError(LexiconError):
    """A line could not be split into well-formed fields."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class LexiconValidationError(LexiconError):
    """A well-formed line describes an inconsistent entry."""

    def __init__(self, word: str, message: str) -> None:
        super().__init__(f"{word!r}: {message}")
        self.word = word


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    frequency: float
    syllables: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.word:
            raise LexiconValidationError(self.word, "empty word")
        if not self.word.isalpha() or self.word != self.word.lower():
            raise LexiconValidationError(self.word, "word must be lowercase letters only")
        if not (math.isfinite(self.frequency) and self.frequency >= 0):
            raise LexiconValidationError(self.word, f"invalid frequency {self.frequency!r}")
        if not self.syllables or any(not s for s in self.syllables):
            raise LexiconValidationError(self.word, "empty syllable")
        joined = "".join(self.syllables)
        if joined != self.word:
            raise LexiconValidationError(
                self.word, f"syllables join to {joined!r}, not the word"
            )


@dataclass(frozen=True)
class Lexicon:
    """An ordered list of entries plus the derived word set and alphabet."""

    entries: Tuple[LexiconEntry, ...]
    word_set: frozenset = field(init=False, compare=False)
    alphabet: frozenset = field(init=False, compare=False)

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "word_set", frozenset(e.word for e in entries))
        object.__setattr__(
            self, "alphabet", frozenset(ch for e in entries for ch in e.word)
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self.entries)

    def __contains__(self, word: object) -> bool:
        return word in self.word_set


@dataclass(frozen=True)
class SyllableInventory:
    """Distinct syllables in a fixed order; a syllable's index is its code."""

    syllables: Tuple[str, ...]

    def __post_init__(self) -> None:
        syllables = tuple(self.syllables)
        object.__setattr__(self, "syllables", syllables)
        if not syllables:
            raise LexiconError("syllable inventory must not be empty")
        if len(set(syllables)) != len(syllables):
            raise LexiconError("syllable inventory contains duplicates")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(syllables)})

    @property
    def cardinality(self) -> int:
        return len(self.syllables)

    def __len__(self) -> int:
        return len(self.syllables)

    def __getitem__(self, i: int) -> str:
        return self.syllables[i]

    def index(self, syllable: str) -> int:
        return self._index[syllable]


def _parse_frequency(text: str, lineno: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise LexiconParseError(lineno, f"non-numeric frequency {text!r}") from None
    if not math.isfinite(value) or value < 0:
        raise LexiconParseError(lineno, f"frequency must be finite and >= 0, got {text!r}")
    return value


def parse_lexicon(source: Union[str, Iterable[str]]) -> Lexicon:
    """Parse a tab-separated syllabified lexicon.

    Parameters
    ----------
    source : str or iterable of str
        Either the full text or an iterable of lines (an open text file works).
        Each data line is ``word<TAB>frequency<TAB>syl-syl-...``; blank lines
        and lines starting with ``#`` are skipped.

    Returns
    -------
    Lexicon
        Entries in file order. Words and syllables are lowercased.

    Raises
    ------
    LexiconParseError
        Wrong field count or a bad frequency, with the line number.
    LexiconValidationError
        The syllables do not concatenate to the word.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    entries: List[LexiconEntry] = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split(FIELD_SEP)
        if len(fields) != 3:
            raise LexiconParseError(lineno, f"expected 3 tab-separated fields, got {len(fields)}")
        word, freq_text, syll_text = (f.strip() for f in fields)
        frequency = _parse_frequency(freq_text, lineno)
        word = word.lower()
        syllables = tuple(syll_text.lower().split(SYLLABLE_SEP))
        entries.append(LexiconEntry(word, frequency, syllables))
    return Lexicon(tuple(entries))


def read_lexicon(path: Union[str, Path]) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh)


def format_frequency(value: float) -> str:
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def format_entry(entry: LexiconEntry) -> str:
    return FIELD_SEP.join(
        (entry.word, format_frequency(entry.frequency), SYLLABLE_SEP.join(entry.syllables))
    )


def dump_lexicon(lex: Lexicon) -> str:
    """Serialize to the format read by :func:`parse_lexicon`."""
    return "".join(format_entry(e) + "\n" for e in lex.entries)


def write_lexicon(lex: Lexicon, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_lexicon(lex), encoding="utf-8")


def build_syllable_inventory(lex: Lexicon) -> SyllableInventory:
    """Distinct syllables of ``lex`` in lexicographic order."""
    if not lex.entries:
        raise LexiconError("cannot build a syllable inventory from an empty lexicon")
    return SyllableInventory(tuple(sorted({s for e in lex.entries for s in e.syllables})))


def type_view(lex: Lexicon) -> Lexicon:
    """One entry per distinct word (first syllabification wins), frequency 1."""
    seen = set()
    out = []
    for e in lex.entries:
        if e.word in seen:
            continue
        seen.add(e.word)
        out.append(LexiconEntry(e.word, 1.0, e.syllables))
    return Lexicon(tuple(out))


def lexicon_from_records(records: Sequence[Tuple[str, float, Sequence[str]]]) -> Lexicon:
    """Build a lexicon from ``(word, frequency, syllables)`` tuples."""
    return Lexicon(tuple(LexiconEntry(w.lower(), float(f), tuple(s.lower() for s in syl))
                         for w, f, syl in records))
