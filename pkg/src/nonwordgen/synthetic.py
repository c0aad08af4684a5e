"""Seeded synthetic syllabified lexicons with Zipf-like frequencies.

Stand-ins for a real frequency dictionary when testing or benchmarking.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from .lexicon import Lexicon, LexiconEntry

ONSETS = ("", "b", "c", "d", "f", "g", "l", "m", "n", "p", "r", "s", "t", "v", "ch",
          "br", "tr", "pl", "gr", "cl")
VOWELS = ("a", "e", "i", "o", "u")
CODAS = ("", "", "", "n", "s", "r", "l")


def syllable_pool(n: int, rng: np.random.Generator) -> List[str]:
    """``n`` distinct onset-vowel-coda syllables (fewer if the pool runs out)."""
    pool = sorted({o + v + c for o in ONSETS for v in VOWELS for c in CODAS})
    n = min(n, len(pool))
    return [pool[i] for i in rng.choice(len(pool), size=n, replace=False)]


def zipf_weights(n: int, exponent: float = 1.0) -> np.ndarray:
    w = 1.0 / np.arange(1, n + 1) ** exponent
    return w / w.sum()


def synthetic_lexicon(
    n_words: int = 2000,
    n_syllables: int = 200,
    seed: int = 0,
    length_probs: Sequence[float] = (0.1, 0.4, 0.35, 0.15),
    max_frequency: float = 50000.0,
    zipf_exponent: float = 1.0,
    rng: Optional[np.random.Generator] = None,
) -> Lexicon:
    """Draw distinct words from a Zipf-weighted syllable pool.

    Word ``k`` (in draw order) gets frequency ``max_frequency / k`` rounded to
    an integer, at least 1. ``length_probs[i]`` is the probability of a word
    with ``i + 1`` syllables.
    """
    rng = rng if rng is not None else np.random.default_rng(seed)
    pool = syllable_pool(n_syllables, rng)
    weights = zipf_weights(len(pool), zipf_exponent)
    lengths = np.arange(1, len(length_probs) + 1)
    probs = np.asarray(length_probs, dtype=float)
    probs = probs / probs.sum()

    seen = set()
    entries: List[LexiconEntry] = []
    attempts = 0
    while len(entries) < n_words and attempts < 50 * n_words:
        attempts += 1
        k = int(rng.choice(lengths, p=probs))
        syl = tuple(pool[i] for i in rng.choice(len(pool), size=k, p=weights))
        word = "".join(syl)
        if word in seen:
            continue
        seen.add(word)
        rank = len(entries) + 1
        entries.append(LexiconEntry(word, float(max(1, round(max_frequency / rank))), syl))
    return Lexicon(tuple(entries))


def random_small_lexicon(rng: np.random.Generator, max_words: int = 200) -> Lexicon:
    """A small lexicon with random size, alphabet and (possibly repeated) words."""
    n_words = int(rng.integers(1, max_words + 1))
    n_syl = int(rng.integers(2, 40))
    pool = syllable_pool(n_syl, rng)
    entries = []
    for _ in range(n_words):
        k = int(rng.integers(1, 5))
        syl = tuple(pool[i] for i in rng.integers(0, len(pool), size=k))
        freq = float(rng.integers(0, 1000)) if rng.random() < 0.7 else float(rng.random() * 100)
        entries.append(LexiconEntry("".join(syl), freq, syl))
    return Lexicon(tuple(entries))
