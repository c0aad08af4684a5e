"""Input coercion helpers shared by the estimators and the CLI."""

from __future__ import annotations

import numbers
import os
from typing import Any, List, Optional

import numpy as np

from .lexicon import Lexicon, lexicon_from_records, parse_lexicon, read_lexicon
from .problem import Configuration


def check_lexicon(X: Any) -> Lexicon:
    """Accept a Lexicon, a path, an iterable of lines or ``(word, freq, syllables)`` records."""
    if isinstance(X, Lexicon):
        return X
    if isinstance(X, (str, os.PathLike)):
        return read_lexicon(X)
    items = list(X)
    if not items:
        raise ValueError("empty lexicon input")
    if all(isinstance(x, str) for x in items):
        return parse_lexicon(items)
    return lexicon_from_records(items)


def check_rng(random_state: Any = None) -> np.random.Generator:
    """Turn ``None``, an int seed, a SeedSequence or a Generator into a Generator."""
    if isinstance(random_state, np.random.Generator):
        return random_state
    if random_state is None or isinstance(random_state, (numbers.Integral, np.random.SeedSequence)):
        return np.random.default_rng(random_state)
    raise ValueError(f"cannot build a random generator from {random_state!r}")


def check_configurations(X: Any, d: Optional[int], n_syllables: int) -> List[Configuration]:
    """Validate a 2-D array-like of syllable indices."""
    arr = np.asarray(X)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array of configurations, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("configurations must contain integers")
    if d is not None and arr.shape[1] != d:
        raise ValueError(f"expected {d} components per configuration, got {arr.shape[1]}")
    if arr.size and (arr.min() < 0 or arr.max() >= n_syllables):
        raise ValueError(f"components must lie in [0, {n_syllables - 1}]")
    return [tuple(int(x) for x in row) for row in arr]
