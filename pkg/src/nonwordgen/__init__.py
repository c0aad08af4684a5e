"""Pseudoword generation by reactive combinatorial search over syllable inventories."""

from .baseline import local_search, run_cils
from .estimator import IteratedLocalSearchGenerator, NonwordScorer, ReactiveSearchGenerator
from .lexicon import (
    Lexicon,
    LexiconEntry,
    LexiconError,
    LexiconParseError,
    LexiconValidationError,
    SyllableInventory,
    build_syllable_inventory,
    dump_lexicon,
    parse_lexicon,
    read_lexicon,
    type_view,
)
from .problem import (
    CriterionConfig,
    EncodingError,
    EvaluationError,
    Nonword,
    Problem,
    decode,
    random_configuration,
    score_bigram,
    score_neighbors,
)
from .search import SearchParams, SolutionSet, run_crs
from .stats import (
    BigramPositionTable,
    NeighborIndex,
    build_bigram_table,
    count_orthographic_neighbors,
    is_word,
    psi_b,
    psi_w,
)

__version__ = "0.1.0"
