import numpy as np
import pytest

import nonwordgen.search as search
from nonwordgen.baseline import local_search, run_cils
from nonwordgen.lexicon import build_syllable_inventory, parse_lexicon
from nonwordgen.problem import CriterionConfig, Problem
from nonwordgen.search import SearchParams, SolutionSet


@pytest.fixture
def fix3_problem(fix3):
    return Problem(fix3, build_syllable_inventory(fix3), CriterionConfig("bigram", "type"), 2)


def test_local_search_toy(fix3_problem):
    D = SolutionSet()
    added = local_search((0, 0), fix3_problem, D, np.random.default_rng(0), 300)
    # reachable from (0,0): (0,0) tata, (1,0) tota, (0,1) tato; only tata passes
    assert added == 1 and D.texts() == {"tata"}


def test_local_search_unsatisfiable(fix3):
    prob = Problem(fix3, build_syllable_inventory(fix3),
                   CriterionConfig("neighbors", neighbor_range=(50, 60)), 2)
    D = SolutionSet()
    assert local_search((1, 0), prob, D, np.random.default_rng(0), 300) == 0
    assert len(D) == 0


def test_local_search_dedupes_equal_texts():
    # "a"+"ba" and "ab"+"a" both spell "aba"
    lex = parse_lexicon("aab\t1\ta-ab\nbaba\t1\tba-ba\n")
    prob = Problem.from_lexicon(lex, CriterionConfig("neighbors", neighbor_range=(0, 5)), 2)
    inv = prob.inventory
    assert inv.syllables == ("a", "ab", "ba")
    D = SolutionSet()
    added = local_search((0, 2), prob, D, np.random.default_rng(0), 300)
    texts = [e.text for e in D]
    assert len(texts) == len(set(texts)) == added
    assert "aba" in D


def test_run_cils_matches_enumeration(fix3_problem):
    D, stats = run_cils(fix3_problem, SearchParams(max_iterations=50), np.random.default_rng(1))
    assert D.texts() == {"tata"}
    assert stats.iterations == 50


def test_run_cils_deterministic_and_monotone(toy_lexicon):
    prob = Problem.from_lexicon(toy_lexicon, CriterionConfig(), 3)
    a, _ = run_cils(prob, SearchParams(max_iterations=200), np.random.default_rng(9))
    b, _ = run_cils(prob, SearchParams(max_iterations=200), np.random.default_rng(9))
    assert list(a) == list(b)
    iters = [e.iteration for e in a]
    assert iters == sorted(iters)


def test_run_cils_touches_no_tabu_memory(toy_lexicon, monkeypatch):
    def forbidden(*a, **k):
        raise AssertionError("baseline must not use reactive memory")

    for name in ("memory_based_reaction", "partition_moves", "apply_move", "diversify_search", "best_move"):
        monkeypatch.setattr(search, name, forbidden)
    prob = Problem.from_lexicon(toy_lexicon, CriterionConfig(), 3)
    D, _ = run_cils(prob, SearchParams(max_iterations=30), np.random.default_rng(0))
    assert all(prob.evaluate_nonword(prob.decode([prob.inventory.index(s) for s in e.syllables])) == 1.0
               for e in D)


def test_run_cils_target(toy_lexicon):
    prob = Problem.from_lexicon(toy_lexicon, CriterionConfig(), 3)
    D, stats = run_cils(prob, SearchParams(max_iterations=5000, target_solutions=5),
                        np.random.default_rng(0))
    assert len(D) >= 5 and stats.iterations < 5000
