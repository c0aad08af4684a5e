import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import ReferenceReaction

from nonwordgen.lexicon import build_syllable_inventory
from nonwordgen.problem import CriterionConfig, Problem
from nonwordgen.search import (
    MoveKey,
    Neighborhood,
    SearchParams,
    SolutionSet,
    TabuMemory,
    apply_move,
    best_move,
    diversification_steps,
    diversify_search,
    memory_based_reaction,
    neighborhood_generation,
    partition_moves,
    run_crs,
)

PARAMS = SearchParams()


class StubProblem:
    """Scores looked up from a dict; text is the tuple spelled out."""

    def __init__(self, scores, default=0.0):
        self.scores = scores
        self.default = default

    def score(self, v):
        return self.scores.get(v, self.default)

    def text(self, v):
        return "-".join(map(str, v))

    def decode(self, v):
        class W:
            syllables = tuple(map(str, v))
        return W()


def nbhd_of(moves):
    return Neighborhood(tuple(sorted({m.value for m in moves})), tuple(moves))


# -- neighborhood generation ------------------------------------------------

def test_neighborhood_small_space():
    nb = neighborhood_generation((0, 1), np.random.default_rng(0), 300, 2)
    assert sorted(nb.chi) == [0, 1]
    assert set(nb.moves) == {MoveKey(0, 0), MoveKey(0, 1), MoveKey(1, 0), MoveKey(1, 1)}
    assert len(nb) == 4


def test_neighborhood_single_syllable():
    nb = neighborhood_generation((0, 0, 0), np.random.default_rng(0), 300, 1)
    assert nb.chi == (0,)
    assert list(nb) == [MoveKey(0, 0), MoveKey(1, 0), MoveKey(2, 0)]


def test_neighborhood_seeded():
    a = neighborhood_generation((3, 4), np.random.default_rng(5), 10, 100)
    b = neighborhood_generation((3, 4), np.random.default_rng(5), 10, 100)
    assert a == b


@given(st.integers(1, 400), st.integers(1, 50), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_neighborhood_shape(n_syl, chi_max, d, seed):
    nb = neighborhood_generation(tuple([0] * d), np.random.default_rng(seed), chi_max, n_syl)
    assert len(set(nb.chi)) == len(nb.chi) == min(chi_max, n_syl)
    assert all(0 <= x < n_syl for x in nb.chi)
    assert len(nb) == d * len(nb.chi)
    # component-major order
    assert [m.position for m in nb] == [j for j in range(d) for _ in nb.chi]


# -- prohibition ------------------------------------------------------------

def test_partition_fresh_memory():
    nb = nbhd_of([MoveKey(0, 1), MoveKey(1, 2)])
    admissible, prohibited = partition_moves(nb, TabuMemory(), 10)
    assert admissible == list(nb) and prohibited == []


def test_partition_inequality():
    mem = TabuMemory(T=1.0)
    m = MoveKey(0, 1)
    mem.last_use[m] = 9
    assert partition_moves(nbhd_of([m]), mem, 10) == ([], [m])
    mem = TabuMemory(T=1.3)
    mem.last_use[m] = 5
    assert partition_moves(nbhd_of([m]), mem, 10) == ([m], [])


def test_apply_move_records_inverse():
    mem = TabuMemory()
    v = apply_move((0, 1), MoveKey(1, 0), mem, 4)
    assert v == (0, 0)
    assert mem.last_use == {MoveKey(1, 1): 4}


def test_null_move():
    mem = TabuMemory()
    assert apply_move((2, 1), MoveKey(0, 2), mem, 3) == (2, 1)
    assert mem.last_use == {MoveKey(0, 2): 3}


def test_two_moves_two_keys():
    mem = TabuMemory()
    v = apply_move((0, 0, 0), MoveKey(0, 5), mem, 1)
    v = apply_move(v, MoveKey(2, 7), mem, 2)
    assert v == (5, 0, 7)
    assert mem.last_use == {MoveKey(0, 0): 1, MoveKey(2, 0): 2}


@settings(max_examples=200)
@given(st.integers(0, 9), st.integers(0, 9), st.floats(1.0, 20.0), st.integers(0, 1000))
def test_inverse_prohibited_next_iteration(old, new, T, t):
    mem = TabuMemory(T=T)
    apply_move((old,), MoveKey(0, new), mem, t)
    _, prohibited = partition_moves(nbhd_of([MoveKey(0, old)]), mem, t + 1)
    assert prohibited == [MoveKey(0, old)]


# -- memory-based reaction --------------------------------------------------

def test_first_visit_installs():
    mem = TabuMemory()
    assert memory_based_reaction(mem, (1, 2), 7, PARAMS) is False
    assert mem.last_visit[(1, 2)] == 7
    assert mem.repetitions[(1, 2)] == 1


def test_revisit_trace():
    v = (1, 2)
    mem = TabuMemory(r_ave=1.0, T=1.0, t_T=10)
    mem.last_visit[v] = 5
    mem.repetitions[v] = 1
    assert memory_based_reaction(mem, v, 10, PARAMS) is False
    assert mem.r_ave == pytest.approx(1.4, rel=1e-12)
    assert mem.T == pytest.approx(1.3, rel=1e-12)
    assert mem.t_T == 10
    assert mem.last_visit[v] == 10 and mem.repetitions[v] == 2


def test_decrease_branch_floor():
    mem = TabuMemory(T=1.1, t_T=0, r_ave=1.0)
    memory_based_reaction(mem, (0,), 5, PARAMS)
    assert mem.T == 1.0 and mem.t_T == 5


def test_escape_when_four_configurations_repeat():
    mem = TabuMemory()
    cycle = [(0,), (1,), (2,), (3,)]
    fired = []
    for t in range(16):
        fired.append(memory_based_reaction(mem, cycle[t % 4], t, PARAMS))
    assert fired == [False] * 15 + [True]
    assert mem.repeated == set()


def test_r_max_blocks_increase():
    params = SearchParams(r_max=3)
    mem = TabuMemory(t_T=0)
    memory_based_reaction(mem, (0,), 0, params)
    memory_based_reaction(mem, (0,), 3, params)
    assert mem.T == 1.0
    assert mem.r_ave == 1.0


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=200))
def test_reaction_matches_reference(visits):
    mem = TabuMemory()
    ref = ReferenceReaction()
    for t, x in enumerate(visits):
        assert memory_based_reaction(mem, (x,), t, PARAMS) == ref.visit((x,), t)
        assert mem.T == pytest.approx(ref.T, rel=1e-12)
        assert mem.r_ave == pytest.approx(ref.r_ave, rel=1e-12)
        assert mem.T >= 1.0


# -- best move --------------------------------------------------------------

def test_best_move_unique_argmax():
    v = (0, 0)
    moves = [MoveKey(0, 1), MoveKey(0, 2), MoveKey(1, 1)]
    prob = StubProblem({(1, 0): 0.3, (2, 0): 0.9, (0, 1): 0.5})
    D = SolutionSet()
    m = best_move(nbhd_of(moves), v, TabuMemory(), prob, D, np.random.default_rng(0), 0, PARAMS)
    assert m == MoveKey(0, 2)
    assert len(D) == 0


def test_best_move_records_all_hits():
    v = (0, 0)
    moves = [MoveKey(0, 1), MoveKey(1, 2), MoveKey(1, 3)]
    prob = StubProblem({(1, 0): 1.0, (0, 2): 1.0, (0, 3): 0.2})
    D = SolutionSet()
    m = best_move(nbhd_of(moves), v, TabuMemory(), prob, D, np.random.default_rng(0), 4, PARAMS)
    assert m in (MoveKey(0, 1), MoveKey(1, 2))
    assert D.texts() == {"1-0", "0-2"}
    assert {e.iteration for e in D} == {4}


@pytest.mark.parametrize("choice", ["random", "best"])
def test_best_move_all_prohibited(choice):
    v = (0, 0)
    moves = [MoveKey(0, 1), MoveKey(1, 1)]
    mem = TabuMemory(T=2.0)
    for m in moves:
        mem.last_use[m] = 9
    prob = StubProblem({(1, 0): 0.1, (0, 1): 0.7})
    params = SearchParams(prohibited_choice=choice)
    m = best_move(nbhd_of(moves), v, mem, prob, SolutionSet(), np.random.default_rng(0), 10, params)
    assert m in moves
    if choice == "best":
        assert m == MoveKey(1, 1)
    assert mem.T == pytest.approx(1.6)
    assert mem.t_T == 10
    mem.T = 1.1
    mem.last_use = {k: 10 for k in moves}
    best_move(nbhd_of(moves), v, mem, prob, SolutionSet(), np.random.default_rng(0), 11, params)
    assert mem.T == 1.0


def test_random_prohibited_choice_covers_all():
    v = (0,)
    moves = [MoveKey(0, x) for x in range(1, 5)]
    prob = StubProblem({(1,): 0.9})
    rng = np.random.default_rng(0)
    picked = set()
    for _ in range(200):
        mem = TabuMemory(T=5.0, last_use={m: 0 for m in moves})
        picked.add(best_move(nbhd_of(moves), v, mem, prob, SolutionSet(), rng, 1, PARAMS))
    assert picked == set(moves)


@pytest.mark.parametrize("record, expected", [(True, {"1", "2"}), (False, {"1"})])
def test_prohibited_solutions_recording(record, expected):
    v = (0,)
    moves = [MoveKey(0, 1), MoveKey(0, 2)]
    mem = TabuMemory(last_use={MoveKey(0, 2): 5})
    prob = StubProblem({(1,): 1.0, (2,): 1.0})
    D = SolutionSet()
    params = SearchParams(record_prohibited=record)
    m = best_move(nbhd_of(moves), v, mem, prob, D, np.random.default_rng(0), 6, params)
    assert m == MoveKey(0, 1)
    assert D.texts() == expected


def test_argmax_ties_are_random():
    v = (0,)
    moves = [MoveKey(0, x) for x in range(1, 4)]
    prob = StubProblem({}, default=0.5)
    rng = np.random.default_rng(1)
    picks = {best_move(nbhd_of(moves), v, TabuMemory(), prob, SolutionSet(), rng, 0, PARAMS)
             for _ in range(100)}
    assert picks == set(moves)


def test_best_move_empty_neighborhood():
    with pytest.raises(ValueError):
        best_move(Neighborhood((), ()), (0,), TabuMemory(), StubProblem({}), SolutionSet(),
                  np.random.default_rng(0), 0, PARAMS)


# -- diversification --------------------------------------------------------

@pytest.mark.parametrize("r_ave, n_moves, expected", [(10, 1200, 6), (1, 1200, 1), (100, 4, 4), (0.1, 5, 1)])
def test_diversification_steps(r_ave, n_moves, expected):
    assert diversification_steps(r_ave, n_moves) == expected


def test_diversify_search_postconditions():
    mem = TabuMemory(r_ave=10.0, T=3.7)
    mem.last_visit[(1, 1)] = 3
    mem.repetitions[(1, 1)] = 4
    v, t = diversify_search(mem, (1, 1), np.random.default_rng(0), 20, 50, 1200)
    assert t == 26
    assert mem.last_visit == {} and mem.repetitions == {}
    assert mem.r_ave == 10.0 and mem.T == 3.7
    assert mem.last_use[MoveKey(0, 1)] == 20 and mem.last_use[MoveKey(1, 1)] == 20
    assert max(mem.last_use.values()) == 25


def test_diversify_respects_cap():
    mem = TabuMemory(r_ave=10.0)
    _, t = diversify_search(mem, (0,), np.random.default_rng(0), 0, 5, 100, max_steps=2)
    assert t == 2


# -- full runs --------------------------------------------------------------

def fix3_problem(fix3, kind="bigram", rng_range=(1, 4)):
    crit = CriterionConfig(kind, "type", neighbor_range=rng_range)
    return Problem(fix3, build_syllable_inventory(fix3), crit, 2)


def test_run_crs_fix3_matches_enumeration(fix3):
    prob = fix3_problem(fix3)
    oracle = {prob.text(v) for v in np.ndindex(2, 2) if prob.score(v) == 1.0}
    assert oracle == {"tata"}
    D, stats = run_crs(prob, SearchParams(max_iterations=50), np.random.default_rng(0))
    assert D.texts() == oracle
    assert stats.iterations == 50 and stats.solutions == 1


def test_run_crs_unsatisfiable(fix3):
    prob = fix3_problem(fix3, "neighbors", (50, 60))
    D, stats = run_crs(prob, SearchParams(max_iterations=40), np.random.default_rng(0))
    assert len(D) == 0 and stats.iterations == 40


def test_run_crs_target(toy_lexicon):
    prob = Problem.from_lexicon(toy_lexicon, CriterionConfig(), 3)
    D, stats = run_crs(prob, SearchParams(max_iterations=2000, target_solutions=10),
                       np.random.default_rng(0))
    assert len(D) >= 10 and stats.iterations < 2000


def test_run_crs_deterministic(toy_lexicon):
    prob = Problem.from_lexicon(toy_lexicon, CriterionConfig(), 3)
    a, sa = run_crs(prob, SearchParams(max_iterations=300), np.random.default_rng(42))
    b, sb = run_crs(prob, SearchParams(max_iterations=300), np.random.default_rng(42))
    assert list(a) == list(b)
    assert sa.iterations == sb.iterations and sa.diversifications == sb.diversifications


@pytest.mark.parametrize("choice, record", [("random", True), ("best", False)])
def test_run_crs_trajectory_invariants(toy_lexicon, choice, record):
    prob = Problem.from_lexicon(toy_lexicon, CriterionConfig(), 3)
    mem = TabuMemory()
    D = SolutionSet()
    state = {"prev": None, "size": 0, "t": -1, "escapes": 0}

    def check(t, v, diversifying):
        assert mem.T >= 1.0 and mem.r_ave > 0
        assert len(D) >= state["size"]
        assert t > state["t"]
        if diversifying:
            state["escapes"] += 1
            assert mem.repeated == set()
            assert mem.last_visit == {} or set(mem.last_visit) <= {v}
        elif state["prev"] is not None:
            assert sum(a != b for a, b in zip(state["prev"], v)) <= 1
        state.update(prev=v, size=len(D), t=t)

    params = SearchParams(max_iterations=2000, prohibited_choice=choice, record_prohibited=record)
    _, stats = run_crs(prob, params, np.random.default_rng(3), callback=check, memory=mem, solutions=D)
    assert state["escapes"] == stats.diversifications
    texts = [e.text for e in D]
    assert len(texts) == len(set(texts))
    for e in D:
        assert e.text not in toy_lexicon
        assert prob.evaluate_nonword(prob.decode([prob.inventory.index(s) for s in e.syllables])) == 1.0


def test_inverse_prohibited_for_ceil_T_iterations():
    for T in (1.0, 1.3, 2.0, 2.5, 4.9):
        mem = TabuMemory(T=T)
        apply_move((3,), MoveKey(0, 8), mem, 100)
        status = [bool(partition_moves(nbhd_of([MoveKey(0, 3)]), mem, 100 + k)[1]) for k in range(1, 9)]
        assert status == [k <= math.ceil(T) for k in range(1, 9)]
