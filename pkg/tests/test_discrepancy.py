import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relsplit import (
    Edge,
    NotAPath,
    NotZeroAvoiding,
    Transducer,
    inverse,
    is_zero_avoiding,
    minimum_bound,
    pair_discrepancy,
    path_profile,
)
from relsplit.discrepancy import Witness, edge_weight, walk_weight
from relsplit.corpus import REGISTRY, double_half, opposite_loops, two_step
from relsplit.machine import is_path

from support import chain, random_machine, staircase_up

machines = st.integers(min_value=0, max_value=2**30).map(
    lambda seed: random_machine(random.Random(seed)))


def test_pair_discrepancy():
    assert pair_discrepancy(((0, 0), (0,))) == 1
    assert pair_discrepancy(((), (1, 1))) == -2
    assert pair_discrepancy(((), ())) == 0


def test_edge_weight_counts_sides():
    assert edge_weight(Edge("a", "b", 0, 0)) == 0
    assert edge_weight(Edge("a", "b", 0, None)) == 1
    assert edge_weight(Edge("a", "b", None, 0)) == -1
    assert edge_weight(Edge("a", "b", None, None)) == 0


def test_path_profile_of_double_half_loop():
    t = double_half()
    out, back = sorted(t.edges, key=lambda e: e.dst, reverse=True)
    profile = path_profile(t, (out, back))
    assert profile.d == 1 and profile.dmax == 1
    assert path_profile(t, ()).d == 0


def test_path_profile_rejects_non_paths():
    t = double_half()
    with pytest.raises(NotAPath):
        path_profile(t, (Edge("s0", "s0", 0, 0),))


def test_profile_matches_label_discrepancy():
    t = staircase_up(2)
    path = tuple(sorted(t.edges, key=lambda e: e.src))
    profile = path_profile(t, path)
    assert profile.d == 0 and profile.dmax == 2
    assert walk_weight(path) == 0


@settings(max_examples=50, deadline=None)
@given(machines, st.randoms(use_true_random=False))
def test_profile_is_additive_under_splitting(t, rng):
    # take a random walk, then check prefix sums agree with the profile
    walk = []
    state = sorted(t.initials)[0]
    for _ in range(8):
        options = t.out_edges(state)
        if not options:
            break
        e = rng.choice(options)
        walk.append(e)
        state = e.dst
    cut = rng.randrange(len(walk) + 1)
    head, tail = walk[:cut], walk[cut:]
    total = path_profile(t, tuple(walk))
    assert total.d == walk_weight(tuple(head)) + walk_weight(tuple(tail))
    assert total.dmax >= abs(walk_weight(tuple(head)))


ZERO_AVOIDING = ["double_half", "double_half_plus", "letter_demo",
                 "intersection_left", "intersection_right", "diagonal", "two_step"]
NOT_ZERO_AVOIDING = ["shared_blocks", "radix_seesaw", "tail_padding", "opposite_loops"]


@pytest.mark.parametrize("name", ZERO_AVOIDING)
def test_corpus_zero_avoiding(name):
    report = is_zero_avoiding(REGISTRY[name].builder())
    assert report.zero_avoiding
    assert report.witness is None


@pytest.mark.parametrize("name", NOT_ZERO_AVOIDING)
def test_corpus_not_zero_avoiding(name):
    t = REGISTRY[name].builder()
    report = is_zero_avoiding(t)
    assert not report.zero_avoiding
    replay_witness(t, report.witness)


def replay_witness(t, w: Witness):
    """The witness must spell an actual computation whose two closed walks
    carry opposite discrepancy signs."""
    assert is_path(t, w.computation())
    first = w.computation()[0] if w.computation() else None
    if first is not None:
        assert first.src in t.initials
    assert w.c1 and w.c1[0].src == w.c1[-1].dst
    assert w.c2 and w.c2[0].src == w.c2[-1].dst
    assert walk_weight(w.c1) * walk_weight(w.c2) < 0


def test_witness_description_names_both_cycles():
    report = is_zero_avoiding(opposite_loops())
    text = str(report.witness)
    assert "s0-s0" in text
    assert "+1" in text and "-1" in text


def test_minimum_bound_examples():
    assert minimum_bound(double_half()) == 0
    assert minimum_bound(REGISTRY["double_half_plus"].builder()) == 0
    assert minimum_bound(two_step()) == 1
    assert minimum_bound(REGISTRY["letter_demo"].builder()) == 0


@pytest.mark.parametrize("height", [1, 2, 3, 4])
def test_minimum_bound_of_staircase(height):
    assert minimum_bound(staircase_up(height)) == height


def test_minimum_bound_with_cycle_ascent():
    # climbing happens around a two-state loop, the descent on a tail;
    # the only balanced computations peak at discrepancy two
    t = Transducer(
        2,
        ("a", "b", "c", "d"),
        (
            Edge("a", "b", 0, None),
            Edge("b", "a", 0, 0),
            Edge("b", "c", None, 0),
            Edge("c", "d", None, 0),
        ),
        frozenset({"a"}),
        frozenset({"d"}),
    )
    assert is_zero_avoiding(t).zero_avoiding
    assert minimum_bound(t) == 2


def test_minimum_bound_refuses_sign_mixing():
    with pytest.raises(NotZeroAvoiding) as info:
        minimum_bound(opposite_loops())
    assert info.value.witness is not None


def test_minimum_bound_is_below_state_count():
    for name in ZERO_AVOIDING:
        t = REGISTRY[name].builder()
        assert minimum_bound(t) < len(t.states)


def test_unreachable_trouble_is_ignored():
    # the bad loops sit beyond any initial state
    t = Transducer(
        2,
        ("a", "x"),
        (Edge("x", "x", 0, None), Edge("x", "x", None, 0)),
        frozenset({"a"}),
        frozenset({"x"}),
    )
    assert is_zero_avoiding(t).zero_avoiding
    assert minimum_bound(t) == 0


def test_flag_ignores_final_states():
    # zero-avoidance is a property of computations, not accepted pairs
    t = Transducer(
        2,
        ("a",),
        (Edge("a", "a", 0, None), Edge("a", "a", None, 0)),
        frozenset({"a"}),
        frozenset(),
    )
    assert not is_zero_avoiding(t).zero_avoiding


@pytest.mark.parametrize("name", ZERO_AVOIDING + NOT_ZERO_AVOIDING)
def test_inverse_has_same_flag_and_bound(name):
    t = REGISTRY[name].builder()
    report = is_zero_avoiding(t)
    mirror = is_zero_avoiding(inverse(t))
    assert report.zero_avoiding == mirror.zero_avoiding
    if report.zero_avoiding:
        assert minimum_bound(t) == minimum_bound(inverse(t))


def test_drifting_chains_never_rebalance():
    # these paths end away from discrepancy zero, so nothing constrains k
    assert minimum_bound(chain([(None, 1), (None, 1), (0, None)])) == 0
    assert minimum_bound(chain([(0, None), (1, 1)])) == 0
