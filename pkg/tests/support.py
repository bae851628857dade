"""Shared fixtures and independent oracles for the test suite.

The brute-force routines here deliberately avoid the algorithms used by
the package (no strongly-connected-component analysis, no pruning at the
state count) so they can serve as ground truth for the acceptance runs.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from relsplit.discrepancy import edge_weight
from relsplit.machine import Edge, Transducer

# ---------------------------------------------------------------------------
# hand-built machines exercising the bounded construction case by case

def chain(labels, alphabet: int = 2) -> Transducer:
    """A single path spelling the given labels, last state final."""
    states = tuple(f"n{i}" for i in range(len(labels) + 1))
    edges = tuple(
        Edge(states[i], states[i + 1], inp, out) for i, (inp, out) in enumerate(labels)
    )
    return Transducer(alphabet, states, edges, frozenset({states[0]}), frozenset({states[-1]}))


def staircase_up(height: int) -> Transducer:
    """Realizes {0^height / 1^height} with discrepancy peaking at height."""
    labels = [(0, None)] * height + [(None, 1)] * height
    return chain(labels)


# Each fixture is (machine, bound); together they walk through every row
# of the bounded construction's transition table, including the rows
# where the output side is ahead and the length lead is negative.
def case_fixtures() -> list[tuple[Transducer, int]]:
    fixtures = [
        # output ahead, then a consumed symbol that loses the letter race
        (chain([(None, 1), (None, 1), (0, None)]), 2),
        # output ahead, then a consumed symbol that wins it
        (chain([(None, 0), (None, 1), (1, None)]), 2),
        # output ahead by one, resolved by an equal-length edge
        (chain([(None, 0), (1, 1)]), 1),
        # input ahead, then the emitted symbol loses against the pending head
        (chain([(1, None), (None, 0)]), 1),
        # a diagonal pair spelled with both sides drifting
        (chain([(0, None), (None, 0), (None, 1), (1, None)]), 1),
        # input ahead, resolved by an equal-length edge in input's favour
        (chain([(0, None), (1, 0)]), 1),
        # input ahead and letter-losing, yet radix-greater by length
        (chain([(0, None), (1, 1)]), 1),
        (staircase_up(1), 1),
        (staircase_up(2), 2),
    ]
    return fixtures


# ---------------------------------------------------------------------------
# random machine generators (all take an explicit rng for reproducibility)

def random_letter_machine(rng: random.Random, alphabet: int) -> Transducer:
    n = rng.randint(1, 6)
    states = tuple(f"s{i}" for i in range(n))
    edges = []
    for _ in range(rng.randint(n, n + 3)):
        src = rng.randrange(n)
        dst = rng.randrange(n)
        edges.append(Edge(states[src], states[dst], rng.randrange(alphabet), rng.randrange(alphabet)))
    finals = frozenset(s for s in states if rng.random() < 0.4) or frozenset({states[-1]})
    return Transducer(alphabet, states, tuple(edges), frozenset({states[0]}), finals)


def random_label(rng: random.Random, alphabet: int):
    roll = rng.random()
    if roll < 0.5:
        return rng.randrange(alphabet), rng.randrange(alphabet)
    if roll < 0.75:
        return rng.randrange(alphabet), None
    return None, rng.randrange(alphabet)


def random_machine(rng: random.Random, alphabet: int = 2, max_states: int = 6) -> Transducer:
    n = rng.randint(2, max_states)
    states = tuple(f"s{i}" for i in range(n))
    edges = []
    for _ in range(rng.randint(n, n + 4)):
        src = rng.randrange(n)
        dst = rng.randrange(n)
        inp, out = random_label(rng, alphabet)
        edges.append(Edge(states[src], states[dst], inp, out))
    finals = frozenset(s for s in states if rng.random() < 0.4) or frozenset({states[-1]})
    return Transducer(alphabet, states, tuple(edges), frozenset({states[0]}), finals)


def random_one_sided_tail(rng: random.Random, alphabet: int) -> Transducer:
    n = rng.randint(1, 3)
    states = tuple(f"t{i}" for i in range(n))
    consume = rng.random() < 0.5
    edges = []
    for _ in range(rng.randint(0, n + 1)):
        src = rng.randrange(n)
        dst = rng.randrange(n)
        sym = rng.randrange(alphabet)
        edges.append(Edge(states[src], states[dst], sym, None) if consume
                     else Edge(states[src], states[dst], None, sym))
    finals = frozenset(s for s in states if rng.random() < 0.5) or frozenset({states[-1]})
    return Transducer(alphabet, states, tuple(edges), frozenset({states[0]}), finals)


# ---------------------------------------------------------------------------
# brute-force ground truth

def brute_minimum_bound(t: Transducer, max_len: int) -> int:
    """Largest running max |d| over computations of length <= max_len that
    end at discrepancy zero.

    Level-by-level search over (state, discrepancy, running max); each
    configuration is expanded at its earliest level, which is enough
    because the set of futures depends only on the configuration.
    """
    frontier = {(s, 0, 0) for s in t.initials}
    seen = set(frontier)
    best = 0
    by_src: dict[str, list[Edge]] = {s: [] for s in t.states}
    for e in t.edges:
        by_src[e.src].append(e)
    for _ in range(max_len):
        nxt = set()
        for state, d, m in frontier:
            for e in by_src[state]:
                nd = d + edge_weight(e)
                config = (e.dst, nd, max(m, abs(nd)))
                if config not in seen:
                    seen.add(config)
                    nxt.add(config)
        frontier = nxt
        if not frontier:
            break
    for _, d, m in seen:
        if d == 0:
            best = max(best, m)
    return best


def brute_has_opposite_cycles(t: Transducer, max_len: int) -> bool:
    """Does some computation of length <= max_len contain a closed walk of
    one discrepancy sign followed by a closed walk of the other?

    A four-stage search: wander, loop back to a marked anchor with a
    positive (resp. negative) total, wander again, loop back to a second
    anchor with the opposite sign.  Anchors are marked without consuming
    a step.  No component analysis involved.
    """
    by_src: dict[str, list[Edge]] = {s: [] for s in t.states}
    for e in t.edges:
        by_src[e.src].append(e)

    def search(first_sign: int) -> bool:
        # config: (mode, state, anchor, delta); anchor/delta used in modes 1, 3
        start = {(0, s, "", 0) for s in t.initials}

        def closed(config, with_sign):
            mode, state, anchor, delta = config
            return state == anchor and (delta > 0 if with_sign > 0 else delta < 0)

        def free_moves(config):
            mode, state, anchor, delta = config
            if mode == 0:
                yield (1, state, state, 0)
            elif mode == 1 and closed(config, first_sign):
                yield (2, state, "", 0)
            elif mode == 2:
                yield (3, state, state, 0)

        def closure(configs):
            out = set(configs)
            stack = list(configs)
            while stack:
                for nxt in free_moves(stack.pop()):
                    if nxt not in out:
                        out.add(nxt)
                        stack.append(nxt)
            return out

        frontier = closure(start)
        seen = set(frontier)
        for _ in range(max_len):
            nxt = set()
            for mode, state, anchor, delta in frontier:
                for e in by_src[state]:
                    nd = delta + edge_weight(e) if mode in (1, 3) else 0
                    config = (mode, e.dst, anchor, nd)
                    if config not in seen:
                        nxt.add(config)
            nxt = closure(nxt)
            nxt -= seen
            seen |= nxt
            frontier = nxt
            if any(c[0] == 3 and closed(c, -first_sign) for c in seen):
                return True
            if not frontier:
                break
        return any(c[0] == 3 and closed(c, -first_sign) for c in seen)

    return search(+1) or search(-1)


# ---------------------------------------------------------------------------
# exhaustive structural families of small machines over {0, 1}

def _machine(n: int, labeled_edges) -> Transducer:
    states = tuple(f"s{i}" for i in range(n))
    edges = tuple(Edge(states[a], states[b], inp, out) for a, b, inp, out in labeled_edges)
    return Transducer(2, states, edges, frozenset({states[0]}), frozenset(states))


def structural_sample() -> list[Transducer]:
    """Systematic small machines: every edge subset of a few shapes.

    Zero-avoidance ignores final states, so all states are made final.
    """
    machines = []
    drift_labels = [(0, None), (None, 0), (0, 0)]

    # two states, every subset of up to three labeled edges
    candidates = [
        (a, b, inp, out)
        for a in (0, 1)
        for b in (0, 1)
        for inp, out in drift_labels
    ]
    for size in range(4):
        for chosen in combinations(candidates, size):
            machines.append(_machine(2, chosen))

    # one state, loop subsets of up to three labels
    loop_labels = [(0, 0), (0, 1), (1, 0), (0, None), (None, 0)]
    for size in range(4):
        for chosen in combinations(loop_labels, size):
            machines.append(_machine(1, [(0, 0, inp, out) for inp, out in chosen]))

    # four-state chain with optional loops at the second and fourth state
    loop_options = [None, (0, None), (None, 0)]
    for l1 in drift_labels:
        for l2 in drift_labels:
            for l3 in drift_labels:
                for loop1 in loop_options:
                    for loop3 in loop_options:
                        edges = [(0, 1, *l1), (1, 2, *l2), (2, 3, *l3)]
                        if loop1:
                            edges.append((1, 1, *loop1))
                        if loop3:
                            edges.append((3, 3, *loop3))
                        machines.append(_machine(4, edges))

    # three-state ring with an optional loop on the entry state
    for l1 in drift_labels:
        for l2 in drift_labels:
            for l3 in drift_labels:
                for loop in [None, (0, None), (None, 0)]:
                    edges = [(0, 1, *l1), (1, 2, *l2), (2, 0, *l3)]
                    if loop:
                        edges.append((0, 0, *loop))
                    machines.append(_machine(3, edges))

    return machines
