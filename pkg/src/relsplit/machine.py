"""Transducer data model and the rational-operation algebra.

A transducer is a quintuple (Q, alphabet, E, I, F) over the alphabet
{0, ..., q-1}.  Edge labels are x/y where each side is a single symbol or
the empty word (represented as None).  Values are immutable: every
operation returns a new machine and never mutates its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AlphabetMismatch,
    EmptyInitialSet,
    InvalidSymbol,
    NotAPath,
)

# A label side: a single alphabet symbol, or None for the empty word.
Side = int | None


@dataclass(frozen=True, order=True)
class Edge:
    """One transition (src, inp/out, dst); None means the empty word."""

    src: str
    dst: str
    inp: Side
    out: Side

    def label(self) -> tuple[Side, Side]:
        return (self.inp, self.out)


def _side_key(x: Side) -> int:
    # canonical sort puts the empty word before every symbol
    return -1 if x is None else x


@dataclass(frozen=True)
class Transducer:
    """Immutable transducer with canonical edge order.

    states keeps declaration order (it doubles as the display order for
    serialization); edges are deduplicated and sorted by
    (src index, dst index, inp, out) with the empty word first.
    """

    alphabet: int
    states: tuple[str, ...]
    edges: tuple[Edge, ...]
    initials: frozenset[str] = field(default_factory=frozenset)
    finals: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        states = tuple(self.states)
        initials = frozenset(self.initials)
        finals = frozenset(self.finals)
        if self.alphabet < 1:
            raise ValueError(f"alphabet size must be positive, got {self.alphabet}")
        if len(set(states)) != len(states):
            raise ValueError("duplicate state names")
        index = {s: i for i, s in enumerate(states)}
        if not initials:
            raise EmptyInitialSet("transducer needs at least one initial state")
        for s in initials | finals:
            if s not in index:
                raise ValueError(f"initial/final state {s!r} not declared")
        for e in self.edges:
            if e.src not in index or e.dst not in index:
                raise ValueError(f"edge endpoint not declared: {e}")
            for side in (e.inp, e.out):
                if side is not None and not (0 <= side < self.alphabet):
                    raise InvalidSymbol(
                        f"symbol {side} outside alphabet 0..{self.alphabet - 1}"
                    )
        edges = tuple(
            sorted(
                set(self.edges),
                key=lambda e: (index[e.src], index[e.dst], _side_key(e.inp), _side_key(e.out)),
            )
        )
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)

    def out_edges(self, state: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.src == state)


def is_path(t: Transducer, edges) -> bool:
    """True iff edges is a consecutive sequence of transitions of t."""
    known = set(t.edges)
    prev = None
    for e in edges:
        if e not in known:
            return False
        if prev is not None and prev.dst != e.src:
            return False
        prev = e
    return True


def path_label(edges) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The input/output word pair spelled by a path (empty path: lambda/lambda)."""
    u = tuple(e.inp for e in edges if e.inp is not None)
    v = tuple(e.out for e in edges if e.out is not None)
    return u, v


def check_path(t: Transducer, edges) -> None:
    if not is_path(t, edges):
        raise NotAPath("edge sequence is not a path of this machine")


def is_letter_to_letter(t: Transducer) -> bool:
    """True iff no label has an empty side."""
    return all(e.inp is not None and e.out is not None for e in t.edges)


def inverse(t: Transducer) -> Transducer:
    """Swap input and output on every edge; realizes the inverse relation."""
    swapped = tuple(Edge(e.src, e.dst, e.out, e.inp) for e in t.edges)
    return Transducer(t.alphabet, t.states, swapped, t.initials, t.finals)


def _fresh_names(taken: set[str], names) -> dict[str, str]:
    # append primes until the name is free; keeps small unions readable
    renamed = {}
    for name in names:
        new = name
        while new in taken:
            new = new + "'"
        taken.add(new)
        renamed[name] = new
    return renamed


def union(a: Transducer, b: Transducer) -> Transducer:
    """Disjoint union; realizes rel(a) | rel(b)."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {b.alphabet}")
    ren = _fresh_names(set(a.states), b.states)
    states = a.states + tuple(ren[s] for s in b.states)
    edges = a.edges + tuple(Edge(ren[e.src], ren[e.dst], e.inp, e.out) for e in b.edges)
    initials = a.initials | frozenset(ren[s] for s in b.initials)
    finals = a.finals | frozenset(ren[s] for s in b.finals)
    return Transducer(a.alphabet, states, edges, initials, finals)


def concat(a: Transducer, b: Transducer) -> Transducer:
    """Link a's finals to b's initials with lambda/lambda bridges.

    Realizes the pairwise concatenation of the two relations; a's finals
    lose final status, so exactly |F_a| * |I_b| bridge edges appear.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} vs {b.alphabet}")
    ren = _fresh_names(set(a.states), b.states)
    states = a.states + tuple(ren[s] for s in b.states)
    edges = list(a.edges)
    edges.extend(Edge(ren[e.src], ren[e.dst], e.inp, e.out) for e in b.edges)
    for f in sorted(a.finals, key=a.states.index):
        for i in sorted(b.initials, key=b.states.index):
            edges.append(Edge(f, ren[i], None, None))
    finals = frozenset(ren[s] for s in b.finals)
    return Transducer(a.alphabet, states, tuple(edges), a.initials, finals)


def _reachable(t: Transducer, seeds, forward: bool) -> set[str]:
    step: dict[str, set[str]] = {s: set() for s in t.states}
    for e in t.edges:
        if forward:
            step[e.src].add(e.dst)
        else:
            step[e.dst].add(e.src)
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        for nxt in step[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def empty_machine(alphabet: int, name: str = "s0") -> Transducer:
    """Canonical empty-relation machine: one non-final initial state."""
    return Transducer(alphabet, (name,), (), frozenset({name}), frozenset())


def trim(t: Transducer) -> Transducer:
    """Keep exactly the states reachable from an initial and co-reachable
    to a final; the realized relation is unchanged.

    When nothing useful remains the canonical empty-relation machine is
    returned (one non-final initial state, named after the first declared
    initial so repeated trims are stable).
    """
    reach = _reachable(t, t.initials, forward=True)
    coreach = _reachable(t, t.finals, forward=False)
    keep = reach & coreach
    first_initial = min(t.initials, key=t.states.index)
    if not (keep & t.initials) or not (keep & t.finals):
        return empty_machine(t.alphabet, first_initial)
    states = tuple(s for s in t.states if s in keep)
    edges = tuple(e for e in t.edges if e.src in keep and e.dst in keep)
    return Transducer(t.alphabet, states, edges, t.initials & keep, t.finals & keep)


def remove_epsilon_pairs(t: Transducer) -> Transducer:
    """Eliminate lambda/lambda edges without changing the relation.

    For each state p take its closure under lambda/lambda edges; every
    non-lambda/lambda edge leaving the closure is pulled back to p, and p
    becomes final if its closure touches a final state.  State set and
    initial set stay as they are, so per-state discrepancy behaviour is
    preserved along with the relation.
    """
    eps_next: dict[str, set[str]] = {s: set() for s in t.states}
    real_edges = []
    for e in t.edges:
        if e.inp is None and e.out is None:
            eps_next[e.src].add(e.dst)
        else:
            real_edges.append(e)
    if not any(eps_next.values()):
        return t

    def closure(p: str) -> set[str]:
        seen = {p}
        stack = [p]
        while stack:
            for nxt in eps_next[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    closures = {p: closure(p) for p in t.states}
    by_src: dict[str, list[Edge]] = {s: [] for s in t.states}
    for e in real_edges:
        by_src[e.src].append(e)
    edges = []
    for p in t.states:
        for r in closures[p]:
            for e in by_src[r]:
                edges.append(Edge(p, e.dst, e.inp, e.out))
    finals = frozenset(p for p in t.states if closures[p] & t.finals)
    return Transducer(t.alphabet, t.states, tuple(edges), t.initials, finals)
