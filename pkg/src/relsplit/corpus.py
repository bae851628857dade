"""Ready-made example machines.

Each builder returns a fresh machine; the registry at the bottom pairs
every builder with the analysis facts it is expected to show, which the
test suite replays through the analysis code.  The CLI exposes the
registry via `relsplit examples`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .discrepancy import minimum_bound
from .errors import ShapeViolation
from .machine import (
    Edge,
    Transducer,
    concat,
    empty_machine,
    is_letter_to_letter,
    remove_epsilon_pairs,
    union,
)


def double_half() -> Transducer:
    """Loop realizing (00/0)*: every two consumed zeros emit one."""
    return Transducer(
        2,
        ("s0", "s1"),
        (Edge("s0", "s1", 0, 0), Edge("s1", "s0", 0, None)),
        frozenset({"s0"}),
        frozenset({"s0"}),
    )


def double_half_plus() -> Transducer:
    """Strict repetition (00/0)(00/0)*; the empty pair is not included."""
    return Transducer(
        2,
        ("s0", "s1", "s2"),
        (
            Edge("s0", "s1", 0, 0),
            Edge("s1", "s2", 0, None),
            Edge("s2", "s1", 0, 0),
        ),
        frozenset({"s0"}),
        frozenset({"s2"}),
    )


def letter_demo() -> Transducer:
    """Six-state letter-to-letter machine with a rich mix of flips.

    A handy non-trivial input for the letter-to-letter splitting
    construction: some edges keep the letter, some trade 0 for 1 or back,
    and both kinds sit on cycles.
    """
    edges = (
        Edge("q1", "q1", 1, 0),
        Edge("q1", "q2", 0, 1),
        Edge("q1", "q3", 0, 0),
        Edge("q2", "q1", 0, 1),
        Edge("q2", "q3", 0, 0),
        Edge("q3", "q3", 1, 1),
        Edge("q3", "q4", 1, 0),
        Edge("q3", "q4", 0, 1),
        Edge("q4", "q4", 1, 0),
        Edge("q4", "q4", 0, 1),
        Edge("q4", "q5", 1, 1),
        Edge("q5", "q6", 1, 0),
        Edge("q5", "q6", 0, 1),
        Edge("q6", "q5", 1, 0),
        Edge("q6", "q5", 0, 1),
    )
    return Transducer(
        2,
        ("q1", "q2", "q3", "q4", "q5", "q6"),
        edges,
        frozenset({"q1"}),
        frozenset({"q4", "q5"}),
    )


def shared_blocks() -> Transducer:
    """Both sides run through the same middle blocks, shifted one slot.

    Realizes pairs 0^a 1^i 0^c 1^b / 0^i 1^j 0^c 1 (all block lengths at
    least one).  The machine pumps the discrepancy up on the leading
    blocks and back down on the trailing ones, so no discrepancy bound
    exists for it.
    """
    edges = (
        Edge("s0", "s1", 0, None),
        Edge("s1", "s1", 0, None),
        Edge("s1", "s2", 1, 0),
        Edge("s2", "s2", 1, 0),
        Edge("s2", "s3", None, 1),
        Edge("s3", "s3", None, 1),
        Edge("s3", "s4", 0, 0),
        Edge("s4", "s4", 0, 0),
        Edge("s4", "s5", 1, 1),
        Edge("s5", "s5", 1, None),
    )
    return Transducer(
        2,
        ("s0", "s1", "s2", "s3", "s4", "s5"),
        edges,
        frozenset({"s0"}),
        frozenset({"s5"}),
    )


def radix_seesaw() -> Transducer:
    """Pairs 1(00)^j / 0^{j+1} 1^i: the radix comparison rides on j vs i.

    The input side is radix-greater exactly when j >= i, while in plain
    dictionary order the input side always wins (it starts with 1).  So
    the two orders genuinely disagree about how to split this relation.
    """
    edges = (
        Edge("q0", "q1", 1, 0),
        Edge("q1", "q2", 0, 0),
        Edge("q2", "q1", 0, None),
        Edge("q1", "q3", None, 1),
        Edge("q3", "q3", None, 1),
    )
    return Transducer(
        2,
        ("q0", "q1", "q2", "q3"),
        edges,
        frozenset({"q0"}),
        frozenset({"q1", "q3"}),
    )


def tail_padding() -> Transducer:
    """Pairs 0^{2i+2} 101 / 0^{i+1} 0^j 110: the output carries padding."""
    edges = (
        Edge("p0", "p1", 0, None),
        Edge("p1", "p2", 0, 0),
        Edge("p2", "p1", 0, None),
        Edge("p2", "p2", None, 0),
        Edge("p2", "p3", 1, 1),
        Edge("p3", "p4", 0, 1),
        Edge("p4", "p5", 1, 0),
    )
    return Transducer(
        2,
        ("p0", "p1", "p2", "p3", "p4", "p5"),
        edges,
        frozenset({"p0"}),
        frozenset({"p5"}),
    )


def intersection_left() -> Transducer:
    """(0/0)*(1/lambda)*: keeps the zeros, swallows the ones."""
    edges = (
        Edge("a", "a", 0, 0),
        Edge("a", "b", 1, None),
        Edge("b", "b", 1, None),
    )
    return Transducer(2, ("a", "b"), edges, frozenset({"a"}), frozenset({"a", "b"}))


def intersection_right() -> Transducer:
    """(0/lambda)*(1/0)*: swallows the zeros, turns ones into zeros."""
    edges = (
        Edge("a", "a", 0, None),
        Edge("a", "b", 1, 0),
        Edge("b", "b", 1, 0),
    )
    return Transducer(2, ("a", "b"), edges, frozenset({"a"}), frozenset({"a", "b"}))


def intersection_pair() -> tuple[Transducer, Transducer]:
    """Two zero-avoiding machines whose relations meet in 0^i 1^i / 0^i.

    That meet is not realizable by any finite transducer, which is why
    the package only ever reports windowed intersections.
    """
    return intersection_left(), intersection_right()


def opposite_loops() -> Transducer:
    """One state with a consuming loop and an emitting loop.

    The two loops have opposite discrepancy signs, so no bound exists.
    """
    edges = (Edge("s0", "s0", 0, None), Edge("s0", "s0", None, 0))
    return Transducer(2, ("s0",), edges, frozenset({"s0"}), frozenset({"s0"}))


def diagonal() -> Transducer:
    """Single pair 0/0; the smallest relation that is not irreflexive."""
    return Transducer(
        2,
        ("s0", "s1"),
        (Edge("s0", "s1", 0, 0),),
        frozenset({"s0"}),
        frozenset({"s1"}),
    )


def two_step() -> Transducer:
    """Single pair 0/0 spelled in two unbalanced steps; minimum bound 1."""
    return Transducer(
        2,
        ("a", "b", "c"),
        (Edge("a", "b", 0, None), Edge("b", "c", None, 0)),
        frozenset({"a"}),
        frozenset({"c"}),
    )


def build_left_synchronous(parts, alphabet: int = 2) -> Transducer:
    """Union of head-and-tail concatenations, zero-avoiding with bound 0.

    Each part is a pair (head, tail): the head must be letter-to-letter
    and the tail one-sided (every label consumes only, or every label
    emits only).  Words then stay in lockstep through the head and drift
    monotonically through the tail, so a computation that balances its
    lengths never left the lockstep part; the built machine always has
    minimum bound 0.  An empty part list yields the empty-relation
    machine over the given alphabet.
    """
    built: Transducer | None = None
    for head, tail in parts:
        if not is_letter_to_letter(head):
            raise ShapeViolation("part head must be letter-to-letter")
        sides = {(e.inp is None, e.out is None) for e in tail.edges}
        if not (sides <= {(False, True)} or sides <= {(True, False)}):
            raise ShapeViolation("part tail must consume only or emit only")
        piece = concat(head, tail)
        built = piece if built is None else union(built, piece)
    if built is None:
        return empty_machine(alphabet)
    built = remove_epsilon_pairs(built)
    assert minimum_bound(built) == 0
    return built


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    builder: Callable[[], Transducer]
    description: str
    expected: dict = field(default_factory=dict)


ENTRIES = (
    CorpusEntry(
        "double_half",
        double_half,
        "(00/0)*: halves runs of zeros",
        {"letter_to_letter": False, "zero_avoiding": True, "min_bound": 0},
    ),
    CorpusEntry(
        "double_half_plus",
        double_half_plus,
        "(00/0)(00/0)*: halving, at least one round",
        {"letter_to_letter": False, "zero_avoiding": True, "min_bound": 0},
    ),
    CorpusEntry(
        "letter_demo",
        letter_demo,
        "six-state letter-to-letter machine with letter flips on cycles",
        {"letter_to_letter": True, "zero_avoiding": True, "min_bound": 0},
    ),
    CorpusEntry(
        "shared_blocks",
        shared_blocks,
        "0^a 1^i 0^c 1^b / 0^i 1^j 0^c 1: shifted shared blocks",
        {"letter_to_letter": False, "zero_avoiding": False},
    ),
    CorpusEntry(
        "radix_seesaw",
        radix_seesaw,
        "1(00)^j / 0^{j+1} 1^i: radix split rides on j vs i",
        {"letter_to_letter": False, "zero_avoiding": False},
    ),
    CorpusEntry(
        "tail_padding",
        tail_padding,
        "0^{2i+2} 101 / 0^{i+1} 0^j 110: padded outputs",
        {"letter_to_letter": False, "zero_avoiding": False},
    ),
    CorpusEntry(
        "intersection_left",
        intersection_left,
        "(0/0)*(1/-)*: keeps zeros, swallows ones",
        {"letter_to_letter": False, "zero_avoiding": True, "min_bound": 0},
    ),
    CorpusEntry(
        "intersection_right",
        intersection_right,
        "(0/-)*(1/0)*: swallows zeros, ones become zeros",
        {"letter_to_letter": False, "zero_avoiding": True, "min_bound": 0},
    ),
    CorpusEntry(
        "opposite_loops",
        opposite_loops,
        "one state, consuming loop plus emitting loop: no bound exists",
        {"letter_to_letter": False, "zero_avoiding": False},
    ),
    CorpusEntry(
        "diagonal",
        diagonal,
        "just the pair 0/0: not irreflexive",
        {"letter_to_letter": True, "zero_avoiding": True, "min_bound": 0},
    ),
    CorpusEntry(
        "two_step",
        two_step,
        "0/0 via one consuming then one emitting step: minimum bound 1",
        {"letter_to_letter": False, "zero_avoiding": True, "min_bound": 1},
    ),
)

REGISTRY = {entry.name: entry for entry in ENTRIES}
