"""Exhaustive bounded-window oracle.

enumerate_pairs unrolls a machine into the exact set of realized pairs
whose sides both fit a length cap.  Everything downstream (order
filters, partition checking, relation properties) operates on these
finite windows, so every identity the package claims can be checked
with plain set algebra.  Pruning at the cap is exact: words only grow
along a path, so no pair inside the window is ever reached through a
configuration outside it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapMismatch, ParseError
from .machine import Transducer
from .orders import Word, less

Pair = tuple[Word, Word]


@dataclass(frozen=True)
class BoundedRelation:
    """A finite window onto a relation: all pairs with both sides <= cap."""

    cap: int
    pairs: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for u, v in self.pairs:
            if len(u) > self.cap or len(v) > self.cap:
                raise ValueError(f"pair {u}/{v} exceeds cap {self.cap}")

    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs, key=lambda p: ((len(p[0]), p[0]), (len(p[1]), p[1])))


def enumerate_pairs(t: Transducer, cap: int) -> BoundedRelation:
    """All pairs of rel(t) with |u| <= cap and |v| <= cap, exactly."""
    by_src = {s: [] for s in t.states}
    for e in t.edges:
        by_src[e.src].append(e)
    found: set[Pair] = set()
    seen: set[tuple[str, Word, Word]] = set()
    stack: list[tuple[str, Word, Word]] = []
    for s in t.initials:
        stack.append((s, (), ()))
    while stack:
        config = stack.pop()
        if config in seen:
            continue
        seen.add(config)
        state, u, v = config
        if state in t.finals:
            found.add((u, v))
        for e in by_src[state]:
            nu = u if e.inp is None else u + (e.inp,)
            nv = v if e.out is None else v + (e.out,)
            if len(nu) > cap or len(nv) > cap:
                continue
            nxt = (e.dst, nu, nv)
            if nxt not in seen:
                stack.append(nxt)
    return BoundedRelation(cap, frozenset(found))


def filter_order(r: BoundedRelation, kind: str, direction: str) -> BoundedRelation:
    """Pairs whose sides compare as asked under the given order.

    direction is "greater" (u above v) or "less" (u below v).
    """
    cmp = less(kind)
    if direction == "greater":
        kept = {(u, v) for u, v in r.pairs if cmp(v, u)}
    elif direction == "less":
        kept = {(u, v) for u, v in r.pairs if cmp(u, v)}
    else:
        raise ValueError(f"direction must be greater or less, got {direction!r}")
    return BoundedRelation(r.cap, frozenset(kept))


def inverse_relation(r: BoundedRelation) -> BoundedRelation:
    return BoundedRelation(r.cap, frozenset((v, u) for u, v in r.pairs))


@dataclass(frozen=True)
class PropertyFlags:
    symmetric: bool
    irreflexive: bool
    asymmetric: bool


def check_properties(r: BoundedRelation) -> PropertyFlags:
    """Evaluate relation properties exactly on the window.

    Swapping a pair keeps both lengths inside the cap, so these answers
    are exact for the windowed fragment.
    """
    sym = all((v, u) in r.pairs for u, v in r.pairs)
    irr = all(u != v for u, v in r.pairs)
    asym = all((v, u) not in r.pairs for u, v in r.pairs)
    return PropertyFlags(symmetric=sym, irreflexive=irr, asymmetric=asym)


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    violations: tuple[str, ...]


def _show_word(w: Word) -> str:
    return "".join(str(s) for s in w) or "-"


def _show_pair(p: Pair) -> str:
    return f"{_show_word(p[0])}/{_show_word(p[1])}"


def check_partition(r: BoundedRelation, a: BoundedRelation, b: BoundedRelation) -> PartitionReport:
    """Check that {a, b} is an asymmetric partition of r with b = a^-1."""
    if not (r.cap == a.cap == b.cap):
        raise CapMismatch(f"caps differ: {r.cap}, {a.cap}, {b.cap}")
    violations: list[str] = []
    union = a.pairs | b.pairs
    for p in sorted(r.pairs - union):
        violations.append(f"missing from both parts: {_show_pair(p)}")
    for p in sorted(union - r.pairs):
        violations.append(f"not in the relation: {_show_pair(p)}")
    for p in sorted(a.pairs & b.pairs):
        violations.append(f"in both parts: {_show_pair(p)}")
    for name, part in (("first part", a), ("second part", b)):
        for u, v in sorted(part.pairs):
            if (v, u) in part.pairs and (u, v) <= (v, u):
                violations.append(f"{name} not asymmetric: {_show_pair((u, v))}")
    for u, v in sorted(a.pairs):
        if (v, u) not in b.pairs:
            violations.append(f"swap of {_show_pair((u, v))} missing from second part")
    for u, v in sorted(b.pairs):
        if (v, u) not in a.pairs:
            violations.append(f"swap of {_show_pair((u, v))} missing from first part")
    return PartitionReport(ok=not violations, violations=tuple(violations))


def format_pairs(r: BoundedRelation) -> str:
    """Pair-set file: one `u<TAB>v` line per pair, canonical order.

    Words are written as digit strings, so the alphabet must fit in
    decimal digits.
    """
    lines = []
    for u, v in r.sorted_pairs():
        for w in (u, v):
            if any(s > 9 for s in w):
                raise ValueError("pair files support alphabets up to size 10")
        lines.append(f"{_show_word(u)}\t{_show_word(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def _parse_word(token: str, lineno: int) -> Word:
    if token == "-":
        return ()
    if not token.isdigit():
        raise ParseError(lineno, f"bad word token {token!r}")
    return tuple(int(c) for c in token)


def parse_pairs(text: str) -> BoundedRelation:
    """Read a pair-set file; the cap is inferred from the longest word."""
    pairs: set[Pair] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, "expected `u<TAB>v`")
        pairs.add((_parse_word(tokens[0], lineno), _parse_word(tokens[1], lineno)))
    cap = max((max(len(u), len(v)) for u, v in pairs), default=0)
    return BoundedRelation(cap, frozenset(pairs))
