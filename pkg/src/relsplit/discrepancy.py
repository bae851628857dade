"""Length-discrepancy analysis.

The discrepancy of a pair u/v is |u| - |v|; along a path it accumulates
edge by edge (an edge contributes +1 for a consumed symbol, -1 for an
emitted one).  A machine is zero-avoiding with bound k when every
computation whose running discrepancy ever strays beyond k ends with a
nonzero discrepancy.  This module decides whether any finite bound
exists and, when one does, computes the least one.

The decision works on the initial-reachable part: weight every edge by
its discrepancy, split into strongly connected components, and test each
component for a positive-weight cycle and for a negative-weight cycle.
No bound exists exactly when a positive component can reach a negative
one (or the other way round), because then computations can pump the
discrepancy arbitrarily high before cancelling it back to zero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx

from .errors import NotAPath, NotZeroAvoiding
from .machine import Edge, Transducer, is_path


@dataclass(frozen=True)
class DiscrepancyProfile:
    """Final discrepancy d and maximum absolute prefix discrepancy dmax."""

    d: int
    dmax: int


def pair_discrepancy(pair) -> int:
    u, v = pair
    return len(u) - len(v)


def edge_weight(e: Edge) -> int:
    return (0 if e.inp is None else 1) - (0 if e.out is None else 1)


def walk_weight(edges) -> int:
    return sum(edge_weight(e) for e in edges)


def path_profile(t: Transducer, edges) -> DiscrepancyProfile:
    """Profile of a path of t; the empty path profiles as (0, 0)."""
    if not is_path(t, edges):
        raise NotAPath("not a path of this machine")
    d = 0
    dmax = 0
    for e in edges:
        d += edge_weight(e)
        dmax = max(dmax, abs(d))
    return DiscrepancyProfile(d=d, dmax=dmax)


@dataclass(frozen=True)
class Witness:
    """Evidence that no discrepancy bound exists.

    lead_in runs from an initial state to the anchor of the closed walk
    c1, link runs from that anchor to the anchor of c2, and the two
    closed walks have opposite-sign total discrepancies.  All four parts
    are edge sequences, so they can be replayed against the machine.
    """

    lead_in: tuple[Edge, ...]
    c1: tuple[Edge, ...]
    link: tuple[Edge, ...]
    c2: tuple[Edge, ...]

    def computation(self) -> tuple[Edge, ...]:
        return self.lead_in + self.c1 + self.link + self.c2

    @staticmethod
    def cycle_states(edges) -> list[str]:
        """State sequence visited by an edge walk, endpoints included."""
        if not edges:
            return []
        return [edges[0].src] + [e.dst for e in edges]

    def __str__(self):
        c1 = "-".join(self.cycle_states(self.c1))
        c2 = "-".join(self.cycle_states(self.c2))
        return (
            f"cycle {c1} (discrepancy {walk_weight(self.c1):+d}) reaches "
            f"cycle {c2} (discrepancy {walk_weight(self.c2):+d})"
        )


@dataclass(frozen=True)
class ZeroAvoidanceReport:
    zero_avoiding: bool
    min_bound: int | None = None
    witness: Witness | None = None


def _initial_part(t: Transducer) -> tuple[list[str], list[Edge]]:
    seen = set(t.initials)
    stack = sorted(t.initials, key=t.states.index)
    by_src: dict[str, list[Edge]] = {s: [] for s in t.states}
    for e in t.edges:
        by_src[e.src].append(e)
    while stack:
        for e in by_src[stack.pop()]:
            if e.dst not in seen:
                seen.add(e.dst)
                stack.append(e.dst)
    states = [s for s in t.states if s in seen]
    edges = [e for e in t.edges if e.src in seen]
    return states, edges


def _has_sign_cycle(states: list[str], edges: list[Edge], sign: int) -> bool:
    """Bellman-Ford style check for a cycle of the given weight sign.

    Starting every distance at zero simulates a super source; if the
    pass after the usual |V| - 1 rounds still improves something, a
    negative cycle exists.  Positive cycles are found on negated weights.
    """
    dist = {s: 0 for s in states}
    for round_no in range(len(states)):
        changed = False
        for e in edges:
            w = edge_weight(e) * (-1 if sign > 0 else 1)
            if dist[e.src] + w < dist[e.dst]:
                dist[e.dst] = dist[e.src] + w
                changed = True
        if not changed:
            return False
    return changed


def _closed_walk(anchor: str, states: list[str], edges: list[Edge], sign: int) -> tuple[Edge, ...]:
    """A closed walk at anchor whose total weight has the given sign.

    Breadth-first search over (state, running weight) configurations,
    clamped to a window wide enough that some witness walk fits whenever
    one exists at all (detours inside a component of n states never need
    more than a few multiples of n of slack).
    """
    n = len(states)
    limit = 4 * n + 4
    by_src: dict[str, list[Edge]] = {s: [] for s in states}
    for e in edges:
        by_src[e.src].append(e)
    start = (anchor, 0)
    parents: dict[tuple[str, int], tuple[tuple[str, int], Edge]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        config = queue.popleft()
        state, d = config
        if state == anchor and (d > 0 if sign > 0 else d < 0):
            walk: list[Edge] = []
            while config != start:
                config, e = parents[config][0], parents[config][1]
                walk.append(e)
            walk.reverse()
            return tuple(walk)
        for e in by_src[state]:
            nd = d + edge_weight(e)
            if abs(nd) > limit:
                continue
            nxt = (e.dst, nd)
            if nxt not in seen:
                seen.add(nxt)
                parents[nxt] = (config, e)
                queue.append(nxt)
    raise AssertionError(f"no signed closed walk at {anchor}; detection disagrees")


def _walk_between(sources, target: str, edges: list[Edge]) -> tuple[Edge, ...]:
    """Shortest edge walk from any source state to the target state."""
    by_src: dict[str, list[Edge]] = {}
    for e in edges:
        by_src.setdefault(e.src, []).append(e)
    parents: dict[str, tuple[str, Edge]] = {}
    seen = set(sources)
    queue = deque(sorted(seen))
    while queue:
        state = queue.popleft()
        if state == target:
            walk = []
            while state not in sources:
                state, e = parents[state]
                walk.append(e)
            walk.reverse()
            return tuple(walk)
        for e in by_src.get(state, ()):
            if e.dst not in seen:
                seen.add(e.dst)
                parents[e.dst] = (state, e)
                queue.append(e.dst)
    raise AssertionError(f"no walk to {target}; reachability disagrees")


def is_zero_avoiding(t: Transducer) -> ZeroAvoidanceReport:
    """Decide whether any discrepancy bound exists; witness when not."""
    states, edges = _initial_part(t)
    graph = nx.DiGraph()
    graph.add_nodes_from(states)
    graph.add_edges_from((e.src, e.dst) for e in edges)
    components = [sorted(c, key=t.states.index) for c in nx.strongly_connected_components(graph)]
    components.sort(key=lambda c: t.states.index(c[0]))
    marks: list[tuple[list[str], bool, bool]] = []
    for comp in components:
        inside = set(comp)
        comp_edges = [e for e in edges if e.src in inside and e.dst in inside]
        pos = _has_sign_cycle(comp, comp_edges, +1) if comp_edges else False
        neg = _has_sign_cycle(comp, comp_edges, -1) if comp_edges else False
        marks.append((comp, pos, neg))

    def build_witness(first: list[str], first_sign: int, second: list[str], second_sign: int) -> Witness:
        inside1, inside2 = set(first), set(second)
        edges1 = [e for e in edges if e.src in inside1 and e.dst in inside1]
        edges2 = [e for e in edges if e.src in inside2 and e.dst in inside2]
        anchor1, anchor2 = first[0], second[0]
        c1 = _closed_walk(anchor1, first, edges1, first_sign)
        c2 = _closed_walk(anchor2, second, edges2, second_sign)
        lead_in = _walk_between(set(t.initials), anchor1, edges)
        link = _walk_between({anchor1}, anchor2, edges)
        return Witness(lead_in=lead_in, c1=c1, link=link, c2=c2)

    for comp_a, pos_a, neg_a in marks:
        for comp_b, pos_b, neg_b in marks:
            if comp_a is comp_b:
                if pos_a and neg_a:
                    witness = build_witness(comp_a, +1, comp_b, -1)
                    return ZeroAvoidanceReport(False, witness=witness)
                continue
            if not nx.has_path(graph, comp_a[0], comp_b[0]):
                continue
            if pos_a and neg_b:
                witness = build_witness(comp_a, +1, comp_b, -1)
                return ZeroAvoidanceReport(False, witness=witness)
            if neg_a and pos_b:
                witness = build_witness(comp_a, -1, comp_b, +1)
                return ZeroAvoidanceReport(False, witness=witness)
    return ZeroAvoidanceReport(True)


def minimum_bound(t: Transducer) -> int:
    """Least k making the machine zero-avoiding with bound k.

    Configurations (state, running discrepancy, running max) are explored
    breadth first from the initial states.  A computation that returns to
    discrepancy zero can never leave |d| < n (with n the state count), so
    configurations beyond that window cannot influence the answer and are
    pruned; the result is the largest running max seen at discrepancy
    zero, and it is always below n.
    """
    report = is_zero_avoiding(t)
    if not report.zero_avoiding:
        raise NotZeroAvoiding(report.witness)
    n = len(t.states)
    by_src: dict[str, list[Edge]] = {s: [] for s in t.states}
    for e in t.edges:
        by_src[e.src].append(e)
    start = [(s, 0, 0) for s in sorted(t.initials, key=t.states.index)]
    seen = set(start)
    queue = deque(start)
    best = 0
    while queue:
        state, d, m = queue.popleft()
        if d == 0:
            best = max(best, m)
        for e in by_src[state]:
            nd = d + edge_weight(e)
            if abs(nd) >= n:
                continue
            nxt = (e.dst, nd, max(m, abs(nd)))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return best
