"""Splitting a relation along the radix order with copied-state machines.

Both constructions run the source machine unchanged while a finite tag
on each state copy tracks how the input word read so far compares with
the output word emitted so far.  Accepting is then a matter of which
tags are final:

* build_greater_ltl handles letter-to-letter machines.  The words grow
  in lockstep, so three tags suffice: sides still equal, input already
  radix-greater, input already radix-smaller.
* build_greater handles machines whose discrepancy stays within a bound
  k whenever it returns to zero.  Tags additionally remember the pending
  surplus word of whichever side is ahead (at most k symbols, thanks to
  the bound) and, once the letter comparison is settled, the running
  length difference clamped to [-k, k]; beyond the clamp the length
  difference can never be recovered, so the radix comparison is decided
  by length alone.

Either way the result realizes exactly the radix-greater half of the
source relation, and the radix-smaller half is the inverse construction
applied to the inverse machine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .discrepancy import is_zero_avoiding, minimum_bound
from .errors import (
    BoundTooSmall,
    HasEpsilonPair,
    NotAPath,
    NotInputAltering,
    NotLetterToLetter,
    NotZeroAvoiding,
)
from .machine import Edge, Transducer, inverse, is_letter_to_letter, is_path, remove_epsilon_pairs, trim
from .orders import Word

SAME = "same"      # both sides read so far are equal
ACC = "acc"        # input side has won the radix comparison for good
REJ = "rej"        # input side has lost it for good
PLUS = "plus"      # input side is ahead by the pending word
MINUS = "minus"    # output side is ahead by the pending word
ACC_D = "acc_d"    # letters settled in input's favour; delta = length lead
REJ_D = "rej_d"    # letters settled against input; delta = length lead


@dataclass(frozen=True)
class Copy:
    """A state tag: kind plus pending word or clamped length delta."""

    kind: str
    word: Word = ()
    delta: int = 0

    def tag(self) -> str:
        if self.kind == SAME:
            return "L"
        if self.kind == ACC:
            return "A"
        if self.kind == REJ:
            return "R"
        if self.kind in (PLUS, MINUS):
            sep = "." if any(s > 9 for s in self.word) else ""
            body = sep.join(str(s) for s in self.word)
            return ("+" if self.kind == PLUS else "-") + body
        if self.kind == ACC_D:
            return f"A{self.delta}"
        return f"R{self.delta}"


def copy_count(alphabet: int, k: int) -> int:
    """Number of state copies used by build_greater."""
    words = sum(alphabet**j for j in range(1, k + 1))
    return 3 + 2 * words + 2 * (2 * k + 1)


def _all_words(alphabet: int, k: int) -> list[Word]:
    words: list[Word] = []
    frontier: list[Word] = [()]
    for _ in range(k):
        frontier = [w + (s,) for w in frontier for s in range(alphabet)]
        words.extend(frontier)
    return words


def copy_labels(alphabet: int, k: int) -> list[Copy]:
    """The full tag set for bound k, in canonical order."""
    copies = [Copy(SAME), Copy(ACC), Copy(REJ)]
    words = _all_words(alphabet, k)
    copies.extend(Copy(PLUS, word=w) for w in words)
    copies.extend(Copy(MINUS, word=w) for w in words)
    copies.extend(Copy(ACC_D, delta=d) for d in range(-k, k + 1))
    copies.extend(Copy(REJ_D, delta=d) for d in range(-k, k + 1))
    return copies


def copy_state_name(base: str, copy: Copy) -> str:
    return f"{base}^{copy.tag()}"


def split_copy_name(name: str) -> tuple[str, str]:
    """Split a copied-state name into (source state, tag)."""
    base, sep, tag = name.rpartition("^")
    if not sep:
        raise ValueError(f"{name!r} carries no copy tag")
    return base, tag


def build_greater_ltl(s: Transducer) -> Transducer:
    """Radix-greater half of a letter-to-letter machine.

    Three copies of the state set; runs start in the equal-sides copy and
    must end in the input-greater copy.  Exactly 3 * |Q| states.
    """
    if not is_letter_to_letter(s):
        raise NotLetterToLetter("build_greater_ltl needs symbol/symbol labels only")
    same, acc, rej = Copy(SAME), Copy(ACC), Copy(REJ)
    states = tuple(
        copy_state_name(q, c) for c in (same, acc, rej) for q in s.states
    )
    edges = []
    for e in s.edges:
        for c in (acc, rej):
            edges.append(Edge(copy_state_name(e.src, c), copy_state_name(e.dst, c), e.inp, e.out))
        if e.inp == e.out:
            dst = same
        elif e.inp > e.out:
            dst = acc
        else:
            dst = rej
        edges.append(Edge(copy_state_name(e.src, same), copy_state_name(e.dst, dst), e.inp, e.out))
    initials = frozenset(copy_state_name(q, same) for q in s.initials)
    finals = frozenset(copy_state_name(q, acc) for q in s.finals)
    return Transducer(s.alphabet, states, tuple(edges), initials, finals)


def _step(copy: Copy, inp: int | None, out: int | None, k: int) -> Copy:
    """Destination tag after reading one edge label from a tagged state."""
    if copy.kind == ACC:
        return copy
    if copy.kind == REJ:
        return copy
    if copy.kind == SAME:
        if inp is not None and out is not None:
            if inp == out:
                return Copy(SAME)
            return Copy(ACC_D) if inp > out else Copy(REJ_D)
        if out is None:  # symbol consumed, nothing emitted
            return Copy(PLUS, word=(inp,)) if k > 0 else Copy(ACC)
        return Copy(MINUS, word=(out,)) if k > 0 else Copy(REJ)
    if copy.kind == PLUS:
        u = copy.word
        if inp is not None and out is None:
            if len(u) < k:
                return Copy(PLUS, word=u + (inp,))
            return Copy(ACC)
        if inp is None:
            # the emitted symbol lines up against the pending head
            if u[0] == out:
                rest = u[1:]
                return Copy(PLUS, word=rest) if rest else Copy(SAME)
            settled = ACC_D if u[0] > out else REJ_D
            return Copy(settled, delta=len(u) - 1)
        if u[0] == out:
            return Copy(PLUS, word=u[1:] + (inp,))
        settled = ACC_D if u[0] > out else REJ_D
        return Copy(settled, delta=len(u))
    if copy.kind == MINUS:
        u = copy.word
        if inp is None and out is not None:
            if len(u) < k:
                return Copy(MINUS, word=u + (out,))
            return Copy(REJ)
        if out is None:
            # the consumed symbol lines up against the pending head
            if u[0] == inp:
                rest = u[1:]
                return Copy(MINUS, word=rest) if rest else Copy(SAME)
            settled = REJ_D if u[0] > inp else ACC_D
            return Copy(settled, delta=-(len(u) - 1))
        if u[0] == inp:
            return Copy(MINUS, word=u[1:] + (out,))
        settled = REJ_D if u[0] > inp else ACC_D
        return Copy(settled, delta=-len(u))
    # settled tags race on length alone; past the clamp the race is over
    if inp is not None and out is None:
        if copy.delta < k:
            return Copy(copy.kind, delta=copy.delta + 1)
        return Copy(ACC)
    if inp is None and out is not None:
        if copy.delta > -k:
            return Copy(copy.kind, delta=copy.delta - 1)
        return Copy(REJ)
    return copy


def build_greater(s: Transducer, k: int) -> Transducer:
    """Radix-greater half of a machine zero-avoiding with bound k.

    The full tag set is materialized (copy_count(q, k) copies of every
    state) so the pre-trim size follows the closed formula; callers
    normally trim the result.
    """
    if any(e.inp is None and e.out is None for e in s.edges):
        raise HasEpsilonPair("remove lambda/lambda edges first")
    need = minimum_bound(s)
    if k < need:
        raise BoundTooSmall(k, need)
    copies = copy_labels(s.alphabet, k)
    states = tuple(copy_state_name(q, c) for c in copies for q in s.states)
    edges = []
    for c in copies:
        for e in s.edges:
            d = _step(c, e.inp, e.out, k)
            edges.append(Edge(copy_state_name(e.src, c), copy_state_name(e.dst, d), e.inp, e.out))
    finals = set()
    for q in s.finals:
        finals.add(copy_state_name(q, Copy(ACC)))
        finals.add(copy_state_name(q, Copy(ACC_D, delta=0)))
        for w in _all_words(s.alphabet, k):
            finals.add(copy_state_name(q, Copy(PLUS, word=w)))
        for d in range(1, k + 1):
            finals.add(copy_state_name(q, Copy(ACC_D, delta=d)))
            finals.add(copy_state_name(q, Copy(REJ_D, delta=d)))
    initials = frozenset(copy_state_name(q, Copy(SAME)) for q in s.initials)
    return Transducer(s.alphabet, states, tuple(edges), initials, frozenset(finals))


def base_path(tprime: Transducer, pprime) -> tuple[Edge, ...]:
    """Erase copy tags from a path of a copied machine.

    The labels are untouched, so the result is the corresponding path of
    the source machine with the same label pair.
    """
    if not is_path(tprime, pprime):
        raise NotAPath("not a path of the copied machine")
    erased = []
    for e in pprime:
        src, _ = split_copy_name(e.src)
        dst, _ = split_copy_name(e.dst)
        erased.append(Edge(src, dst, e.inp, e.out))
    return tuple(erased)


def is_input_altering(s: Transducer, k: int) -> tuple[bool, Word | None]:
    """Does the machine avoid every pair w/w?

    Runs the machine against itself: configurations track which side is
    ahead and by which pending word.  On a w/w-labeled computation the
    discrepancy returns to zero at the end, so under zero-avoidance with
    bound k no prefix can be ahead by more than k symbols and the search
    window is complete.  Returns (False, w) with a witness word when some
    w/w is realized, (True, None) otherwise.
    """
    if any(e.inp is None and e.out is None for e in s.edges):
        raise HasEpsilonPair("remove lambda/lambda edges first")
    by_src: dict[str, list[Edge]] = {q: [] for q in s.states}
    for e in s.edges:
        by_src[e.src].append(e)
    Config = tuple  # (state, lead, pending): lead -1/0/+1, pending Word
    start: list[Config] = [(q, 0, ()) for q in sorted(s.initials, key=s.states.index)]
    parents: dict[Config, tuple[Config, Edge]] = {}
    seen = set(start)
    queue = deque(start)

    def witness(config: Config) -> Word:
        symbols: list[int] = []
        while config in parents:
            config, e = parents[config]
            if e.inp is not None:
                symbols.append(e.inp)
        symbols.reverse()
        return tuple(symbols)

    while queue:
        config = queue.popleft()
        state, lead, pending = config
        if lead == 0 and state in s.finals:
            return False, witness(config)
        for e in by_src[state]:
            nxt: Config | None = None
            if e.inp is not None and e.out is None:
                if lead >= 0:
                    if len(pending) < k:
                        nxt = (e.dst, 1, pending + (e.inp,))
                elif pending[0] == e.inp:
                    rest = pending[1:]
                    nxt = (e.dst, -1 if rest else 0, rest)
            elif e.inp is None and e.out is not None:
                if lead <= 0:
                    if len(pending) < k:
                        nxt = (e.dst, -1, pending + (e.out,))
                elif pending[0] == e.out:
                    rest = pending[1:]
                    nxt = (e.dst, 1 if rest else 0, rest)
            else:
                if lead == 0:
                    if e.inp == e.out:
                        nxt = (e.dst, 0, ())
                elif lead > 0:
                    if pending[0] == e.out:
                        nxt = (e.dst, 1, pending[1:] + (e.inp,))
                else:
                    if pending[0] == e.inp:
                        nxt = (e.dst, -1, pending[1:] + (e.out,))
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                parents[nxt] = (config, e)
                queue.append(nxt)
    return True, None


@dataclass(frozen=True)
class PartitionResult:
    greater: Transducer
    lesser: Transducer
    bound: int
    letter_to_letter: bool


def partition(s: Transducer, bound: int | None = None) -> PartitionResult:
    """Split rel(s) into its radix-greater and radix-smaller halves.

    The input must realize an irreflexive relation; when it is symmetric
    the two halves are mutual inverses.  A caller-supplied bound is
    honoured if it is at least the machine's minimum; by default the
    minimum is used, which keeps the copied machines as small as the
    construction allows.
    """
    base = trim(remove_epsilon_pairs(s))
    ltl = is_letter_to_letter(base)
    if ltl and bound is None:
        k = 0
        altering, word = is_input_altering(base, k)
        if not altering:
            raise NotInputAltering(word)
        greater = trim(build_greater_ltl(base))
        lesser = trim(inverse(build_greater_ltl(inverse(base))))
        return PartitionResult(greater, lesser, k, True)
    report = is_zero_avoiding(base)
    if not report.zero_avoiding:
        raise NotZeroAvoiding(report.witness)
    need = minimum_bound(base)
    if bound is None:
        k = need
    elif bound < need:
        raise BoundTooSmall(bound, need)
    else:
        k = bound
    altering, word = is_input_altering(base, k)
    if not altering:
        raise NotInputAltering(word)
    greater = trim(build_greater(base, k))
    lesser = trim(inverse(build_greater(inverse(base), k)))
    return PartitionResult(greater, lesser, k, ltl)
