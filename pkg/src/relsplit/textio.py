"""Reading and writing the transducer text format, plus DOT export.

The format is line oriented and whitespace tokenized; "#" starts a
comment that runs to the end of the line.  The first meaningful line is
`alphabet <q>`, declaring symbols 0..q-1 (written in decimal).  Then:

    state <name> [initial] [final]
    arc <src> <dst> <x> <y>

where <x> and <y> are a decimal symbol or "-" for the empty word.
Serialization lists states in declaration order and arcs in the
machine's canonical order, so serialize(parse(serialize(t))) is byte
identical to serialize(t).
"""

from __future__ import annotations

from .errors import InvalidSymbol, ParseError
from .machine import Edge, Transducer


def _parse_side(token: str, alphabet: int, lineno: int) -> int | None:
    if token == "-":
        return None
    try:
        sym = int(token)
    except ValueError:
        raise ParseError(lineno, f"bad label token {token!r}") from None
    if sym < 0 or sym >= alphabet:
        raise InvalidSymbol(
            f"line {lineno}: symbol {sym} outside alphabet 0..{alphabet - 1}"
        )
    return sym


def parse(text: str) -> Transducer:
    """Parse the text format into a Transducer."""
    alphabet: int | None = None
    states: list[str] = []
    seen: set[str] = set()
    initials: set[str] = set()
    finals: set[str] = set()
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if alphabet is None:
            if kind != "alphabet" or len(tokens) != 2:
                raise ParseError(lineno, "expected `alphabet <q>` first")
            try:
                alphabet = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"bad alphabet size {tokens[1]!r}") from None
            if alphabet < 1:
                raise ParseError(lineno, "alphabet size must be positive")
        elif kind == "state":
            if len(tokens) < 2:
                raise ParseError(lineno, "state line needs a name")
            name = tokens[1]
            if name in seen:
                raise ParseError(lineno, f"duplicate state {name!r}")
            seen.add(name)
            states.append(name)
            for flag in tokens[2:]:
                if flag == "initial":
                    initials.add(name)
                elif flag == "final":
                    finals.add(name)
                else:
                    raise ParseError(lineno, f"unknown state flag {flag!r}")
        elif kind == "arc":
            if len(tokens) != 5:
                raise ParseError(lineno, "arc line needs `arc <src> <dst> <x> <y>`")
            src, dst = tokens[1], tokens[2]
            for endpoint in (src, dst):
                if endpoint not in seen:
                    raise ParseError(lineno, f"arc references undeclared state {endpoint!r}")
            inp = _parse_side(tokens[3], alphabet, lineno)
            out = _parse_side(tokens[4], alphabet, lineno)
            edges.append(Edge(src, dst, inp, out))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    if alphabet is None:
        raise ParseError(1, "empty input: expected `alphabet <q>`")
    return Transducer(alphabet, tuple(states), tuple(edges), frozenset(initials), frozenset(finals))


def parse_path(path) -> Transducer:
    with open(path, encoding="utf-8") as handle:
        return parse(handle.read())


def _side_token(x: int | None) -> str:
    return "-" if x is None else str(x)


def serialize(t: Transducer) -> str:
    """Deterministic text rendering of a machine."""
    lines = [f"alphabet {t.alphabet}"]
    for s in t.states:
        flags = ""
        if s in t.initials:
            flags += " initial"
        if s in t.finals:
            flags += " final"
        lines.append(f"state {s}{flags}")
    for e in t.edges:
        lines.append(f"arc {e.src} {e.dst} {_side_token(e.inp)} {_side_token(e.out)}")
    return "\n".join(lines) + "\n"


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(t: Transducer) -> str:
    """GraphViz rendering: doubled circles for finals, arrow-in for initials."""
    lines = ["digraph transducer {", "  rankdir=LR;"]
    for i, s in enumerate(sorted(t.initials, key=t.states.index)):
        lines.append(f"  __start{i} [shape=point, label=\"\"];")
    for s in t.states:
        shape = "doublecircle" if s in t.finals else "circle"
        lines.append(f"  {_quote(s)} [shape={shape}];")
    for i, s in enumerate(sorted(t.initials, key=t.states.index)):
        lines.append(f"  __start{i} -> {_quote(s)};")
    for e in t.edges:
        lam = "λ"
        label = f"{lam if e.inp is None else e.inp}/{lam if e.out is None else e.out}"
        lines.append(f"  {_quote(e.src)} -> {_quote(e.dst)} [label=\"{label}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
