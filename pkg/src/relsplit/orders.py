"""Total strict orders on words.

Words are tuples of alphabet symbols.  Two comparators are provided:

* radix: shorter words come first, equal lengths fall back to the
  symbol-wise comparison (this is shortlex, and it matches the ordering
  of the numbers the words denote when no symbol acts as a zero digit);
* lex: plain dictionary order, where a proper prefix precedes the word
  it prefixes.

The empty word is the least element of both orders.
"""

from __future__ import annotations

Word = tuple[int, ...]


def radix_less(u: Word, v: Word) -> bool:
    """True iff u precedes v in the length-then-lexicographic order."""
    return (len(u), u) < (len(v), v)


def lex_less(u: Word, v: Word) -> bool:
    """True iff u strictly precedes v in dictionary order."""
    # tuple comparison is exactly dictionary order, prefixes included
    return u < v


COMPARATORS = {
    "radix": radix_less,
    "lex": lex_less,
}


def less(kind: str):
    """Look up a comparator by name ("radix" or "lex")."""
    try:
        return COMPARATORS[kind]
    except KeyError:
        raise ValueError(f"unknown order kind: {kind!r}") from None
