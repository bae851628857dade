"""Exception types shared across the package."""


class RelsplitError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RelsplitError):
    """A transducer or pair file could not be parsed."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class EmptyInitialSet(RelsplitError):
    """A transducer was declared with no initial state."""


class InvalidSymbol(RelsplitError):
    """A label symbol falls outside the declared alphabet."""


class AlphabetMismatch(RelsplitError):
    """Two machines combined by union or concat disagree on alphabet size."""


class NotAPath(RelsplitError):
    """An edge sequence is not consecutive or uses edges the machine lacks."""


class NotLetterToLetter(RelsplitError):
    """The construction requires every label to be symbol/symbol."""


class HasEpsilonPair(RelsplitError):
    """The operation requires the machine to carry no lambda/lambda edge."""


class NotZeroAvoiding(RelsplitError):
    """The machine admits a computation through opposite-sign cycles.

    Carries a witness object (see discrepancy.Witness) holding the two
    cycles and the walks connecting them, as replayable edge sequences.
    """

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not zero-avoiding: {witness}")


class NotInputAltering(RelsplitError):
    """The realized relation contains a pair w/w.

    The witness word is stored as a tuple of symbols.
    """

    def __init__(self, word):
        self.word = tuple(word)
        shown = "".join(str(s) for s in self.word) or "-"
        super().__init__(f"relation is not irreflexive: contains {shown}/{shown}")


class BoundTooSmall(RelsplitError):
    """A caller-supplied discrepancy bound is below the machine's minimum."""

    def __init__(self, requested: int, minimum: int):
        super().__init__(f"bound {requested} is below the minimum bound {minimum}")
        self.requested = requested
        self.minimum = minimum


class ShapeViolation(RelsplitError):
    """A building block does not have the shape the builder requires."""


class CapMismatch(RelsplitError):
    """Bounded relations with different caps cannot be compared."""
