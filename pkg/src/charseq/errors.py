"""Exception types shared across the package.

Soft outcomes (a search that ran out of range, a basis set with no
witness below the bound) are ordinary return values, not exceptions.
Exceptions mark contract violations or certified-arithmetic failures.
"""


class CharseqError(Exception):
    """Base class for all package errors."""


class OracleFailure(CharseqError):
    """An irrational symbol's oracle cannot deliver the requested precision."""

    def __init__(self, symbol, bits, message=None):
        self.symbol = symbol
        self.bits = bits
        super().__init__(message or f"oracle for {symbol!r} failed at {bits} bits")


class UndecidableMembership(CharseqError):
    """A certified comparison hit the precision cap without separating.

    Carries the integer (character) whose membership could not be decided,
    when there is one.
    """

    def __init__(self, k=None, message=None):
        self.k = k
        super().__init__(message or f"membership of {k} undecidable at precision cap")


class InvalidSigma(CharseqError, ValueError):
    """A norm threshold lies outside its admissible range."""


class BudgetExceeded(CharseqError):
    """A bounded search ran out of budget before reaching its goal.

    `stage` is set when raised from inside the staged pipeline.
    """

    def __init__(self, message, stage=None):
        self.stage = stage
        super().__init__(message)


class DegenerateSpacing(CharseqError):
    """Two distinct points could not be separated at the precision cap."""


class RelationViolation(CharseqError):
    """A homomorphism target breaks an integer relation of its sources.

    `witness` is the violating relation vector.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"targets violate integer relation {self.witness}")


class NotInComplement(CharseqError):
    """A point claimed to lie outside a subgroup actually belongs to it."""


class ExhaustedSource(CharseqError):
    """The materialized prefix of a source sequence is too short."""


class LengthMismatch(CharseqError, ValueError):
    """Two sequences that must be interleaved have different lengths."""
