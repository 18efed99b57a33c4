"""Exception hierarchy for kellerkit.

Every domain error derives from KellerKitError so callers can catch one
type.  Structured negative *results* (a map that is simply not an
automorphism, an embedding report with a witness) are returned as values,
not raised; exceptions are reserved for violated hypotheses, violated
preconditions, malformed input, and internal contradictions that would
disprove a theorem.
"""

from __future__ import annotations


class KellerKitError(Exception):
    """Base class for all kellerkit errors."""


class HypothesisViolated(KellerKitError):
    """An operation's mathematical hypothesis does not hold for the input.

    ``reason`` is a stable machine-readable code such as ``"DegreeTooLow"``
    or ``"JacobianNotConstant"``; the message carries the human detail.
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)


class PreconditionViolated(KellerKitError):
    """A documented precondition was not met by the caller."""

    def __init__(self, condition: str, message: str = ""):
        self.condition = condition
        super().__init__(message or condition)


class InvalidLine(KellerKitError):
    """Line coefficients a = b = 0 do not define a line."""


class DegenerateResultant(KellerKitError):
    """resultant_y needs both arguments to have positive y-degree."""


class NonPositiveFactor(KellerKitError):
    """Polygon scaling factors must be positive rationals."""


class NotAnEmbedding(KellerKitError):
    """rectify was called on a parametrization that is not an embedding."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            "not an embedding (injective=%s, immersion=%s)"
            % (report.injective, report.immersion)
        )


class AbhyankarMohViolation(KellerKitError):
    """The rectification loop reached a state the Abhyankar-Moh theorem
    rules out for genuine embeddings.  Seeing this on an input that passed
    the embedding check would be a disproof, so it carries the offending
    state."""

    def __init__(self, message: str, state=None):
        self.state = state
        super().__init__(message)


class NotInjectiveOnLine(KellerKitError):
    """The restriction of the map to the given line is not injective."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__("restriction to the line is not injective")


class JacobianNotConstant(KellerKitError):
    """The map's Jacobian determinant is not a nonzero constant."""

    def __init__(self, jacobian):
        self.jacobian = jacobian
        super().__init__("jacobian determinant is not a nonzero constant")


class TheoremViolationWitness(KellerKitError):
    """An internal step that is mathematically guaranteed to succeed failed.

    This is never expected to be raised on any input; it exists so the
    impossible branch is executable and carries enough state to study.
    """

    def __init__(self, message: str, details=None):
        self.details = details or {}
        super().__init__(message)


class ParseError(KellerKitError):
    """Polynomial text could not be parsed.

    Carries 1-based line and column of the offending character plus a
    short description of what was expected there.
    """

    def __init__(self, message: str, line: int, column: int, expected: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__("%s (line %d, column %d)" % (message, line, column))


class DenominatorZero(KellerKitError):
    """A rational literal had denominator zero."""

    def __init__(self, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__("denominator is zero (line %d, column %d)" % (line, column))
