"""Exception hierarchy for the logos engine.

Every error carries the CLI exit code it maps to.
"""


class LogosError(ValueError):
    """Base class for all logos errors."""

    exit_code: int = 2


class InvariantViolation(LogosError):
    """A value failed the invariants of its type."""

    exit_code = 2


class PreconditionFailure(LogosError):
    """An operation was called outside its domain."""

    exit_code = 3


class ParseError(LogosError):
    """Input could not be read or named something that does not exist."""

    exit_code = 1


class UnknownName(ParseError):
    pass


# Invariant violations

class NonUnitVector(InvariantViolation):
    pass


class NonUnitary(InvariantViolation):
    pass


class InvalidDensity(InvariantViolation):
    pass


class InvalidProjector(InvariantViolation):
    pass


class RankNotSupported(InvariantViolation):
    pass


class NonOrthonormalBasis(InvariantViolation):
    pass


class InconsistentRecords(InvariantViolation):
    pass


class InvalidValuation(InvariantViolation):
    pass


class NonNormalizedPSA(InvariantViolation):
    pass


# Precondition failures

class DimensionMismatch(PreconditionFailure):
    pass


class EmptyInput(PreconditionFailure):
    pass


class UnknownNode(PreconditionFailure):
    pass


class MixedStateNotExpandable(PreconditionFailure):
    pass


class IncompleteContext(PreconditionFailure):
    pass


class Underdetermined(PreconditionFailure):
    pass


class NotPure(PreconditionFailure):
    pass


class NotContradictoryPair(PreconditionFailure):
    pass


class MissingNodeValue(PreconditionFailure):
    pass
