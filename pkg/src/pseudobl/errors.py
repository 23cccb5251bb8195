"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by pseudobl."""


class ParseError(AlgebraError):
    pass


class OrderMismatch(AlgebraError):
    """The two residua do not induce the same order."""


class NotPartialOrder(AlgebraError):
    pass


class NotMeetSemilattice(AlgebraError):
    pass


class MissingJoin(AlgebraError):
    pass


class ProfileMismatch(AlgebraError):
    pass


class UnboundVariable(AlgebraError):
    pass


class UnboundedAlgebra(AlgebraError):
    """A bounded-only operation was requested on an algebra without bottom."""


class DomainError(AlgebraError):
    pass


class SizeLimit(AlgebraError):
    pass


class JoinRequired(AlgebraError):
    pass


class NotBasic(AlgebraError):
    pass


class GIsTop(AlgebraError):
    pass


class NotNormal(AlgebraError):
    pass


class NotInvolutive(AlgebraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotPositiveUnit(AlgebraError):
    pass


class NotStrongUnit(AlgebraError):
    pass


class BudgetExceeded(AlgebraError):
    pass


class NotInMNP(AlgebraError):
    pass


class UnknownPreset(AlgebraError):
    pass


class NoMaxFilterPredicate(AlgebraError):
    pass


class TheoryViolation(AlgebraError):
    """Two characterizations that must coincide disagreed on an input."""
