"""Exception hierarchy shared by all modules."""


class QCharError(Exception):
    """Base class for every error raised by queerchar."""


class RankMismatch(QCharError, ValueError):
    pass


class NonExactDivision(QCharError, ArithmeticError):
    """A division that must be exact left a remainder."""


class NonDominant(QCharError, ValueError):
    """Input weight is not (weakly) dominant as required."""


class NonDistinct(QCharError, ValueError):
    pass


class NotSymmetric(QCharError, ValueError):
    pass


class InternalError(QCharError, RuntimeError):
    pass


class NegativeCoefficient(InternalError):
    """A computed character has a negative multiplicity."""


class OddLengthGap(InternalError):
    pass


class TheoremViolation(QCharError, AssertionError):
    """A non-zero dominant weight produced a trivial gl(n)-factor."""

    def __init__(self, weight, trivial_mult):
        self.weight = tuple(weight)
        self.trivial_mult = trivial_mult
        super().__init__(
            f"weight {self.weight}: trivial gl(n)-multiplicity {trivial_mult} != 0"
        )
