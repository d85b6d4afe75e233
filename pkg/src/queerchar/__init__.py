"""Exact characters and branching for finite-dimensional q(n)-modules."""
from .errors import (
    InternalError,
    NegativeCoefficient,
    NonDistinct,
    NonDominant,
    NonExactDivision,
    NotSymmetric,
    OddLengthGap,
    QCharError,
    RankMismatch,
    TheoremViolation,
)
from .laurent import LaurentPoly, exact_divide, monomial
from .characters import euler_char, schur, schur_expand, schur_p, weyl_denominator_product
from .brundan import (
    block_closure,
    branching,
    decompose_euler,
    irreducible_character,
    pairing,
    r_theta,
    supercharacter_verdict,
    trivial_multiplicity,
)

__version__ = "0.1.0"
