"""Schur and Schur P Laurent polynomials, Euler characters, Verma data.

Exponent ``e`` of a monomial is identified with the gl(n)-weight ``sum e_i delta_i``
(``x_i = e^{delta_i}``).  Everything is computed with exact integer arithmetic.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import InternalError, NonDominant, NotSymmetric
from .laurent import (
    LaurentPoly,
    antisymmetrize,
    exact_divide,
    is_symmetric,
    monomial,
    product,
    vandermonde,
)
from .weights import (
    Weight,
    count_root_subsets,
    ell,
    is_dominant_integral,
    is_weakly_decreasing,
    rho_prime,
)

SchurExpansion = dict[Weight, int]


def clifford_dim(weight: Sequence[int]) -> int:
    """Dimension ``2^ceil(l/2)`` of the highest weight space of a Verma module."""
    return 2 ** ((ell(weight) + 1) // 2)


@lru_cache(maxsize=None)
def _vandermonde(n: int) -> LaurentPoly:
    return vandermonde(n)


@lru_cache(maxsize=None)
def _schur(mu: Weight) -> LaurentPoly:
    n = len(mu)
    shifted = tuple(a + b for a, b in zip(mu, rho_prime(n)))
    alternant = antisymmetrize(monomial(n, shifted))
    return exact_divide(alternant, _vandermonde(n))


def schur(mu: Sequence[int]) -> LaurentPoly:
    """Schur Laurent polynomial ``s_mu`` as a bialternant quotient.

    ``mu`` must be weakly decreasing (negative parts allowed).  This is the
    character of the irreducible gl(n)-module ``L0(mu)``.
    """
    mu = tuple(mu)
    if not is_weakly_decreasing(mu):
        raise NonDominant(f"{mu} is not weakly decreasing")
    return _schur(mu)


def schur_expand(f: LaurentPoly) -> SchurExpansion:
    """Coefficients of ``f`` in the Schur basis.

    Peels off the lexicographically leading monomial, which for a symmetric
    Laurent polynomial always has weakly decreasing exponent.
    """
    if not is_symmetric(f):
        raise NotSymmetric("Schur expansion needs a symmetric Laurent polynomial")
    out: SchurExpansion = {}
    rest = f
    while not rest.is_zero():
        e, c = rest.leading_term()
        if not is_weakly_decreasing(e):
            raise InternalError(f"leading exponent {e} of a symmetric input is not sorted")
        out[e] = c
        rest = rest - _schur(e).scale(c)
    return dict(sorted(out.items(), reverse=True))


def _check_dominant(weight: Sequence[int]) -> Weight:
    weight = tuple(weight)
    if not is_dominant_integral(weight):
        raise NonDominant(f"{weight} is not dominant integral")
    return weight


@lru_cache(maxsize=None)
def _schur_p(lam: Weight) -> LaurentPoly:
    n = len(lam)
    x = [LaurentPoly.variable(n, i) for i in range(n)]
    # x^lam * prod (x_i + x_j) over strict pairs * prod (x_i - x_j) over the rest;
    # antisymmetrizing this and dividing by the Vandermonde gives the full S_n sum
    # of x^lam * prod (x_i + x_j)/(x_i - x_j).
    factors = []
    for i in range(n):
        for j in range(i + 1, n):
            if lam[i] > lam[j]:
                factors.append(x[i] + x[j])
            else:
                factors.append(x[i] - x[j])
    seed = monomial(n, lam) * product(factors, n)
    full = exact_divide(antisymmetrize(seed), _vandermonde(n))
    # summand is invariant under the stabilizer, which only permutes zeros
    stab = factorial(n - ell(lam))
    return full.exact_div_int(stab)


def schur_p(lam: Sequence[int]) -> LaurentPoly:
    """Schur P-Laurent polynomial ``P_lam`` for a dominant integral weight."""
    return _schur_p(_check_dominant(lam))


def euler_char(lam: Sequence[int]) -> LaurentPoly:
    """Character of the Euler characteristic module ``E(lam)``."""
    lam = _check_dominant(lam)
    return _schur_p(lam).scale(clifford_dim(lam))


@lru_cache(maxsize=None)
def weyl_denominator_product(n: int) -> LaurentPoly:
    """``prod_{i<j} (x_i + x_j)``, the character of ``L0(rho')``."""
    x = [LaurentPoly.variable(n, i) for i in range(n)]
    return product((x[i] + x[j] for i in range(n) for j in range(i + 1, n)), n)


def verma_trivial_multiplicity(lam: Sequence[int]) -> int:
    """Multiplicity ``[Delta(lam) : L0(0)]`` over gl(n).

    ``ch Delta(lam)`` is ``dim I_lam`` times the sum of gl(n)-Verma characters
    ``ch Delta0(lam - sum(I))`` over subsets ``I`` of positive roots, and ``L0(0)``
    occurs in ``Delta0(mu)`` only for ``mu = 0`` (0 is dominant, so it heads
    nothing but its own Verma module).
    """
    return clifford_dim(lam) * count_root_subsets(lam)


def sch_verma(lam: Sequence[int]) -> int:
    """Supercharacter of ``Delta(lam)``: the constant 1 at ``lam = 0``, else 0."""
    return 0 if any(lam) else 1


def expansion_is_nonnegative(exp: SchurExpansion) -> bool:
    return all(c >= 0 for c in exp.values())
