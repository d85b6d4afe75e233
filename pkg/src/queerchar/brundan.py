"""Decomposition of Euler characters into irreducible q(n)-characters.

For a dominant integral weight the nested zero-sum pairing, the integers
``k_s`` and the raising operator ``R_theta`` determine which irreducibles
``L(lam)`` occur in ``E(mu)``; each occurs with multiplicity
``2^((l(mu) - l(lam)) / 2)``.  Inverting this unitriangular system gives
``ch L(nu)``, whose Schur expansion is the gl(n)-branching.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .characters import SchurExpansion, clifford_dim, euler_char, schur_expand, schur_p
from .errors import (
    NegativeCoefficient,
    NonDistinct,
    NonDominant,
    OddLengthGap,
    TheoremViolation,
)
from .laurent import LaurentPoly
from .weights import (
    Weight,
    dominance_leq,
    ell,
    enumerate_dominant,
    has_distinct_coords,
    is_dominant_integral,
    sort_to_dominant,
)

log = logging.getLogger(__name__)

Theta = tuple[int, ...]


@dataclass(frozen=True)
class PairingData:
    """Maximal nested pairing of a dominant integral weight.

    ``pairs[s] = (i_s, j_s)`` are 0-based positions with
    ``i_1 < ... < i_p < j_p < ... < j_1`` and ``weight[i_s] + weight[j_s] == 0``.
    ``kvals[s]`` is the value the pair is raised to by ``R_theta``;
    ``kprimes[s]`` is the companion integer reserved by a zero pair (None for
    pairs of non-zero values).  ``isets[s]`` is the set of used absolute values
    before step ``s``; ``isets[-1]`` is the final set.
    """

    weight: Weight
    pairs: tuple[tuple[int, int], ...]
    kvals: tuple[int, ...]
    kprimes: tuple[int | None, ...]
    isets: tuple[frozenset[int], ...]

    @property
    def p(self) -> int:
        return len(self.pairs)


def _check_dominant(weight: Sequence[int]) -> Weight:
    weight = tuple(weight)
    if not is_dominant_integral(weight):
        raise NonDominant(f"{weight} is not dominant integral")
    return weight


def _smallest_free(above: int, used: set[int], count: int) -> list[int]:
    out = []
    k = above + 1
    while len(out) < count:
        if k not in used:
            out.append(k)
        k += 1
    return out


def _default_zero_pairs(zeros: list[int]) -> list[tuple[int, int]]:
    # outermost first: smallest free index with largest free index
    return [(zeros[t], zeros[-1 - t]) for t in range(len(zeros) // 2)]


def pairing(
    weight: Sequence[int], zero_pairs: Sequence[tuple[int, int]] | None = None
) -> PairingData:
    """Compute the pairing data of a dominant integral weight.

    ``zero_pairs`` optionally overrides which zero coordinates are paired; it
    must consist of ``floor(z/2)`` nested pairs of zero positions.
    """
    lam = _check_dominant(weight)
    n = len(lam)
    pos = {a: i for i, a in enumerate(lam) if a != 0}
    pairs = [(pos[a], pos[-a]) for a in sorted(pos, reverse=True) if a > 0 and -a in pos]

    zeros = [i for i, a in enumerate(lam) if a == 0]
    if zero_pairs is None:
        zp = _default_zero_pairs(zeros)
    else:
        zp = sorted((min(i, j), max(i, j)) for i, j in zero_pairs)
        flat = [i for pr in zp for i in pr]
        if (
            len(zp) != len(zeros) // 2
            or len(set(flat)) != len(flat)
            or any(lam[i] != 0 for i in flat)
            or any(b[0] <= a[0] or b[1] >= a[1] for a, b in zip(zp, zp[1:]))
        ):
            raise ValueError(f"{zero_pairs} is not a maximal nested pairing of zeros")
    pairs.extend(zp)

    used = {abs(a) for a in lam}
    kvals, kprimes, isets = [], [], [frozenset(used)]
    zeros_even = (n - ell(lam)) % 2 == 0
    for i, _ in pairs:
        a = lam[i]
        if a > 0:
            (k,) = _smallest_free(a, used, 1)
            kvals.append(k)
            kprimes.append(None)
            used.add(k)
        else:
            lo, hi = _smallest_free(0, used, 2)
            k, kp = (lo, hi) if zeros_even else (hi, lo)
            kvals.append(k)
            kprimes.append(kp)
            used.update((k, kp))
        isets.append(frozenset(used))
    return PairingData(lam, tuple(pairs), tuple(kvals), tuple(kprimes), tuple(isets))


def r_theta(weight: Sequence[int], theta: Sequence[int], data: PairingData | None = None) -> Weight:
    """Apply the raising operator ``R_theta``.

    For each ``s`` with ``theta[s] == 1`` the pair ``(a, -a)`` at positions
    ``(i_s, j_s)`` becomes ``(k_s, -k_s)``; the result is re-sorted.
    """
    lam = _check_dominant(weight)
    if data is None:
        data = pairing(lam)
    if len(theta) != data.p:
        raise ValueError(f"theta has length {len(theta)}, expected {data.p}")
    v = list(lam)
    for t, (i, j), k in zip(theta, data.pairs, data.kvals):
        if t:
            v[i] = k
            v[j] = -k
    return sort_to_dominant(v)


def thetas(p: int) -> Iterable[Theta]:
    return product((0, 1), repeat=p)


@lru_cache(maxsize=None)
def raised_weights(weight: Weight) -> dict[Weight, tuple[Theta, ...]]:
    """All ``R_theta(weight)`` with the thetas producing each."""
    data = pairing(weight)
    out: dict[Weight, list[Theta]] = {}
    for th in thetas(data.p):
        out.setdefault(r_theta(weight, th, data), []).append(th)
    return {k: tuple(v) for k, v in out.items()}


def _order_key(w: Weight) -> tuple:
    # decreasing prefix-sum total refines the dominance order
    total, acc = 0, 0
    for x in w:
        acc += x
        total += acc
    return (-total, tuple(-x for x in w))


def candidate_weights(nu: Sequence[int]) -> list[Weight]:
    """Dominant weights that could precede ``nu``: same sum, no larger entries."""
    nu = tuple(nu)
    bound = max(abs(x) for x in nu)
    return enumerate_dominant(len(nu), sum(nu), bound)


def euler_predecessors(
    mu: Sequence[int], candidates: Iterable[Sequence[int]] | None = None
) -> dict[Weight, tuple[Theta, ...]]:
    """Candidates ``lam`` with ``R_theta(lam) == mu`` for some theta, with all such thetas."""
    mu = _check_dominant(mu)
    if candidates is None:
        candidates = candidate_weights(mu)
    out = {}
    for lam in candidates:
        lam = _check_dominant(lam)
        hits = raised_weights(lam).get(mu)
        if hits:
            out[lam] = hits
    return out


def decomposition_number(mu: Sequence[int], lam: Sequence[int]) -> int:
    gap = ell(mu) - ell(lam)
    if gap % 2 or gap < 0:
        raise OddLengthGap(f"l({tuple(mu)}) - l({tuple(lam)}) = {gap}")
    return 2 ** (gap // 2)


def decompose_euler(
    mu: Sequence[int], candidates: Iterable[Sequence[int]] | None = None
) -> list[tuple[Weight, int]]:
    """Pairs ``(lam, d_{mu,lam})`` with ``[E(mu)] = sum d [L(lam)]``."""
    mu = _check_dominant(mu)
    preds = euler_predecessors(mu, candidates)
    out = []
    for lam, ths in sorted(preds.items(), key=lambda kv: _order_key(kv[0])):
        if len(ths) > 1:
            log.debug("%s reaches %s via %d thetas", lam, mu, len(ths))
        out.append((lam, decomposition_number(mu, lam)))
    return out


def block_closure(nu: Sequence[int]) -> list[Weight]:
    """``nu`` together with everything linked below it by chains of ``R_theta``.

    Ordered by a linear extension of dominance, highest first.
    """
    nu = _check_dominant(nu)
    candidates = candidate_weights(nu)
    seen = {nu}
    stack = [nu]
    while stack:
        mu = stack.pop()
        for lam in euler_predecessors(mu, candidates):
            if lam not in seen:
                seen.add(lam)
                stack.append(lam)
    return sorted(seen, key=_order_key)


@dataclass
class DecompTable:
    """Decomposition numbers ``d[mu, lam]`` on a block, highest weight first."""

    anchor: Weight
    block: list[Weight]
    dmat: dict[tuple[Weight, Weight], int] = field(default_factory=dict)

    def d(self, mu: Weight, lam: Weight) -> int:
        return self.dmat.get((mu, lam), 0)

    def inverse(self) -> dict[tuple[Weight, Weight], int]:
        """Inverse matrix: ``[L(mu)] = sum_lam inv[mu, lam] [E(lam)]``."""
        # block is sorted highest first, so lower weights come later
        idx = {w: t for t, w in enumerate(self.block)}
        inv: dict[tuple[Weight, Weight], int] = {}
        for mu in reversed(self.block):
            inv[(mu, mu)] = 1
            for lam in self.block[idx[mu] + 1:]:
                # row mu of D^{-1}: e_mu - sum_{nu < mu} d[mu,nu] * row nu
                acc = 0
                for nu in self.block[idx[mu] + 1:]:
                    dv = self.d(mu, nu)
                    if dv:
                        acc -= dv * inv.get((nu, lam), 0)
                if acc:
                    inv[(mu, lam)] = acc
        return inv


def decomp_table(nu: Sequence[int]) -> DecompTable:
    block = block_closure(nu)
    table = DecompTable(anchor=tuple(nu), block=block)
    for mu in block:
        for lam, d in decompose_euler(mu, block):
            table.dmat[(mu, lam)] = d
    return table


@lru_cache(maxsize=None)
def _irreducible_character(nu: Weight) -> LaurentPoly:
    ch = euler_char(nu)
    for lam, d in decompose_euler(nu):
        if lam != nu:
            ch = ch - _irreducible_character(lam).scale(d)
    if any(c < 0 for _, c in ch.items()):
        raise NegativeCoefficient(f"ch L{nu} has a negative weight multiplicity")
    return ch


def irreducible_character(nu: Sequence[int]) -> LaurentPoly:
    """Character of the finite-dimensional irreducible q(n)-module ``L(nu)``."""
    return _irreducible_character(_check_dominant(nu))


@lru_cache(maxsize=None)
def _branching(nu: Weight) -> tuple[tuple[Weight, int], ...]:
    exp = schur_expand(_irreducible_character(nu))
    if any(c < 0 for c in exp.values()):
        raise NegativeCoefficient(f"L{nu} restricts with a negative gl(n)-multiplicity")
    return tuple(exp.items())


def branching(nu: Sequence[int]) -> SchurExpansion:
    """Multiplicities of gl(n)-irreducibles ``L0(mu)`` (both parities) in ``L(nu)``."""
    return dict(_branching(_check_dominant(nu)))


def trivial_multiplicity(nu: Sequence[int]) -> int:
    nu = _check_dominant(nu)
    return branching(nu).get((0,) * len(nu), 0)


def supercharacter_verdict(nu: Sequence[int]) -> int:
    """``sch L(nu)`` for dominant integral ``nu``.

    For ``nu != 0`` the supercharacter is the difference of the even and odd
    trivial gl(n)-multiplicities, so it vanishes once the total is zero; a
    non-zero total is reported as a TheoremViolation.
    """
    nu = _check_dominant(nu)
    if not any(nu):
        return 1
    m = trivial_multiplicity(nu)
    if m != 0:
        raise TheoremViolation(nu, m)
    return 0


def g0_coefficient_distinct(lam: Sequence[int]) -> int:
    """Coefficient of ``s_0`` in the Schur expansion of ``P_lam`` (distinct entries)."""
    lam = _check_dominant(lam)
    if not has_distinct_coords(lam):
        raise NonDistinct(f"{lam} has repeated coordinates")
    return schur_expand(schur_p(lam)).get((0,) * len(lam), 0)


def highest_weight_coefficient(nu: Sequence[int]) -> int:
    nu = _check_dominant(nu)
    return irreducible_character(nu).coefficient(nu)


def expected_highest_weight_coefficient(nu: Sequence[int]) -> int:
    return clifford_dim(nu)


def is_unitriangular(table: DecompTable) -> bool:
    for mu in table.block:
        if table.d(mu, mu) != 1:
            return False
    return all(dominance_leq(lam, mu) for (mu, lam), d in table.dmat.items() if d)
