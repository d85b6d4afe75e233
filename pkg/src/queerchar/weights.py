"""Integral weights of q(n) in the basis delta_1, ..., delta_n.

Weights are plain tuples of ints.  Positions are 0-based in code; the root
``delta_i - delta_j`` is represented by the pair ``(i, j)`` with ``i < j``.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence

Weight = tuple[int, ...]


def as_weight(v: Sequence[int]) -> Weight:
    w = tuple(int(x) for x in v)
    if not w:
        raise ValueError("a weight needs at least one coordinate")
    return w


def ell(weight: Sequence[int]) -> int:
    """Number of non-zero coordinates."""
    return sum(1 for x in weight if x != 0)


def is_dominant_integral(weight: Sequence[int]) -> bool:
    """Weakly decreasing, and equal neighbours only at the value 0."""
    for a, b in zip(weight, weight[1:]):
        if a < b or (a == b and a != 0):
            return False
    return True


def is_weakly_decreasing(weight: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(weight, weight[1:]))


def has_distinct_coords(weight: Sequence[int]) -> bool:
    return len(set(weight)) == len(weight)


def two_rho(n: int) -> Weight:
    return tuple(n - 2 * i + 1 for i in range(1, n + 1))


def rho_prime(n: int) -> Weight:
    """The integral shift (n-1, n-2, ..., 0) of rho."""
    return tuple(range(n - 1, -1, -1))


def positive_roots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def root_vector(n: int, root: tuple[int, int]) -> Weight:
    i, j = root
    v = [0] * n
    v[i] += 1
    v[j] -= 1
    return tuple(v)


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu - lam`` is a non-negative combination of positive roots."""
    if len(lam) != len(mu):
        raise ValueError("weights of different rank")
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a > b:
            return False
    return a == b


def sort_to_dominant(v: Sequence[int]) -> Weight:
    return tuple(sorted(v, reverse=True))


def count_root_subsets(weight: Sequence[int]) -> int:
    """Number of subsets of the positive roots whose sum is ``weight``."""
    n = len(weight)
    counts: Counter[Weight] = Counter({(0,) * n: 1})
    for i, j in positive_roots(n):
        step: Counter[Weight] = Counter()
        for v, c in counts.items():
            step[v] += c
            w = list(v)
            w[i] += 1
            w[j] -= 1
            step[tuple(w)] += c
        counts = step
    return counts.get(tuple(weight), 0)


def enumerate_dominant(n: int, total: int, bound: int) -> list[Weight]:
    """Dominant integral weights with coordinate sum ``total`` and entries in
    ``[-bound, bound]``, in descending lexicographic order."""
    out: list[Weight] = []

    def rec(prefix: list[int], remaining: int, hi: int) -> None:
        k = len(prefix)
        if k == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        slots = n - k
        for x in range(hi, -bound - 1, -1):
            # the remaining slots can hold at most x each and at least -bound
            if x * slots < remaining or -bound * (slots - 1) + x > remaining:
                continue
            prefix.append(x)
            # only zero may repeat
            rec(prefix, remaining - x, x if x == 0 else x - 1)
            prefix.pop()

    rec([], total, bound)
    return out


def enumerate_dominant_box(n: int, bound: int, sumbound: int) -> list[Weight]:
    """All dominant integral weights with ``max|x_i| <= bound`` and
    ``sum|x_i| <= sumbound``, grouped by coordinate sum (descending)."""
    out = []
    for total in range(min(sumbound, n * bound), -min(sumbound, n * bound) - 1, -1):
        for w in enumerate_dominant(n, total, bound):
            if sum(abs(x) for x in w) <= sumbound:
                out.append(w)
    return out
