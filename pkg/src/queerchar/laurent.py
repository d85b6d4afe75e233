"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial in ``x_1, ..., x_n`` is stored as a dict mapping exponent
tuples (possibly with negative entries) to non-zero Python ints.  Values are
treated as immutable once built; every operation returns a new object.
"""
from __future__ import annotations

import heapq
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import NonExactDivision, RankMismatch

Exps = tuple[int, ...]


class LaurentPoly:
    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Exps, int] | None = None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        self.rank = rank
        clean: dict[Exps, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != rank:
                raise RankMismatch(f"exponent {e} has length {len(e)}, expected {rank}")
            if c:
                clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict[Exps, int]) -> "LaurentPoly":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls._raw(rank, {(0,) * rank: 1})

    @classmethod
    def variable(cls, rank: int, i: int) -> "LaurentPoly":
        """The variable ``x_{i+1}`` (0-based index ``i``)."""
        e = [0] * rank
        e[i] = 1
        return cls._raw(rank, {tuple(e): 1})

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(self.rank, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "LaurentPoly") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return constant(self.rank, other)
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.rank, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.one(self.rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "LaurentPoly":
        if not c:
            return LaurentPoly.zero(self.rank)
        return LaurentPoly._raw(self.rank, {e: v * c for e, v in self._terms.items()})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``x^exps``."""
        if len(exps) != self.rank:
            raise RankMismatch(f"shift of length {len(exps)} on rank {self.rank}")
        return LaurentPoly._raw(
            self.rank,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
        )

    def coefficient(self, exps: Sequence[int]) -> int:
        if len(exps) != self.rank:
            raise RankMismatch(f"exponent of length {len(exps)} on rank {self.rank}")
        return self._terms.get(tuple(exps), 0)

    def leading_term(self) -> tuple[Exps, int]:
        """Lexicographically greatest exponent and its coefficient."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def min_exponents(self) -> Exps:
        """Componentwise minimum over the support."""
        if not self._terms:
            return (0,) * self.rank
        return tuple(min(col) for col in zip(*self._terms))

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        return sorted(self._terms.items(), reverse=True)

    def exact_div_int(self, d: int) -> "LaurentPoly":
        """Divide every coefficient by ``d``; raise if any is not a multiple."""
        if d == 0:
            raise ZeroDivisionError("division by zero")
        out = {}
        for e, c in self._terms.items():
            q, r = divmod(c, d)
            if r:
                raise NonExactDivision(f"coefficient {c} at {e} not divisible by {d}")
            out[e] = q
        return LaurentPoly._raw(self.rank, out)

    def apply_permutation(self, w: Sequence[int]) -> "LaurentPoly":
        return apply_permutation(self, w)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.rank}, {self.sorted_terms()!r})"

    def __str__(self) -> str:
        return format_poly(self)


def monomial(rank: int, exps: Sequence[int], coeff: int = 1) -> LaurentPoly:
    exps = tuple(exps)
    if len(exps) != rank:
        raise RankMismatch(f"exponent {exps} does not have length {rank}")
    if not coeff:
        return LaurentPoly.zero(rank)
    return LaurentPoly._raw(rank, {exps: coeff})


def constant(rank: int, c: int) -> LaurentPoly:
    return monomial(rank, (0,) * rank, c)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check(b)
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a._check(b)
    return a * b


def scale(a: LaurentPoly, c: int) -> LaurentPoly:
    return a.scale(c)


def coefficient(a: LaurentPoly, e: Sequence[int]) -> int:
    return a.coefficient(e)


def product(factors: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    result = LaurentPoly.one(rank)
    for f in factors:
        result = result * f
    return result


def _check_perm(w: Sequence[int], n: int) -> tuple[int, ...]:
    w = tuple(w)
    if sorted(w) != list(range(n)):
        raise RankMismatch(f"{w} is not a permutation of range({n})")
    return w


def permute_exponent(e: Sequence[int], w: Sequence[int]) -> Exps:
    """Exponent of ``w(x^e)``: the entry at ``i`` moves to position ``w[i]``."""
    out = [0] * len(e)
    for i, a in enumerate(e):
        out[w[i]] = a
    return tuple(out)


def apply_permutation(a: LaurentPoly, w: Sequence[int]) -> LaurentPoly:
    """Substitute ``x_i -> x_{w(i)}``.

    ``w`` is given 0-based in one-line notation: ``w[i]`` is the image of ``i``.
    """
    w = _check_perm(w, a.rank)
    return LaurentPoly._raw(a.rank, {permute_exponent(e, w): c for e, c in a.items()})


def inverse_permutation(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, j in enumerate(w):
        inv[j] = i
    return tuple(inv)


def permutation_sign(w: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(w)
    for i in range(len(w)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = w[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def signed_permutations(n: int) -> list[tuple[tuple[int, ...], int]]:
    return [(w, permutation_sign(w)) for w in permutations(range(n))]


def antisymmetrize(a: LaurentPoly) -> LaurentPoly:
    """Sum of ``sgn(w) w(a)`` over the symmetric group."""
    out: dict[Exps, int] = {}
    for w, sgn in signed_permutations(a.rank):
        for e, c in a.items():
            k = permute_exponent(e, w)
            out[k] = out.get(k, 0) + sgn * c
    return LaurentPoly._raw(a.rank, {e: c for e, c in out.items() if c})


def is_symmetric(a: LaurentPoly) -> bool:
    n = a.rank
    for i in range(n - 1):
        s = list(range(n))
        s[i], s[i + 1] = s[i + 1], s[i]
        if apply_permutation(a, s) != a:
            return False
    return True


def _divides(d: Exps, e: Exps) -> bool:
    return all(x <= y for x, y in zip(d, e))


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * den == num`` or raise NonExactDivision.

    Both operands are first moved into polynomial range by monomial shifts,
    then reduced by leading terms in lexicographic order.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = num.rank
    if num.is_zero():
        return LaurentPoly.zero(n)
    nmin = num.min_exponents()
    dmin = den.min_exponents()
    rem = {tuple(a - b for a, b in zip(e, nmin)): c for e, c in num.items()}
    dterms = [(tuple(a - b for a, b in zip(e, dmin)), c) for e, c in den.items()]
    dterms.sort(reverse=True)
    lead_e, lead_c = dterms[0]
    tail = dterms[1:]

    # max-heap of exponents via negation; stale entries skipped lazily
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot: dict[Exps, int] = {}
    while rem:
        e = tuple(-x for x in heapq.heappop(heap))
        c = rem.get(e)
        if c is None:
            continue
        if not _divides(lead_e, e):
            raise NonExactDivision(f"leading exponent {e} not divisible by {lead_e}")
        qc, r = divmod(c, lead_c)
        if r:
            raise NonExactDivision(f"coefficient {c} not divisible by {lead_c}")
        qe = tuple(a - b for a, b in zip(e, lead_e))
        quot[qe] = qc
        del rem[e]
        for te, tc in tail:
            k = tuple(a + b for a, b in zip(qe, te))
            v = rem.get(k, 0) - qc * tc
            if v:
                if k not in rem:
                    heapq.heappush(heap, tuple(-x for x in k))
                rem[k] = v
            else:
                rem.pop(k, None)
    offset = tuple(a - b for a, b in zip(nmin, dmin))
    return LaurentPoly._raw(
        n, {tuple(a + b for a, b in zip(e, offset)): c for e, c in quot.items()}
    )


def vandermonde(n: int) -> LaurentPoly:
    """``prod_{i<j} (x_i - x_j)``."""
    return product(
        (
            LaurentPoly.variable(n, i) - LaurentPoly.variable(n, j)
            for i in range(n)
            for j in range(i + 1, n)
        ),
        n,
    )


def _format_monomial(e: Exps) -> str:
    parts = []
    for i, a in enumerate(e, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def format_poly(a: LaurentPoly) -> str:
    """Human-readable form, terms in descending lexicographic order."""
    if a.is_zero():
        return "0"
    out = []
    for e, c in a.sorted_terms():
        mono = _format_monomial(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)
