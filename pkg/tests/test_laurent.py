import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from queerchar.errors import NonExactDivision, RankMismatch
from queerchar.laurent import (
    LaurentPoly,
    add,
    apply_permutation,
    coefficient,
    exact_divide,
    format_poly,
    inverse_permutation,
    is_symmetric,
    monomial,
    mul,
    scale,
)


def x(n, i):
    return LaurentPoly.variable(n, i)


X1, X2 = x(2, 0), x(2, 1)


def polys(rank):
    exps = st.tuples(*[st.integers(-2, 2)] * rank)
    return st.dictionaries(exps, st.integers(-4, 4), max_size=4).map(
        lambda d: LaurentPoly(rank, d)
    )


ranked_triples = st.integers(1, 3).flatmap(lambda n: st.tuples(polys(n), polys(n), polys(n)))


def perms(n):
    return st.permutations(list(range(n)))


class TestConstruction:
    def test_identity_monomial(self):
        assert monomial(2, (0, 0), 1) == LaurentPoly.one(2)

    def test_direct(self):
        p = monomial(2, (1, -1), 3)
        assert p.terms == {(1, -1): 3}

    def test_zero_coeff_is_canonical_zero(self):
        p = monomial(2, (0, 0), 0)
        assert p.is_zero() and p.terms == {}

    def test_length_mismatch(self):
        with pytest.raises(RankMismatch):
            monomial(2, (1, 0, 0))

    def test_constructor_drops_zeros(self):
        assert LaurentPoly(2, {(1, 0): 0, (0, 1): 2}).terms == {(0, 1): 2}


class TestArithmetic:
    def test_add(self):
        assert add(X1, X2).terms == {(1, 0): 1, (0, 1): 1}

    def test_difference_of_squares(self):
        assert mul(X1 + X2, X1 - X2) == X1 * X1 - X2 * X2

    def test_scale_by_zero(self):
        assert scale(X1 + X2, 0).terms == {}

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            add(X1, x(3, 0))

    @given(ranked_triples)
    def test_ring_axioms(self, abc):
        a, b, c = abc
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(ranked_triples)
    def test_canonical_form(self, abc):
        a, b, c = abc
        for p in (a + b, a - a, a * b, a.scale(0), (a + b) * c - c * b):
            assert all(v != 0 for _, v in p.items())


class TestPermutation:
    def test_swap(self):
        f = monomial(2, (2, -1))
        assert apply_permutation(f, (1, 0)) == monomial(2, (-1, 2))

    def test_symmetric_fixed(self):
        assert apply_permutation(X1 + X2, (1, 0)) == X1 + X2

    def test_bad_permutation(self):
        with pytest.raises(RankMismatch):
            apply_permutation(X1, (0, 0))

    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(polys(n), polys(n), perms(n))))
    def test_action(self, data):
        f, g, w = data
        assert apply_permutation(apply_permutation(f, w), inverse_permutation(w)) == f
        assert apply_permutation(f * g, w) == apply_permutation(f, w) * apply_permutation(g, w)

    def test_variable_maps_to_image(self):
        # x_1 -> x_{w(1)}
        assert apply_permutation(x(3, 0), (2, 0, 1)) == x(3, 2)


class TestDivision:
    def test_simple(self):
        assert exact_divide(X1 * X1 - X2 * X2, X1 - X2) == X1 + X2

    def test_laurent(self):
        num = (X1 ** 3 - X2 ** 3).shift((-1, -1))
        expected = monomial(2, (1, -1)) + 1 + monomial(2, (-1, 1))
        assert exact_divide(num, X1 - X2) == expected

    def test_not_divisible(self):
        with pytest.raises(NonExactDivision):
            exact_divide(X1 + X2, X1 - X2)

    def test_zero_numerator(self):
        assert exact_divide(LaurentPoly.zero(2), X1 - X2).is_zero()

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(X1, LaurentPoly.zero(2))

    @settings(max_examples=150)
    @given(st.integers(1, 3).flatmap(lambda n: st.tuples(polys(n), polys(n))))
    def test_roundtrip(self, ab):
        a, b = ab
        if b.is_zero():
            return
        assert exact_divide(a * b, b) == a

    def test_exact_int_division(self):
        assert (X1 * 4 + 6).exact_div_int(2) == X1 * 2 + 3
        with pytest.raises(NonExactDivision):
            (X1 * 3).exact_div_int(2)


class TestQueries:
    def test_coefficient(self):
        f = X1 + 2 * X2
        assert coefficient(f, (0, 1)) == 2
        assert coefficient(f, (5, 5)) == 0

    def test_coefficient_of_rho_prime_character(self):
        # prod_{i<j}(x_i + x_j) at n=2
        assert coefficient(X1 + X2, (1, 0)) == 1

    def test_symmetry(self):
        assert is_symmetric(X1 + X2)
        assert not is_symmetric(X1 - X2)

    def test_format(self):
        assert format_poly(X1 + X2) == "x1 + x2"
        assert format_poly(LaurentPoly.zero(2)) == "0"
        assert format_poly(monomial(2, (1, -1), -2) + 3) == "-2*x1*x2^-1 + 3"
