import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import evaluate, schur_p_at, ssyt_schur, two_term_schur_p
from queerchar.characters import (
    euler_char,
    sch_verma,
    schur,
    schur_expand,
    schur_p,
    verma_trivial_multiplicity,
    weyl_denominator_product,
)
from queerchar.errors import NonDominant, NotSymmetric
from queerchar.laurent import LaurentPoly, is_symmetric, monomial
from queerchar.weights import (
    enumerate_dominant_box,
    has_distinct_coords,
    rho_prime,
)

X1, X2 = LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)


def weakly_decreasing(n, bound):
    return st.lists(st.integers(-bound, bound), min_size=n, max_size=n).map(
        lambda v: tuple(sorted(v, reverse=True))
    )


class TestSchur:
    def test_trivial(self):
        assert schur((0, 0, 0)) == LaurentPoly.one(3)

    def test_natural(self):
        assert schur((1, 0)) == X1 + X2

    def test_adjoint_like(self):
        assert schur((1, -1)) == monomial(2, (1, -1)) + 1 + monomial(2, (-1, 1))

    def test_rejects_increasing(self):
        with pytest.raises(NonDominant):
            schur((0, 1))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_tableaux(self, n):
        for total in range(-3 * n, 3 * n + 1):
            seen = set()
            for mu in _weakly_decreasing_box(n, 3):
                if sum(mu) == total and mu not in seen:
                    seen.add(mu)
                    assert schur(mu) == ssyt_schur(mu), mu

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda n: weakly_decreasing(n, 3)))
    def test_roundtrip_and_symmetry(self, mu):
        s = schur(mu)
        assert is_symmetric(s)
        assert schur_expand(s) == {mu: 1}


def _weakly_decreasing_box(n, bound):
    if n == 0:
        yield ()
        return
    for first in range(bound, -bound - 1, -1):
        for rest in _weakly_decreasing_box(n - 1, first):
            if all(x >= -bound for x in rest):
                yield (first,) + rest


class TestSchurExpand:
    def test_constant(self):
        assert schur_expand(LaurentPoly.one(3)) == {(0, 0, 0): 1}

    def test_linear(self):
        assert schur_expand(X1 + X2) == {(1, 0): 1}

    def test_square(self):
        assert schur_expand((X1 + X2) ** 2) == {(2, 0): 1, (1, 1): 1}

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            schur_expand(X1 - X2)

    def test_zero(self):
        assert schur_expand(LaurentPoly.zero(2)) == {}


class TestSchurP:
    def test_trivial(self):
        assert schur_p((0, 0, 0)) == LaurentPoly.one(3)

    def test_natural(self):
        assert schur_p((1, 0)) == X1 + X2

    def test_balanced(self):
        assert schur_p((1, -1)) == monomial(2, (1, -1)) + 2 + monomial(2, (-1, 1))

    def test_rejects_non_dominant(self):
        with pytest.raises(NonDominant):
            schur_p((1, 1))

    @pytest.mark.parametrize("a,b", [(a, b) for a in range(-4, 5) for b in range(-4, 5) if a > b])
    def test_two_term_formula(self, a, b):
        assert schur_p((a, b)) == two_term_schur_p(a, b)

    @pytest.mark.parametrize(
        "lam", enumerate_dominant_box(3, 3, 6)[::3] + enumerate_dominant_box(4, 2, 4)[::4]
    )
    def test_matches_coset_sum_evaluation(self, lam):
        p = schur_p(lam)
        for point in [(2, 3, 5, 7)[: len(lam)], (-3, 4, 11, -5)[: len(lam)]]:
            assert evaluate(p, point) == schur_p_at(lam, point)

    @pytest.mark.parametrize("lam", enumerate_dominant_box(3, 3, 6) + enumerate_dominant_box(4, 2, 5))
    def test_symmetric_with_unit_leading_coefficient(self, lam):
        p = schur_p(lam)
        assert is_symmetric(p)
        assert p.coefficient(lam) == 1
        assert p.leading_term() == (lam, 1)

    @pytest.mark.parametrize("lam", [w for w in enumerate_dominant_box(3, 4, 8) if has_distinct_coords(w)])
    def test_distinct_parts_factorization(self, lam):
        shift = tuple(a - b for a, b in zip(lam, rho_prime(3)))
        assert schur_p(lam) == weyl_denominator_product(3) * schur(shift)

    @pytest.mark.parametrize("lam", enumerate_dominant_box(3, 3, 6) + enumerate_dominant_box(4, 3, 6))
    def test_expansion_nonnegative(self, lam):
        exp = schur_expand(schur_p(lam))
        assert all(c > 0 for c in exp.values())
        if has_distinct_coords(lam) and min(lam) >= 0:
            assert all(min(mu) >= 0 for mu in exp)


class TestEuler:
    def test_trivial(self):
        assert euler_char((0, 0)) == LaurentPoly.one(2)

    def test_balanced(self):
        assert euler_char((1, -1)) == monomial(2, (1, -1), 2) + 4 + monomial(2, (-1, 1), 2)

    def test_two_rho(self):
        assert euler_char((2, 0, -2)) == schur_p((2, 0, -2)).scale(2)

    def test_odd_length(self):
        assert euler_char((2, 1, -3)) == schur_p((2, 1, -3)).scale(4)


class TestWeylDenominator:
    def test_small(self):
        assert weyl_denominator_product(2) == X1 + X2
        assert weyl_denominator_product(1) == LaurentPoly.one(1)

    def test_rank_three(self):
        p = weyl_denominator_product(3)
        assert len(p) == 7
        assert p.coefficient((1, 1, 1)) == 2
        assert p.coefficient((2, 1, 0)) == 1
        assert p == schur((2, 1, 0))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_equals_schur_of_rho_prime(self, n):
        assert weyl_denominator_product(n) == schur(rho_prime(n))


class TestVerma:
    def test_three_dim_example(self):
        assert verma_trivial_multiplicity((2, -1, -1)) == 4

    def test_zero(self):
        assert verma_trivial_multiplicity((0, 0, 0)) == 1

    def test_unreachable(self):
        assert verma_trivial_multiplicity((1, 1)) == 0

    def test_sch(self):
        assert sch_verma((0, 0)) == 1
        assert sch_verma((2, -1, -1)) == 0
        assert sch_verma((1, 0)) == 0

    def test_dominant_weights_in_root_cone(self):
        # (1,0,-1) is reached by {d1-d3} and {d1-d2, d2-d3}
        assert verma_trivial_multiplicity((1, 0, -1)) == 4
        assert verma_trivial_multiplicity((2, 0, -2)) == 2
