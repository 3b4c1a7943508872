from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hurwitzcf.cf_engine import convergents
from hurwitzcf.hurwitz import CFParams, denom_stream
from hurwitzcf.identities import (BivarPoly, eval_unipoly,
                                  gcf_convergent_check, p_poly, q_poly,
                                  r_poly, r_poly_binom_form, s_poly,
                                  s_poly_binom_form, verify_rsum, verify_ssum)

F = Fraction
X = BivarPoly.x()
Y = BivarPoly.y()


class TestBivarPoly:
    def test_zero_coefficients_dropped(self):
        p = BivarPoly({(1, 0): F(1), (0, 1): F(0)})
        assert p.coeffs == {(1, 0): F(1)}

    def test_ring_operations(self):
        p = (X + Y) * (X - Y)
        assert p == X * X - Y * Y

    def test_scalar_mixing(self):
        assert 2 * X + 1 == X + X + BivarPoly.const(1)


class TestRS:
    def test_base_cases(self):
        assert r_poly(0) == BivarPoly.const(1)
        assert s_poly(0) == BivarPoly()

    def test_n1(self):
        assert r_poly(1) == Y + 1 + X
        assert s_poly(1) == X

    def test_binom_form_equivalence(self):
        for n in range(13):
            assert r_poly_binom_form(n) == r_poly(n), n
            assert s_poly_binom_form(n) == s_poly(n), n


class TestSummationLemmas:
    def test_rsum_n1_by_hand(self):
        # sum is -x R_0 + R_1 = y + 1; RHS single term k=0
        assert verify_rsum(1)

    def test_ssum_trivial(self):
        assert verify_ssum(0)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_rsum(self, n):
        assert verify_rsum(n)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_ssum(self, n):
        assert verify_ssum(n)


class TestPQ:
    def test_base_cases(self):
        assert q_poly(0) == [F(1)]
        assert p_poly(1) == [F(0), F(1)]

    def test_q2_from_definition(self):
        # k=0: 2! C(2,2) = 2; k=1: (1!/1!) C(1,0) = 1
        assert q_poly(2) == [F(2), F(1)]

    def test_integer_coefficients(self):
        for n in range(15):
            for c in p_poly(n) + q_poly(n):
                assert c.denominator == 1

    def test_gcf_examples(self):
        assert gcf_convergent_check(1, F(1, 4))
        assert gcf_convergent_check(3, F(1, 16))
        assert gcf_convergent_check(10, F(1))

    @settings(max_examples=40)
    @given(st.integers(1, 25), st.fractions(max_denominator=40))
    def test_gcf_random(self, n, x):
        if x == 0:
            x = F(1, 2)
        assert gcf_convergent_check(n, abs(x))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_every_third_convergent_connection(m):
    # for (1, m-1, m, 3, 2): p_{3n+1} = 2 (2m)^n Q_n(1/(4m^2)) and
    # q_{3n+1} = (2m)^n (2m P_n + Q_n), exactly
    params = CFParams(1, m - 1, m, 3, 2)
    x = F(1, 4 * m * m)
    convs = convergents(denom_stream(params), 31)
    for n in range(11):
        qv = eval_unipoly(q_poly(n), x)
        pv = eval_unipoly(p_poly(n), x)
        ref = convs[3 * n + 2]  # index 3n+1
        assert ref.n == 3 * n + 1
        assert F(ref.p) == 2 * (2 * m) ** n * qv
        assert F(ref.q) == (2 * m) ** n * (2 * m * pv + qv)
