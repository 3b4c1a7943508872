from fractions import Fraction

import pytest

from hurwitzcf import fibpoly
from hurwitzcf.fibpoly import (fib_eval, fib_generating_check, fib_poly,
                               fib_via_even_sets, lucas_eval, lucas_poly)
from hurwitzcf.limits import sqrt_prec


def test_fib_seed_values():
    assert fib_poly(0) == ()
    assert fib_poly(1) == (1,)
    assert fib_poly(3) == (1, 0, 1)        # q^2 + 1
    assert fib_poly(4) == (0, 2, 0, 1)     # q^3 + 2q


def test_lucas_seed_values():
    assert lucas_poly(0) == (2,)
    assert lucas_poly(1) == (0, 1)
    assert lucas_poly(3) == (0, 3, 0, 1)        # q^3 + 3q
    assert lucas_poly(4) == (2, 0, 4, 0, 1)     # q^4 + 4q^2 + 2


def test_common_recurrence_coefficientwise():
    for fam in (fib_poly, lucas_poly):
        for n in range(2, 51):
            got = list(fam(n))
            want = fibpoly.poly_add(
                fibpoly._shift_q(list(fam(n - 1))), list(fam(n - 2)))
            assert got == want, (fam.__name__, n)


def test_negative_index_extension():
    # F_{-n} = (-1)^(n+1) F_n, so F_{-1} = 1
    assert fib_poly(-1) == (1,)
    for n in range(1, 12):
        expect = fib_poly(n) if n % 2 == 1 else tuple(-c for c in fib_poly(n))
        assert fib_poly(-n) == expect
        assert fib_eval(-n, 3) == (1 if n % 2 == 1 else -1) * fib_eval(n, 3)


def test_scalar_evaluation_matches_polynomials():
    for n in range(0, 25):
        for a in (1, 2, 5):
            assert fib_eval(n, a) == sum(c * a ** i
                                         for i, c in enumerate(fib_poly(n)))
            assert lucas_eval(n, a) == sum(c * a ** i
                                           for i, c in enumerate(lucas_poly(n)))


def test_eval_examples():
    assert fib_eval(3, 1) == 2
    assert lucas_eval(3, 1) == 4
    assert fib_eval(2, 4) == 4


def test_lucas_from_fib_identity():
    # L_d(a) = a F_d(a) + 2 F_{d-1}(a)
    for d in range(1, 31):
        for a in range(1, 11):
            assert lucas_eval(d, a) == a * fib_eval(d, a) + 2 * fib_eval(d - 1, a)


def test_fib_product_difference_identity():
    # F_r F_d - F_{r+1} F_{d-1} = (-1)^(r+1) F_{d-r-1}
    for d in range(0, 21):
        for r in range(0, d + 1):
            for a in range(1, 6):
                lhs = fib_eval(r, a) * fib_eval(d, a) \
                    - fib_eval(r + 1, a) * fib_eval(d - 1, a)
                assert lhs == (-1) ** (r + 1) * fib_eval(d - r - 1, a)


def test_closed_form_via_characteristic_roots():
    # F_n(q) = (rho1^n - rho2^n)/sqrt(q^2+4), certified to < 1e-20
    digits = 60
    tol = Fraction(1, 10 ** 20)
    for q in range(1, 7):
        disc = sqrt_prec(Fraction(q * q + 4), digits)
        rho1 = (q + disc) * Fraction(1, 2)
        rho2 = (q - disc) * Fraction(1, 2)
        p1, p2 = rho1, rho2
        for n in range(1, 31):
            approx = (p1 - p2) / disc
            exact = fib_eval(n, q)
            assert abs(approx.value - exact) + approx.err < tol, (q, n)
            p1, p2 = p1 * rho1, p2 * rho2


def test_even_set_form_matches_recurrence():
    for n in range(1, 19):
        assert fib_via_even_sets(n) == fib_poly(n)


def test_even_set_small_cases():
    assert fib_via_even_sets(1) == (1,)
    assert fib_via_even_sets(2) == (0, 1)
    assert fib_via_even_sets(4) == (0, 2, 0, 1)


def test_lucas_dominates_alpha_fib():
    # supports positivity of the magic sum; equality only at d = 1
    for d in range(0, 25):
        for a in range(1, 8):
            lhs, rhs = lucas_eval(d, a), a * fib_eval(d, a)
            assert lhs > rhs if d != 1 else lhs == rhs


@pytest.mark.parametrize("d,r,alpha", [(3, 2, 1), (1, 0, 1), (2, 0, 2),
                                       (4, 3, 3), (2, 1, 5)])
def test_generating_function_check(d, r, alpha):
    assert fib_generating_check(d, r, alpha, 10)


def test_generating_function_rejects_bad_n():
    with pytest.raises(ValueError):
        fib_generating_check(2, 0, 1, 0)
