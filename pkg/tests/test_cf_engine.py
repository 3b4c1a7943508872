import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitzcf.cf_engine import (convergents, euler_mindig, eval_finite,
                                 is_even_set, shift_check, stream_from_list)
from hurwitzcf.errors import IndexTooLarge

E_STREAM = [2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1, 1, 10, 1, 1, 12]
TAN1_STREAM = [1, 1, 1, 3, 1, 5, 1, 7, 1, 9, 1, 11]


def test_convergents_basic():
    convs = convergents(stream_from_list([1, 1, 2]), 2)
    assert [c.p for c in convs] == [1, 1, 2, 5]
    assert [c.q for c in convs] == [0, 1, 1, 3]


def test_convergents_of_e_prefix():
    convs = convergents(stream_from_list(E_STREAM), 5)
    assert (convs[-1].p, convs[-1].q) == (87, 32)


def test_single_term():
    convs = convergents(stream_from_list([7]), 0)
    assert (convs[-1].p, convs[-1].q) == (7, 1)


def test_determinant_identity_and_coprimality():
    for stream in (E_STREAM, TAN1_STREAM, [3, 1, 4, 1, 5, 9, 2, 6]):
        convs = convergents(stream_from_list(stream), len(stream) - 1)
        for prev, cur in zip(convs, convs[1:]):
            n = cur.n
            assert cur.p * prev.q - prev.p * cur.q == (-1) ** (n - 1)
            assert math.gcd(cur.p, cur.q) == 1


def test_is_even_set_examples():
    assert is_even_set({1, 2, 3, 4, 6, 7})
    assert not is_even_set({1, 2, 3})
    assert is_even_set(set())
    assert is_even_set({5, 6})
    assert not is_even_set({4})


def test_euler_mindig_examples():
    em = euler_mindig(stream_from_list([1, 1, 2]), 2)
    assert em.p == 5 and em.q == 3
    em = euler_mindig(stream_from_list([7]), 0)
    assert (em.p, em.q) == (7, 1)
    em = euler_mindig(stream_from_list([2, 1, 2]), 2)
    assert (em.p, em.q) == (8, 3)


def test_euler_mindig_guard():
    with pytest.raises(IndexTooLarge):
        euler_mindig(stream_from_list([1] * 40), 30)
    with pytest.raises(IndexTooLarge):
        euler_mindig(stream_from_list([1] * 40), 16, naive=True)


def test_euler_mindig_matches_recurrence():
    for stream in (E_STREAM, TAN1_STREAM):
        s = stream_from_list(stream)
        convs = convergents(s, len(stream) - 1)
        for n in range(min(len(stream), 15)):
            em = euler_mindig(s, n)
            assert (em.p, em.q) == (convs[n + 1].p, convs[n + 1].q)


def test_naive_euler_mindig_agrees_with_run_enumeration():
    s = stream_from_list(E_STREAM)
    for n in range(11):
        fast = euler_mindig(s, n)
        slow = euler_mindig(s, n, naive=True)
        assert fast == slow


def test_eval_finite_examples():
    assert eval_finite([1, 1, 2]) == Fraction(5, 3)
    assert eval_finite([7]) == 7
    convs = convergents(stream_from_list(TAN1_STREAM[:6]), 5)
    assert eval_finite(TAN1_STREAM[:6]) == Fraction(convs[-1].p, convs[-1].q)


def test_eval_finite_equals_last_convergent():
    for stream in (E_STREAM, [4, 3, 4, 4, 4, 5, 4, 6]):
        convs = convergents(stream_from_list(stream), len(stream) - 1)
        assert eval_finite(stream) == Fraction(convs[-1].p, convs[-1].q)


def test_shift_check_examples():
    assert shift_check(stream_from_list(E_STREAM[:6] + [1]), 5)
    assert shift_check(stream_from_list([1, 1, 1]), 1)
    assert shift_check(stream_from_list([4, 3, 4, 4, 4, 5, 4]), 5)


@given(st.lists(st.integers(1, 9), min_size=3, max_size=12))
def test_shift_check_random_streams(a):
    assert shift_check(stream_from_list(a), len(a) - 2)


def test_sandwich_property():
    # the limit lies strictly between consecutive convergents
    s = stream_from_list(E_STREAM)
    convs = convergents(s, len(E_STREAM) - 1)
    proxy = Fraction(convs[-1].p, convs[-1].q)
    for a, b in zip(convs[1:-3], convs[2:-2]):
        lo, hi = sorted((Fraction(a.p, a.q), Fraction(b.p, b.q)))
        assert lo < proxy < hi
