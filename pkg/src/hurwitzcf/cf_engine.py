"""Simple continued fraction machinery.

A partial-denominator stream is any callable index -> int (a_0 may be any
integer, a_n >= 1 for n >= 1), so infinite quasi-periodic streams plug in
directly.  The recurrence path is the workhorse; the Euler-Mindig even-subset
formula is kept as an independent oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

from .errors import IndexTooLarge
from .fibpoly import _even_subsets

DenomStream = Callable[[int], int]

EULER_MINDIG_GUARD = 22


class Convergent(NamedTuple):
    n: int
    p: int
    q: int


def stream_from_list(a: Sequence[int]) -> DenomStream:
    a = list(a)
    return lambda i: a[i]


def convergents(a: DenomStream, n_max: int) -> list[Convergent]:
    """Convergents for n = -1, 0, ..., n_max by the standard recurrence
    p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    out = [Convergent(-1, 1, 0)]
    p_prev, q_prev = 1, 0
    p, q = a(0), 1
    out.append(Convergent(0, p, q))
    for n in range(1, n_max + 1):
        an = a(n)
        p, p_prev = an * p + p_prev, p
        q, q_prev = an * q + q_prev, q
        out.append(Convergent(n, p, q))
    return out


def is_even_set(s) -> bool:
    """True iff s decomposes into maximal runs of even length."""
    elems = sorted(set(s))
    run = 0
    prev = None
    for x in elems:
        if prev is not None and x == prev + 1:
            run += 1
        else:
            if run % 2 == 1:
                return False
            run = 1
        prev = x
    return run % 2 == 0


def euler_mindig(a: DenomStream, n: int, naive: bool = False) -> Convergent:
    """p_n and q_n straight from the even-containment sums of the
    Euler-Mindig formulas.  Exponential in n; guarded.

    With naive=True, enumerates all subsets and filters with is_even_set —
    the maximally dumb variant kept as the oracle's oracle.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    guard = 14 if naive else EULER_MINDIG_GUARD
    if n > guard:
        raise IndexTooLarge(f"n={n} exceeds enumeration guard {guard}")
    vals = [a(i) for i in range(n + 1)]

    def em_sum(lo: int) -> int:
        total = 0
        if naive:
            universe = list(range(lo, n + 1))
            for mask in range(1 << len(universe)):
                s = [universe[i] for i in range(len(universe)) if mask >> i & 1]
                if is_even_set(set(universe) - set(s)):
                    total += math.prod(vals[i] for i in s)
        else:
            for even in _even_subsets(lo, n):
                excluded = set(even)
                total += math.prod(vals[i] for i in range(lo, n + 1)
                                   if i not in excluded)
        return total

    return Convergent(n, em_sum(0), em_sum(1))


def eval_finite(a: Sequence[int]) -> Fraction:
    """Exact value of the finite continued fraction [a_0, a_1, ..., a_n]."""
    if not a:
        raise ValueError("empty continued fraction")
    acc = Fraction(a[-1])
    for x in reversed(a[:-1]):
        acc = x + 1 / acc
    return acc


def shift_check(a: DenomStream, n: int) -> bool:
    """q_n of [a_0, a_1, ...] equals p_{n-1} of the shifted stream
    [a_1, a_2, ...]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    qn = convergents(a, n)[-1].q
    shifted = lambda i: a(i + 1)
    return qn == convergents(shifted, n - 1)[-1].p
