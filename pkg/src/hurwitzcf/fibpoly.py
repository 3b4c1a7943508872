"""Fibonacci and Lucas polynomials.

Both families satisfy X_n = q X_{n-1} + X_{n-2}, with seeds F_0 = 0, F_1 = 1
and L_0 = 2, L_1 = q.  Polynomials are coefficient lists (index = degree,
trailing coefficient nonzero except for the zero polynomial []).
"""

from __future__ import annotations

from functools import lru_cache

IntPoly = list  # list[int], index = degree


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift_q(a: IntPoly) -> IntPoly:
    # multiply by q
    return [0] + a if a else []


@lru_cache(maxsize=None)
def fib_poly(n: int) -> tuple:
    """F_n(q); negative indices via F_{-n} = (-1)^{n+1} F_n (recurrence run
    backwards)."""
    if n < 0:
        m = -n
        f = fib_poly(m)
        return f if m % 2 == 1 else tuple(-c for c in f)
    if n == 0:
        return ()
    if n == 1:
        return (1,)
    prev2, prev1 = fib_poly(n - 2), fib_poly(n - 1)
    return tuple(poly_add(_shift_q(list(prev1)), list(prev2)))


@lru_cache(maxsize=None)
def lucas_poly(n: int) -> tuple:
    """L_n(q) for n >= 0."""
    if n < 0:
        raise ValueError("Lucas polynomials are only defined for n >= 0 here")
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    prev2, prev1 = lucas_poly(n - 2), lucas_poly(n - 1)
    return tuple(poly_add(_shift_q(list(prev1)), list(prev2)))


def fib_eval(n: int, a: int) -> int:
    """F_n evaluated at q = a, by the integer recurrence (no polynomials)."""
    if n < 0:
        v = fib_eval(-n, a)
        return v if (-n) % 2 == 1 else -v
    x, y = 0, 1  # F_0, F_1
    for _ in range(n):
        x, y = y, a * y + x
    return x


def lucas_eval(n: int, a: int) -> int:
    """L_n evaluated at q = a."""
    if n < 0:
        raise ValueError("Lucas values are only defined for n >= 0 here")
    x, y = 2, a  # L_0, L_1
    if n == 0:
        return x
    for _ in range(n - 1):
        x, y = y, a * y + x
    return y


def _even_subsets(lo: int, hi: int):
    """All subsets of {lo..hi} that are disjoint unions of even-length runs.

    Yields tuples of elements.  Runs are generated with a mandatory gap after
    each, so every even set appears exactly once.
    """
    if lo > hi:
        yield ()
        return
    # lo excluded
    for rest in _even_subsets(lo + 1, hi):
        yield rest
    # a run of even length starting at lo
    run_end = lo + 1
    while run_end <= hi:
        run = tuple(range(lo, run_end + 1))
        for rest in _even_subsets(run_end + 2, hi):
            yield run + rest
        run_end += 2


def fib_via_even_sets(n: int) -> tuple:
    """F_n(q) by counting even sets: F_n(q) = sum over even S of {1..n-1}
    of q^((n-1)-|S|).  Independent of the recurrence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [0] * n
    for s in _even_subsets(1, n - 1):
        coeffs[(n - 1) - len(s)] += 1
    return tuple(_trim(coeffs))


def fib_generating_check(d: int, r: int, alpha: int, N: int) -> bool:
    """Check the generating function of the subsequence F_{nd+r+1}(alpha):

    (1 - L_d(a) t + (-1)^d t^2) * sum_{n<=N} F_{nd+r+1}(a) t^n
        = F_{r+1}(a) + (-1)^(r+1) F_{d-r-1}(a) t   (mod t^(N+1))
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    a = alpha
    series = [fib_eval(n * d + r + 1, a) for n in range(N + 1)]
    kernel = [1, -lucas_eval(d, a), (-1) ** d]
    prod = poly_mul(kernel, series)[: N + 1]
    expect = _trim([fib_eval(r + 1, a), (-1) ** (r + 1) * fib_eval(d - r - 1, a)])
    return _trim(list(prod)) == expect
