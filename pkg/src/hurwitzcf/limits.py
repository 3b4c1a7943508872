"""Certified evaluation of the family's limits.

Everything here reduces to exact rational series with rigorous truncation
bounds: the magic numbers sigma, rho are rational, so the two hypergeometric
series A and B have rational terms with term ratio rho / ((m+1)(sigma+m)).
Limits come out as rational balls (PrecReal).

Bessel functions appear only in Gamma-free ratios or at half-odd orders,
where the order recurrences reduce them to sin/cos/sinh/cosh; no Gamma
evaluator exists anywhere in this package.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from .errors import PrecisionExhausted, UnsupportedOrder
from .exactnum import PrecReal, mantissa_bits
from .fibpoly import fib_eval
from .hurwitz import CFParams, magic

_TAIL_GUARD_DIGITS = 10


def _max_precision_bits() -> int:
    return int(os.environ.get("HURWITZ_MAX_PRECISION", "10000"))


# ---------------------------------------------------------------------------
# certified rational series


def _sum_ratio_series(t0: Fraction, ratio: Callable[[int], Fraction],
                      digits: int) -> tuple[Fraction, Fraction, int]:
    """Sum t0 + t0*ratio(0) + t0*ratio(0)*ratio(1) + ... with a certified
    tail bound.

    ratio(m) is t_{m+1}/t_m and must tend to 0 in absolute value.  Stops once
    three consecutive terms are below 10^-(digits+guard) relative to the
    partial sum and the next ratio is at most 1/2; the tail is then bounded
    by a geometric series.  Returns (partial, tail_bound, terms_used).
    """
    if t0 == 0:
        return Fraction(0), Fraction(0), 0
    thresh = Fraction(1, 10 ** (digits + _TAIL_GUARD_DIGITS))
    partial = t0
    term = t0
    m = 0
    small_streak = 0
    while True:
        nxt = term * ratio(m)
        m += 1
        if nxt == 0:
            return partial, Fraction(0), m
        partial += nxt
        term = nxt
        if abs(term) < thresh * max(abs(partial), thresh):
            small_streak += 1
        else:
            small_streak = 0
        q = abs(ratio(m))
        if small_streak >= 3 and q <= Fraction(1, 2):
            tail = abs(term * ratio(m)) / (1 - q)
            return partial, tail, m + 1
        if m > 100 * (digits + 20):
            raise PrecisionExhausted("series did not certify")


@dataclass(frozen=True)
class SeriesValue:
    A: PrecReal
    B: PrecReal
    terms_used: int
    tail_bound: Fraction


def series_AB(sigma: Fraction, rho: Fraction, digits: int) -> SeriesValue:
    """A = sum_m rho^m / (m! (sigma+m-1)_m) and
    B = sum_m rho^(m+1) / (m! (sigma+m)_(m+1)), certified to the requested
    precision (the terms decay superfactorially for either sign of rho)."""
    sigma = Fraction(sigma)
    rho = Fraction(rho)
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    if rho == 0:
        return SeriesValue(PrecReal(1), PrecReal(0), 1, Fraction(0))
    a_sum, a_tail, a_terms = _sum_ratio_series(
        Fraction(1), lambda m: rho / ((m + 1) * (sigma + m)), digits)
    b_sum, b_tail, b_terms = _sum_ratio_series(
        rho / sigma, lambda m: rho / ((m + 1) * (sigma + m + 1)), digits)
    return SeriesValue(PrecReal(a_sum, a_tail), PrecReal(b_sum, b_tail),
                       max(a_terms, b_terms), max(a_tail, b_tail))


# ---------------------------------------------------------------------------
# elementary kernels (certified Taylor sums at rational arguments)


def _taylor_pair(x: Fraction, digits: int, odd: bool,
                 alternating: bool) -> PrecReal:
    """sum x^(2k+p)/ (2k+p)! with p = 1 if odd else 0, optionally with
    alternating signs: covers sinh/cosh (plain) and sin/cos (alternating)."""
    p = 1 if odd else 0
    t0 = x if odd else Fraction(1)
    s = 1 if not alternating else -1

    def ratio(m: int) -> Fraction:
        k = 2 * m + p
        return s * x * x / ((k + 1) * (k + 2))

    partial, tail, _ = _sum_ratio_series(t0, ratio, digits)
    return PrecReal(partial, tail)


def sin_prec(x: Fraction, digits: int) -> PrecReal:
    return _taylor_pair(Fraction(x), digits, odd=True, alternating=True)


def cos_prec(x: Fraction, digits: int) -> PrecReal:
    return _taylor_pair(Fraction(x), digits, odd=False, alternating=True)


def sinh_prec(x: Fraction, digits: int) -> PrecReal:
    return _taylor_pair(Fraction(x), digits, odd=True, alternating=False)


def cosh_prec(x: Fraction, digits: int) -> PrecReal:
    return _taylor_pair(Fraction(x), digits, odd=False, alternating=False)


def exp_prec(x: Fraction, digits: int) -> PrecReal:
    x = Fraction(x)
    partial, tail, _ = _sum_ratio_series(
        Fraction(1), lambda m: x / (m + 1), digits)
    return PrecReal(partial, tail)


def _arctan_inv(x: int, digits: int) -> PrecReal:
    """arctan(1/x) for integer x >= 2 (alternating series, tail bounded by
    the first omitted term)."""
    inv2 = Fraction(1, x * x)

    def ratio(m: int) -> Fraction:
        return -inv2 * (2 * m + 1) / (2 * m + 3)

    partial, tail, _ = _sum_ratio_series(Fraction(1, x), ratio, digits)
    return PrecReal(partial, tail)


def pi_prec(digits: int) -> PrecReal:
    # Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    return 16 * _arctan_inv(5, digits) - 4 * _arctan_inv(239, digits)


def sqrt_prec(x, digits: int) -> PrecReal:
    """Certified square root of a nonnegative rational or PrecReal ball."""
    if isinstance(x, PrecReal):
        lo, hi = x.lo, x.hi
    else:
        lo = hi = Fraction(x)
    if lo < 0:
        raise ValueError("square root of a possibly-negative value")
    bits = mantissa_bits(digits)

    def root_lo(v: Fraction) -> Fraction:
        n = v.numerator * v.denominator << (2 * bits)
        return Fraction(math.isqrt(n), v.denominator << bits)

    def root_hi(v: Fraction) -> Fraction:
        n = v.numerator * v.denominator << (2 * bits)
        return Fraction(math.isqrt(n) + 1, v.denominator << bits)

    a, b = root_lo(lo), root_hi(hi)
    return PrecReal((a + b) / 2, (b - a) / 2)


# ---------------------------------------------------------------------------
# half-odd-order Bessel functions (elementary forms)

BesselKind = Literal["I", "J"]


def _half_odd_bracket(kind: BesselKind, k: int, z: Fraction,
                      digits: int) -> PrecReal:
    """The elementary part of I_{k+1/2}(z) or J_{k+1/2}(z), i.e. the value
    without the common sqrt(2/(pi z)) prefactor.

    Seeds: I: (cosh z, sinh z) at orders -1/2, 1/2; J: (cos z, sin z).
    Raised or lowered by the three-term order recurrences.
    """
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    w = digits + 2 * abs(k) + 10
    if kind == "I":
        below, at = cosh_prec(z, w), sinh_prec(z, w)  # orders -1/2, 1/2
    elif kind == "J":
        below, at = cos_prec(z, w), sin_prec(z, w)
    else:
        raise ValueError(f"kind must be 'I' or 'J', got {kind!r}")
    if k >= 0:
        j = 0  # `at` holds order j + 1/2
        while j < k:
            coef = Fraction(2 * j + 1, 1) / z
            if kind == "I":
                nxt = below - coef * at
            else:
                nxt = -below + coef * at
            below, at = at, nxt
            j += 1
        return at
    j = 0
    while j > k:
        # lower the order: solve the recurrence for the (j-3/2) term
        if kind == "I":
            lower = at + Fraction(2 * j - 1, 1) / z * below
        else:
            lower = -at + Fraction(2 * j - 1, 1) / z * below
        at, below = below, lower
        j -= 1
    return at


def elementary_half_odd(kind: BesselKind, k: int, z: Fraction,
                        digits: int) -> PrecReal:
    """I_{k+1/2}(z) or J_{k+1/2}(z) in closed form, prefactor included."""
    z = Fraction(z)
    if z <= 0:
        raise ValueError("z must be positive")
    w = digits + 10
    pref = sqrt_prec(PrecReal(2) / (pi_prec(w) * z), w)
    return pref * _half_odd_bracket(kind, k, z, w)


def _is_half_odd(nu: Fraction) -> bool:
    return Fraction(nu).denominator == 2


def bessel_I(nu, z, digits: int) -> PrecReal:
    """Standalone modified Bessel value; only half-odd orders have an
    elementary form, anything else is refused (ratios go through series_AB
    and never need this)."""
    nu = Fraction(nu)
    if not _is_half_odd(nu):
        raise UnsupportedOrder(f"I_{nu} has no elementary standalone form")
    return elementary_half_odd("I", int(nu - Fraction(1, 2)), z, digits)


def bessel_J(nu, z, digits: int) -> PrecReal:
    nu = Fraction(nu)
    if not _is_half_odd(nu):
        raise UnsupportedOrder(f"J_{nu} has no elementary standalone form")
    return elementary_half_odd("J", int(nu - Fraction(1, 2)), z, digits)


def bessel_ratio_I(sigma: Fraction, rho: Fraction, digits: int) -> PrecReal:
    """I_{sigma-1}(2 sqrt(rho)) / I_sigma(2 sqrt(rho)) for rho a square of a
    rational, via the Gamma-free series identity (= A sqrt(rho) / B)."""
    sigma, rho = Fraction(sigma), Fraction(rho)
    if rho <= 0:
        raise ValueError("rho must be positive")
    root = Fraction(math.isqrt(rho.numerator), math.isqrt(rho.denominator))
    if root * root != rho:
        raise ValueError("rho must be the square of a rational")
    return _certify(lambda w: _ratio_from_series(sigma, rho, root, w), digits)


def _ratio_from_series(sigma, rho, root, w) -> PrecReal:
    sv = series_AB(sigma, rho, w)
    return sv.A * root / sv.B


# ---------------------------------------------------------------------------
# limits of the family


def _certify(compute: Callable[[int], PrecReal], digits: int) -> PrecReal:
    """Run compute at escalating working precision until the result is
    certified to 10^-digits relative error."""
    target = Fraction(1, 10 ** digits)
    w = digits + _TAIL_GUARD_DIGITS
    cap = _max_precision_bits()
    while True:
        try:
            result = compute(w)
        except ZeroDivisionError:
            result = None
        if result is not None:
            rel = result.rel_err()
            if rel is not None and rel <= target:
                return result
        if mantissa_bits(w) > cap:
            raise PrecisionExhausted(
                f"cannot certify {digits} digits within {cap} bits "
                "(HURWITZ_MAX_PRECISION)")
        w *= 2


def _xi_from_AB(params: CFParams, A: PrecReal, B: PrecReal) -> PrecReal:
    a, b1, d, r = params.alpha, params.beta1, params.d, params.r
    fd = fib_eval(d, a)
    s = -1 if (d - r) % 2 else 1
    num = fib_eval(r + 1, a) * A + s * fib_eval(d - r - 1, a) * fd * b1 * B
    den = fib_eval(r, a) * A - s * fib_eval(d - r, a) * fd * b1 * B
    return num / den


def xi_limit(params: CFParams, digits: int) -> PrecReal:
    """The limit of the continued fraction, from the two rational series."""
    sigma, rho = magic(params)

    def compute(w: int) -> PrecReal:
        sv = series_AB(sigma, rho, w)
        return _xi_from_AB(params, sv.A, sv.B)

    return _certify(compute, digits)


def xi_bessel(params: CFParams, digits: int) -> PrecReal:
    """The limit via the Bessel-function statement: the I-form for odd d,
    the J-form for even d, at the rational argument 2/(beta1 F_d(alpha)).

    For a half-odd magic sum the value is assembled entirely from the
    elementary closed forms (prefactors cancel in the ratio); otherwise the
    two Bessel values are produced from the series with the common Gamma
    factor cancelled.
    """
    sigma, rho = magic(params)
    a, b1, d, r = params.alpha, params.beta1, params.d, params.r
    fd = fib_eval(d, a)
    z = Fraction(2, b1 * fd)  # = 2 sqrt(|rho|)
    kind: BesselKind = "I" if d % 2 == 1 else "J"

    if _is_half_odd(sigma):
        k_low = int(sigma - Fraction(3, 2))  # order sigma - 1 = k_low + 1/2

        def compute(w: int) -> PrecReal:
            low = _half_odd_bracket(kind, k_low, z, w)
            high = _half_odd_bracket(kind, k_low + 1, z, w)
            num = fib_eval(r + 1, a) * low \
                + (-1) ** (r + 1) * fib_eval(d - r - 1, a) * high
            den = fib_eval(r, a) * low \
                + (-1) ** r * fib_eval(d - r, a) * high
            return num / den
    else:
        def compute(w: int) -> PrecReal:
            sv = series_AB(sigma, rho, w)
            # I_{sigma-1} : A, I_sigma : B / sqrt(rho) up to shared factors
            sgn = 1 if kind == "I" else -1
            low = sv.A
            high = sgn * sv.B * b1 * fd
            num = fib_eval(r + 1, a) * low \
                + (-1) ** (r + 1) * fib_eval(d - r - 1, a) * high
            den = fib_eval(r, a) * low \
                + (-1) ** r * fib_eval(d - r, a) * high
            return num / den

    return _certify(compute, digits)


def lehmer_d1(beta0: int, beta1: int, digits: int) -> PrecReal:
    """[b0, b0+b1, b0+2b1, ...] = I_{b0/b1-1}(2/b1) / I_{b0/b1}(2/b1)."""
    if beta0 < 1 or beta1 < 1:
        raise ValueError("beta0, beta1 must be >= 1")
    sigma = Fraction(beta0, beta1)
    rho = Fraction(1, beta1 * beta1)
    root = Fraction(1, beta1)
    return _certify(lambda w: _ratio_from_series(sigma, rho, root, w), digits)


def perron_d1(beta0: int, beta1: int, digits: int) -> PrecReal:
    """The same arithmetic-progression fraction by the older two-series
    formula, with the shared Gamma factor cancelled through rising
    factorials.  Summed independently of series_AB as a cross-check."""
    if beta0 < 1 or beta1 < 1:
        raise ValueError("beta0, beta1 must be >= 1")
    sigma = Fraction(beta0, beta1)
    inv = Fraction(1, beta1 * beta1)

    def compute(w: int) -> PrecReal:
        # numerator terms 1/(b1^2n n! (sigma)(sigma+1)...(sigma+n-1))
        n_sum, n_tail, _ = _sum_ratio_series(
            Fraction(1), lambda m: inv / ((m + 1) * (sigma + m)), w)
        d_sum, d_tail, _ = _sum_ratio_series(
            Fraction(1, 1) / sigma,
            lambda m: inv / ((m + 1) * (sigma + m + 1)), w)
        return beta1 * PrecReal(n_sum, n_tail) / PrecReal(d_sum, d_tail)

    return _certify(compute, digits)


def wlang_limit_check(m: int, n: int, digits: int) -> bool:
    """Compare P_n(x)/Q_n(x) at x = 1/(4 m^2) against
    sqrt(x) I_1(2 sqrt(x))/I_0(2 sqrt(x)) (= B/A at sigma = 1, rho = x)."""
    from .identities import eval_unipoly, p_poly, q_poly
    if m < 2:
        raise ValueError("m must be >= 2")
    x = Fraction(1, 4 * m * m)
    lhs = eval_unipoly(p_poly(n), x) / eval_unipoly(q_poly(n), x)
    sv = series_AB(Fraction(1), x, digits + 5)
    rhs = sv.B / sv.A
    tol = Fraction(1, 10 ** digits)
    return abs(lhs - rhs.value) + rhs.err < tol
