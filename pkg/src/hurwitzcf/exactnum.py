"""Exact rational kernels and a certified-error real type.

Integers are Python ints, rationals are ``fractions.Fraction`` (always kept
reduced, positive denominator).  ``PrecReal`` is a ball: an exact rational
center together with a rigorous absolute error bound, so every derived
quantity carries its own certification.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def falling_factorial(x: Rat, k: int) -> Fraction:
    """(x)_k = x (x-1) ... (x-k+1); the empty product for k = 0."""
    if k < 0:
        raise ValueError(f"falling factorial needs k >= 0, got {k}")
    acc = Fraction(1)
    x = Fraction(x)
    for j in range(k):
        acc *= x - j
    return acc


def gbinom(x: Rat, k: int) -> Fraction:
    """Generalized binomial coefficient: (x)_k / k! for any rational x."""
    if k < 0:
        raise ValueError(f"gbinom needs k >= 0, got {k}")
    return falling_factorial(x, k) / math.factorial(k)


def mantissa_bits(digits: int) -> int:
    # ~3.33 bits per decimal digit, plus guard bits for rounding slack
    return (digits * 10 + 2) // 3 + 64


def _round_to_bits(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Round x to a dyadic rational with ~bits significant bits.

    Returns (rounded value, exact rounding error).
    """
    if x == 0:
        return Fraction(0), Fraction(0)
    shift = bits - (x.numerator.bit_length() - x.denominator.bit_length())
    if shift <= 0:
        # already an integer wider than the target: keep exactly
        return x, Fraction(0)
    scaled = x * (1 << shift)
    m = round(scaled)
    rounded = Fraction(m, 1 << shift)
    return rounded, abs(x - rounded)


class PrecReal:
    """An exact rational center with a rigorous absolute error bound.

    Immutable.  All arithmetic is conservative: the true value of any
    expression is guaranteed to lie within ``err`` of ``value``.
    """

    __slots__ = ("value", "err")

    def __init__(self, value: Rat, err: Rat = 0):
        value = Fraction(value)
        err = Fraction(err)
        if err < 0:
            raise ValueError("error bound must be nonnegative")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "err", err)

    def __setattr__(self, *a):
        raise AttributeError("PrecReal is immutable")

    # -- interval views ----------------------------------------------------

    @property
    def lo(self) -> Fraction:
        return self.value - self.err

    @property
    def hi(self) -> Fraction:
        return self.value + self.err

    def rel_err(self) -> Fraction:
        """Certified relative error bound; inf is represented by None."""
        mag = abs(self.value) - self.err
        if mag <= 0:
            return None
        return self.err / mag

    def contains_zero(self) -> bool:
        return abs(self.value) <= self.err

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "PrecReal":
        if isinstance(x, PrecReal):
            return x
        return PrecReal(x)

    def __add__(self, other):
        o = self._coerce(other)
        return PrecReal(self.value + o.value, self.err + o.err)

    __radd__ = __add__

    def __neg__(self):
        return PrecReal(-self.value, self.err)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        err = (abs(self.value) * o.err
               + abs(o.value) * self.err
               + self.err * o.err)
        return PrecReal(self.value * o.value, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.contains_zero():
            raise ZeroDivisionError("divisor interval contains zero")
        q = self.value / o.value
        denom_floor = abs(o.value) - o.err
        err = (self.err + abs(q) * o.err) / denom_floor
        return PrecReal(q, err)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __abs__(self):
        return PrecReal(abs(self.value), self.err)

    def __repr__(self):
        return f"PrecReal({self.value} ± {self.err})"

    # -- rounding / rendering ---------------------------------------------

    def compress(self, bits: int) -> "PrecReal":
        """Shrink the center to ~bits significant bits, folding the rounding
        error into the bound.  Keeps long ball computations tractable."""
        v, rerr = _round_to_bits(self.value, bits)
        e, _ = _round_to_bits(self.err + rerr, 32)
        # round the bound itself upward
        if e < self.err + rerr:
            e = self.err + rerr
        return PrecReal(v, e)

    def certified_decimal_digits(self) -> int:
        """Largest D with err < |value| * 10^-D (0 if none)."""
        r = self.rel_err()
        if r is None:
            return 0
        d = 0
        bound = Fraction(1, 10)
        while r < bound and d < 100000:
            d += 1
            bound /= 10
        return d

    def decimal(self, digits: int) -> str:
        """Decimal rendering of the center with ``digits`` fractional digits."""
        v = self.value
        sign = "-" if v < 0 else ""
        v = abs(v)
        scaled = v * 10 ** digits
        q = scaled.numerator // scaled.denominator
        # round half up; exactness of the last digit is governed by err
        if 2 * (scaled - q) >= 1:
            q += 1
        s = str(q).rjust(digits + 1, "0")
        return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"


def to_prec_real(r: Rat, digits: int) -> PrecReal:
    """Render an exact rational as a PrecReal within relative error 10^-digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    r = Fraction(r)
    if r == 0:
        return PrecReal(0)
    v, err = _round_to_bits(r, mantissa_bits(digits))
    out = PrecReal(v, err)
    assert err <= abs(r) * Fraction(1, 10 ** digits)
    return out
