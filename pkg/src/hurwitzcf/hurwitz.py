"""The quasi-periodic family xi(alpha, beta0, beta1, d, r).

Partial denominators: r copies of alpha, then beta0, then repeating blocks of
d - 1 copies of alpha followed by beta0 + beta1*n for n = 1, 2, ...

Three independent routes to the (nd+r-1)st convergent numerators live here:
the closed form (exact rational sums scaled back to integers), the compact
convolution recurrence, and - via cf_engine - the plain convergent recurrence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cf_engine import Convergent, DenomStream
from .errors import NonIntegerResult
from .exactnum import PrecReal, falling_factorial, gbinom, to_prec_real
from .fibpoly import fib_eval, lucas_eval


@dataclass(frozen=True)
class CFParams:
    alpha: int
    beta0: int
    beta1: int
    d: int
    r: int

    def __post_init__(self):
        if self.alpha < 1 or self.beta0 < 1 or self.beta1 < 1 or self.d < 1:
            raise ValueError("alpha, beta0, beta1, d must all be >= 1")
        if self.r < 0:
            raise ValueError("r must be >= 0")

    @property
    def guaranteed(self) -> bool:
        # the regime the closed-form theorem is proved for
        return self.r <= self.d - 1

    def to_json(self) -> str:
        return json.dumps({"alpha": self.alpha, "beta0": self.beta0,
                           "beta1": self.beta1, "d": self.d, "r": self.r})

    @classmethod
    def from_json(cls, s: str) -> "CFParams":
        obj = json.loads(s)
        return cls(obj["alpha"], obj["beta0"], obj["beta1"], obj["d"], obj["r"])


class MagicPair(NamedTuple):
    sigma: Fraction
    rho: Fraction


def denom_stream(params: CFParams) -> DenomStream:
    a, b0, b1, d, r = (params.alpha, params.beta0, params.beta1,
                       params.d, params.r)

    def stream(i: int) -> int:
        if i < 0:
            raise IndexError(i)
        if i < r:
            return a
        k, off = divmod(i - r, d)
        return b0 + b1 * k if off == 0 else a

    return stream


def magic(params: CFParams) -> MagicPair:
    a, d = params.alpha, params.d
    fd = fib_eval(d, a)
    sigma = Fraction(params.beta0 - a, params.beta1) \
        + Fraction(lucas_eval(d, a), params.beta1 * fd)
    rho = Fraction((-1) ** (d - 1), (params.beta1 * fd) ** 2)
    return MagicPair(sigma, rho)


def _closed_form_sums(params: CFParams, n: int) -> tuple[Fraction, Fraction]:
    """The two inner sums of the closed form, as exact rationals.

    first  = sum_{k<=n/2}     ((n-k)!/k!)   C(n+sigma-1-k, n-2k)   rho^k
    second = sum_{k<=(n-1)/2} ((n-k-1)!/k!) C(n+sigma-1-k, n-2k-1) rho^(k+1)
    """
    sigma, rho = magic(params)
    first = Fraction(0)
    fact = 1  # running k!
    for k in range(n // 2 + 1):
        if k:
            fact *= k
        first += Fraction(_ifact(n - k), fact) \
            * gbinom(n + sigma - 1 - k, n - 2 * k) * rho ** k
    second = Fraction(0)
    fact = 1
    for k in range((n - 1) // 2 + 1):
        if k:
            fact *= k
        second += Fraction(_ifact(n - k - 1), fact) \
            * gbinom(n + sigma - 1 - k, n - 2 * k - 1) * rho ** (k + 1)
    return first, second


def _ifact(n: int) -> int:
    import math
    return math.factorial(n)


def closed_form_convergent(params: CFParams, n: int) -> Convergent:
    """The convergent at index nd+r-1 from the explicit formula.

    Both sums are evaluated over exact rationals; the scale factor
    F_d(alpha)^n beta1^n is multiplied back and integrality asserted.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b1, d, r = params.alpha, params.beta1, params.d, params.r
    fd = fib_eval(d, a)
    first, second = _closed_form_sums(params, n)
    scale = Fraction(fd * b1) ** n
    sign_p = -1 if (d - r) % 2 else 1
    p_rat = scale * (fib_eval(r + 1, a) * first
                     + sign_p * fib_eval(d - r - 1, a) * fd * b1 * second)
    q_rat = scale * (fib_eval(r, a) * first
                     - sign_p * fib_eval(d - r, a) * fd * b1 * second)
    if p_rat.denominator != 1 or q_rat.denominator != 1:
        raise NonIntegerResult(f"{params} n={n}: {p_rat}, {q_rat}")
    return Convergent(n * d + r - 1, int(p_rat), int(q_rat))


def prec_recurrence_p(params: CFParams, n_max: int) -> list[int]:
    """Numerators p_{nd+r-1}, n = 0..n_max, by the compact recurrence

    p_{nd+r-1} = F_{nd+r+1}(a)
                 + sum_{k<n} p_{kd+r-1} (beta0 + beta1 k - a) F_{(n-k)d}(a)

    with p_{r-1} = F_{r+1}(a).
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    a, b0, b1, d, r = (params.alpha, params.beta0, params.beta1,
                       params.d, params.r)
    out = [fib_eval(r + 1, a)]
    for n in range(1, n_max + 1):
        acc = fib_eval(n * d + r + 1, a)
        for k in range(n):
            acc += out[k] * (b0 + b1 * k - a) * fib_eval((n - k) * d, a)
        out.append(acc)
    return out


def normalized_numerator(params: CFParams, n: int, digits: int) -> PrecReal:
    """p_{nd+r-1} / (F_d(a)^n beta1^n (sigma+n-1)_n), rendered to the
    requested precision.  Converges to the series limit as n grows."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sigma, _ = magic(params)
    p = prec_recurrence_p(params, n)[n]
    fd = fib_eval(params.d, params.alpha)
    denom = Fraction(fd * params.beta1) ** n * falling_factorial(sigma + n - 1, n)
    return to_prec_real(Fraction(p) / denom, digits)
