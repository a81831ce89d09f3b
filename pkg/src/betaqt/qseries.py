"""One-variable q-calculus.

The finite routines are generic: they work on :class:`RatFunc` values for
symbolic use and on :class:`fractions.Fraction` for exact numerics.
Infinite products are truncated at ``QSeriesContext.truncation_depth``
factors; at q = 1/2 and depth 60 the truncation error is of order 2**-60.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import ONE, RatFunc, var

__all__ = [
    "QSeriesContext",
    "q_pochhammer_finite",
    "q_pochhammer_truncated",
    "q_binomial",
    "q_exponential_truncated",
    "q_exponential_product",
    "asc_weight",
    "alsalam_carlitz_U",
]


@dataclass(frozen=True)
class QSeriesContext:
    truncation_depth: int = 60

    def __post_init__(self):
        if self.truncation_depth < 1:
            raise ValueError("truncation_depth must be at least 1")


def q_pochhammer_finite(x, q, n: int):
    """(x;q)_n = prod_{j<n} (1 - x q^j)."""
    if n < 0:
        raise ValueError("negative length q-Pochhammer symbol")
    out = ONE if isinstance(x, RatFunc) or isinstance(q, RatFunc) else Fraction(1)
    power = 1
    for _ in range(n):
        out = out * (1 - x * power)
        power = power * q
    return out


def q_pochhammer_truncated(x, q, ctx: QSeriesContext):
    """(x;q)_infinity truncated to ``ctx.truncation_depth`` factors."""
    return q_pochhammer_finite(x, q, ctx.truncation_depth)


def q_binomial(n: int, k: int, q) -> RatFunc:
    """Gaussian binomial [n choose k]_q as a polynomial in q."""
    if k < 0 or k > n:
        return RatFunc(0)
    q = RatFunc(q)
    return q_pochhammer_finite(q, q, n) / (q_pochhammer_finite(q, q, k) * q_pochhammer_finite(q, q, n - k))


def q_exponential_truncated(x, q, degree: int):
    """sum_{n<=degree} (-1)^n q^(n(n-1)/2) x^n / (q;q)_n, the sum form of E_q(-x)."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    total = 0
    qq = 1  # (q;q)_n
    for n in range(degree + 1):
        if n:
            qq = qq * (1 - q**n)
        total = total + (-1) ** n * q ** (n * (n - 1) // 2) * x**n / qq
    return total


def q_exponential_product(x, q, ctx: QSeriesContext):
    """Product form (x;q)_infinity of E_q(-x), truncated."""
    return q_pochhammer_truncated(x, q, ctx)


def asc_weight(x: Fraction, ctx: QSeriesContext, a: Fraction, q: Fraction) -> Fraction:
    """Al-Salam--Carlitz weight w_U^(a)(x; q) with truncated infinite products."""
    x, a, q = Fraction(x), Fraction(a), Fraction(q)
    if not 0 < q < 1:
        raise ValueError("need 0 < q < 1")
    if a >= 0:
        raise ValueError("need a < 0")
    top = q_pochhammer_truncated(q * x, q, ctx) * q_pochhammer_truncated(q * x / a, q, ctx)
    bottom = (
        q_pochhammer_truncated(q, q, ctx)
        * q_pochhammer_truncated(a, q, ctx)
        * q_pochhammer_truncated(q / a, q, ctx)
    )
    return top / bottom


def alsalam_carlitz_U(N: int, a_sym: str = "a", z_sym: str = "z", q_sym: str = "q") -> RatFunc:
    """Monic Al-Salam--Carlitz polynomial U_N^(a)(z; q).

    Assembled from the coefficients of powers of a,

        [a^(N-l)] U_N = q^(N(N-1)/2) (-1)^N (q z)^l (q^-N;q)_l / (q;q)_l (1/z;q)_l,

    for l = 0..N.
    """
    if N < 0:
        raise ValueError("degree must be non-negative")
    a, z, q = var(a_sym), var(z_sym), var(q_sym)
    total = RatFunc(0)
    for l in range(N + 1):
        coeff = (
            q ** (N * (N - 1) // 2)
            * (-1) ** N
            * (q * z) ** l
            * q_pochhammer_finite(q ** (-N), q, l)
            / q_pochhammer_finite(q, q, l)
            * q_pochhammer_finite(1 / z, q, l)
        )
        total = total + a ** (N - l) * coeff
    return total
