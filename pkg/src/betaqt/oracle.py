"""Brute-force evaluators that share no formulas with :mod:`betaqt.superint`.

* :func:`jackson_average` sums the discrete (q,t) density over the truncated
  q-lattice ``{q^i} U {a q^i}`` in each variable.
* :func:`gaussian_average_exact` integrates polynomial observables against
  the Gaussian beta density for beta in {2, 4} by monomial expansion.

Both work in exact rationals; the only approximation is the lattice
truncation.  Polynomials in x_1..x_N are plain dicts ``{exponents: Fraction}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .exactalg import RatFunc, eval_numeric
from .qseries import QSeriesContext, asc_weight, q_pochhammer_finite
from .symfunc import SymFunc

__all__ = [
    "LatticeSpec",
    "GaussianSpec",
    "UnsupportedConfiguration",
    "jackson_average",
    "jackson_total_mass",
    "jackson_normalisation",
    "kadell_equivalence_check",
    "gaussian_average_exact",
    "gaussian_partition_check",
]

Poly = dict[tuple[int, ...], Fraction]


class UnsupportedConfiguration(ValueError):
    pass


@dataclass(frozen=True)
class LatticeSpec:
    q: Fraction = Fraction(1, 2)
    m: int = 1
    a: Fraction = Fraction(-3, 4)
    N: int = 1
    depth: int = 60
    symmetrized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "a", Fraction(self.a))
        if not 0 < self.q < 1:
            raise ValueError("need 0 < q < 1")
        if self.a >= 0:
            raise ValueError("need a < 0")
        if self.m < 1 or self.N < 1 or self.depth < 1:
            raise ValueError("m, N and depth must be positive")

    @property
    def t(self) -> Fraction:
        return self.q**self.m

    def bindings(self) -> dict[str, Fraction]:
        """Numeric values for the symbolic variables, with u = t^N."""
        return {"q": self.q, "t": self.t, "a": self.a, "u": self.t**self.N}


@dataclass(frozen=True)
class GaussianSpec:
    N: int
    beta: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.beta not in (2, 4):
            raise UnsupportedConfiguration(f"beta={self.beta}: only beta in {{2, 4}} keeps |Delta|^beta polynomial")

    @property
    def alpha(self) -> Fraction:
        return Fraction(2, self.beta)


# ---------------------------------------------------------------------------
# polynomials in N variables

def _mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _add(f: Poly, g: Poly, scale=1) -> Poly:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


def _one(n: int) -> Poly:
    return {(0,) * n: Fraction(1)}


def _linear(n: int, i: int, j: int, cj: Fraction) -> Poly:
    """x_i - cj * x_j."""
    ei = tuple(int(k == i) for k in range(n))
    ej = tuple(int(k == j) for k in range(n))
    return {ei: Fraction(1), ej: -Fraction(cj)}


def _powersum(n: int, k: int) -> Poly:
    return {tuple(k if l == i else 0 for l in range(n)): Fraction(1) for i in range(n)}


def _symfunc_poly(f: SymFunc, n: int, values: dict[str, Fraction]) -> Poly:
    """Expand f in x_1..x_n with its coefficients evaluated at ``values``."""
    out: Poly = {}
    cache: dict[int, Poly] = {}
    for lam, c in f.items():
        term = _one(n)
        for part in lam:
            if part not in cache:
                cache[part] = _powersum(n, part)
            term = _mul(term, cache[part])
        coeff = eval_numeric(c, values)
        out = _add(out, term, coeff)
    return out


def _evaluate(f: Poly, x: tuple) -> Fraction:
    return sum((c * prod(xi**e for xi, e in zip(x, exps)) for exps, c in f.items()), Fraction(0))


# ---------------------------------------------------------------------------
# Jackson lattice

def _interaction(spec: LatticeSpec) -> Poly:
    n, q, m = spec.N, spec.q, spec.m
    shifts = range(-(m - 1), m) if spec.symmetrized else range(-(m - 1), m + 1)
    out = _one(n)
    for i, j in itertools.combinations(range(n), 2):
        if spec.symmetrized:
            out = _mul(out, _linear(n, i, j, Fraction(1)))
        for p in shifts:
            out = _mul(out, _linear(n, i, j, q**p))
    return out


@lru_cache(maxsize=64)
def _lattice(q: Fraction, a: Fraction, depth: int) -> tuple[tuple[Fraction, Fraction], ...]:
    """(point, Jackson mass) for each lattice point of one variable."""
    ctx = QSeriesContext(depth)
    points = []
    for i in range(depth):
        x = q**i
        points.append((x, (1 - q) * q**i * asc_weight(x, ctx, a, q)))
    for i in range(depth):
        x = a * q**i
        points.append((x, (1 - q) * (-a) * q**i * asc_weight(x, ctx, a, q)))
    for x, w in points:
        if w < 0:
            raise ArithmeticError(f"negative one-variable mass at x={x}")
    return tuple(points)


@lru_cache(maxsize=256)
def _lattice_moment(q: Fraction, a: Fraction, depth: int, k: int) -> Fraction:
    return sum((w * x**k for x, w in _lattice(q, a, depth)), Fraction(0))


def _integrate_moments(integrand: Poly, spec: LatticeSpec) -> Fraction:
    total = Fraction(0)
    for exps, c in integrand.items():
        total += c * prod(_lattice_moment(spec.q, spec.a, spec.depth, e) for e in exps)
    return total


def _integrate_direct(integrand_f: Poly, spec: LatticeSpec) -> Fraction:
    inter = _interaction(spec)
    total = Fraction(0)
    for combo in itertools.product(_lattice(spec.q, spec.a, spec.depth), repeat=spec.N):
        x = tuple(p for p, _ in combo)
        mass = prod((w for _, w in combo), start=Fraction(1)) * _evaluate(inter, x)
        if mass < 0:
            raise ArithmeticError(f"negative lattice mass at {x}")
        if mass:
            total += mass * _evaluate(integrand_f, x)
    return total


def _unnormalised(f: SymFunc | None, spec: LatticeSpec, method: str) -> Fraction:
    fpoly = _one(spec.N) if f is None else _symfunc_poly(f, spec.N, spec.bindings())
    if method == "direct":
        return _integrate_direct(fpoly, spec)
    if method == "moments":
        return _integrate_moments(_mul(fpoly, _interaction(spec)), spec)
    raise ValueError(f"unknown method {method!r}")


def jackson_average(f: SymFunc, spec: LatticeSpec, method: str = "moments") -> Fraction:
    """Average of the symmetric function f over the truncated lattice density.

    ``method="direct"`` enumerates all (2*depth)^N lattice tuples;
    ``method="moments"`` expands the polynomial integrand and factorises the
    same finite sum into one-variable lattice moments.  Both give the same
    rational number.
    """
    return _unnormalised(f, spec, method) / _unnormalised(None, spec, method)


def jackson_total_mass(spec: LatticeSpec, method: str = "moments") -> Fraction:
    return _unnormalised(None, spec, method)


def jackson_normalisation(spec: LatticeSpec) -> Fraction:
    """Closed-form total mass of the (unsymmetrised) lattice density."""
    q, m, n, a = spec.q, spec.m, spec.N, spec.a
    # t^(m C(N,3) - (m-1)/2 C(N,2)) with t = q^m, as an integral power of q
    q_exp = m * m * comb(n, 3) - m * (m - 1) * comb(n, 2) // 2
    out = (1 - q) ** n * (-a) ** (m * n * (n - 1) // 2) * q**q_exp
    for l in range(1, n + 1):
        out *= q_pochhammer_finite(q, q, m * l) / q_pochhammer_finite(q, q, m)
    return out


def kadell_equivalence_check(f: SymFunc, spec: LatticeSpec, rel_tol: Fraction = Fraction(1, 10**9)) -> bool:
    plain = jackson_average(f, LatticeSpec(spec.q, spec.m, spec.a, spec.N, spec.depth, False))
    sym = jackson_average(f, LatticeSpec(spec.q, spec.m, spec.a, spec.N, spec.depth, True))
    return _close(plain, sym, rel_tol)


def _close(x: Fraction, y: Fraction, rel_tol: Fraction) -> bool:
    scale = max(abs(x), abs(y))
    return abs(x - y) <= rel_tol * scale if scale else True


# ---------------------------------------------------------------------------
# Gaussian beta ensemble

def _double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def _gauss_moment(e: int, beta: int) -> Fraction:
    """int x^e exp(-beta x^2 / 2) dx in units of sqrt(2 pi / beta)."""
    if e % 2:
        return Fraction(0)
    return Fraction(_double_factorial(e - 1), beta ** (e // 2))


@lru_cache(maxsize=None)
def _vandermonde_power(n: int, beta: int) -> tuple:
    out = _one(n)
    for i, j in itertools.combinations(range(n), 2):
        for _ in range(beta):
            out = _mul(out, _linear(n, i, j, Fraction(1)))
    return tuple(out.items())


def _gauss_integral(poly: Poly, beta: int) -> Fraction:
    return sum((c * prod(_gauss_moment(e, beta) for e in exps) for exps, c in poly.items()), Fraction(0))


def gaussian_average_exact(f: SymFunc, spec: GaussianSpec) -> Fraction:
    """Exact average of f under prod|x_i - x_j|^beta prod exp(-beta x_l^2 / 2)."""
    weight = dict(_vandermonde_power(spec.N, spec.beta))
    fpoly = _symfunc_poly(f, spec.N, {"alpha": spec.alpha})
    return _gauss_integral(_mul(fpoly, weight), spec.beta) / _gauss_integral(weight, spec.beta)


def gaussian_partition_check(spec: GaussianSpec) -> bool:
    """Compare the exact normalisation with its Gamma-function closed form.

    Both sides carry the common factor (2 pi / beta)^(N/2), which is divided out.
    """
    n, beta = spec.N, spec.beta
    integral = _gauss_integral(dict(_vandermonde_power(n, beta)), beta)
    closed = Fraction(1, beta ** (n * beta * (n - 1) // 4))
    half = beta // 2
    for j in range(n):
        closed *= Fraction(factorial((j + 1) * half), factorial(half))
    return integral == closed
