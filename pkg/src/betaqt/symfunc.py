"""Symmetric functions in the power-sum basis.

A :class:`SymFunc` is a homogeneous element of the symmetric-function ring
over the :class:`~betaqt.exactalg.RatFunc` field, stored as a map from
partitions to coefficients of ``p_lambda = p_{lambda_1} p_{lambda_2} ...``.
The p_k are algebraically independent here; finite-alphabet relations only
appear through :func:`evaluate_alphabet` and :func:`to_monomial`.

Jack and Macdonald polynomials are built by Gram--Schmidt on the monomial
basis, processed along a linear extension of dominance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Sequence

from .exactalg import ALPHA, ONE, Q, T, ZERO, RatFunc, parse, substitute
from .partitions import (
    Partition,
    chi_qt,
    dominance_leq,
    format_partition,
    hooks_jack,
    hooks_qt,
    parse_partition,
    partitions_of,
    size,
    z_const,
)

__all__ = [
    "SymFunc",
    "Specialization",
    "monomial_to_powersum",
    "to_monomial",
    "scalar_product_jack",
    "scalar_product_qt",
    "gram_schmidt",
    "jack",
    "schur",
    "macdonald",
    "specialize",
    "coefficient",
    "omega_qt",
    "omega_c_jack",
    "evaluate_alphabet",
    "powersum_in_schur",
    "powersum_in_jack",
    "powersum_in_macdonald",
    "principal",
    "swap_qt",
]


class SymFunc:
    """Homogeneous symmetric function ``sum_lambda c_lambda p_lambda``."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Partition, object] | None = None):
        self.degree = degree
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if size(lam) != degree:
                raise ValueError(f"p_{lam} is not of degree {degree}")
            c = c if isinstance(c, RatFunc) else RatFunc(c)
            if not c.is_zero():
                clean[lam] = c
        self._coeffs = dict(sorted(clean.items(), reverse=True))

    @classmethod
    def p(cls, lam: Partition, coeff: object = 1) -> "SymFunc":
        lam = tuple(sorted(lam, reverse=True))
        return cls(size(lam), {lam: coeff})

    @property
    def coeffs(self) -> dict[Partition, RatFunc]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, lam: Partition) -> RatFunc:
        return self._coeffs.get(tuple(lam), ZERO)

    def __len__(self):
        return len(self._coeffs)

    def _check(self, other: "SymFunc"):
        if self.degree != other.degree and self._coeffs and other._coeffs:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check(other)
        out = dict(self._coeffs)
        for lam, c in other.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(max(self.degree, other.degree) if out else self.degree, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.degree, {lam: -c for lam, c in self.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            out: dict[Partition, RatFunc] = {}
            for lam, c in self.items():
                for mu, d in other.items():
                    key = tuple(sorted(lam + mu, reverse=True))
                    out[key] = out.get(key, ZERO) + c * d
            return SymFunc(self.degree + other.degree, out)
        return SymFunc(self.degree, {lam: c * other for lam, c in self.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "SymFunc":
        return SymFunc(self.degree, {lam: c / scalar for lam, c in self.items()})

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if not self._coeffs and not other._coeffs:
            return True
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, tuple(self._coeffs.items())))

    def is_zero(self) -> bool:
        return not self._coeffs

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "SymFunc":
        return SymFunc(self.degree, {lam: fn(c) for lam, c in self.items()})

    def substitute(self, bindings: Mapping[str, object]) -> "SymFunc":
        return self.map_coeffs(lambda c: substitute(c, bindings))

    def __repr__(self):
        body = " + ".join(f"({c})*p[{format_partition(lam)}]" for lam, c in self.items())
        return f"SymFunc({self.degree}: {body or '0'})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "powersum",
            "terms": [
                {"partition": format_partition(lam), "coeff": str(c)}
                for lam, c in sorted(self.items(), key=lambda kv: kv[0], reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        if data.get("basis", "powersum") != "powersum":
            raise ValueError(f"unsupported basis {data.get('basis')!r}")
        coeffs = {parse_partition(t["partition"]): parse(t["coeff"]) for t in data["terms"]}
        return cls(int(data["degree"]), coeffs)


# ---------------------------------------------------------------------------
# monomial <-> power sum

def _count_maps(lam: Partition, mu: Partition) -> int:
    """Coefficient of m_mu in p_lam: maps from parts of lam to rows of mu with matching sums."""

    @lru_cache(maxsize=None)
    def go(k: int, remaining: tuple[int, ...]) -> int:
        if k == len(lam):
            return int(not any(remaining))
        total = 0
        for i, r in enumerate(remaining):
            if r >= lam[k]:
                total += go(k + 1, remaining[:i] + (r - lam[k],) + remaining[i + 1 :])
        return total

    return go(0, tuple(mu))


@lru_cache(maxsize=None)
def _p_to_m(degree: int) -> dict[Partition, dict[Partition, int]]:
    parts = partitions_of(degree)
    return {lam: {mu: c for mu in parts if (c := _count_maps(lam, mu))} for lam in parts}


@lru_cache(maxsize=None)
def _m_to_p(degree: int) -> dict[Partition, dict[Partition, Fraction]]:
    # p_lam = sum_{mu >= lam} R[lam][mu] m_mu is triangular along reverse-lex order
    table = _p_to_m(degree)
    inverse: dict[Partition, dict[Partition, Fraction]] = {}
    for lam in partitions_of(degree):
        row = table[lam]
        expansion: dict[Partition, Fraction] = {lam: Fraction(1)}
        for mu, c in row.items():
            if mu == lam:
                continue
            for nu, d in inverse[mu].items():
                expansion[nu] = expansion.get(nu, Fraction(0)) - c * d
        diag = row[lam]
        inverse[lam] = {nu: v / diag for nu, v in expansion.items() if v}
    return inverse


def monomial_to_powersum(mu: Partition) -> SymFunc:
    """m_mu expanded in power sums."""
    mu = tuple(mu)
    return SymFunc(size(mu), dict(_m_to_p(size(mu))[mu]))


def to_monomial(f: SymFunc) -> dict[Partition, RatFunc]:
    """Coefficients of f in the monomial basis."""
    table = _p_to_m(f.degree)
    out: dict[Partition, RatFunc] = {}
    for lam, c in f.items():
        for mu, r in table[lam].items():
            out[mu] = out.get(mu, ZERO) + c * r
    return {mu: c for mu, c in sorted(out.items(), reverse=True) if not c.is_zero()}


# ---------------------------------------------------------------------------
# scalar products

def _jack_weight(lam: Partition) -> RatFunc:
    return ALPHA ** len(lam) * z_const(lam)


def _qt_weight(lam: Partition) -> RatFunc:
    w = RatFunc(z_const(lam))
    for part in lam:
        w = w * (1 - Q**part) / (1 - T**part)
    return w


_WEIGHTS: dict[str, Callable[[Partition], RatFunc]] = {"jack": _jack_weight, "qt": _qt_weight}


@lru_cache(maxsize=None)
def _weight(kind: str, lam: Partition) -> RatFunc:
    return _WEIGHTS[kind](lam)


def _scalar(kind: str, f: SymFunc, g: SymFunc) -> RatFunc:
    if f.degree != g.degree:
        return ZERO
    total = ZERO
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    for lam, c in small.items():
        d = big[lam]
        if not d.is_zero():
            total = total + c * d * _weight(kind, lam)
    return total


def scalar_product_jack(f: SymFunc, g: SymFunc) -> RatFunc:
    """<<p_k, p_m>> = alpha^l(k) z_k delta."""
    return _scalar("jack", f, g)


def scalar_product_qt(f: SymFunc, g: SymFunc) -> RatFunc:
    """<<p_k, p_m>> = z_k prod (1-q^k_l)/(1-t^k_l) delta."""
    return _scalar("qt", f, g)


# ---------------------------------------------------------------------------
# Gram--Schmidt

def gram_schmidt(
    degree: int,
    inner: Callable[[SymFunc, SymFunc], RatFunc],
    order: Sequence[Partition] | None = None,
    dominance_only: bool = True,
) -> dict[Partition, SymFunc]:
    """Orthogonalise the monomial basis of ``degree``.

    ``order`` lists partitions largest first and must be a linear extension
    of dominance (default: reverse-lex).  Each m_kappa has its projections
    removed onto already-built polynomials, restricted to strictly
    dominance-smaller partitions unless ``dominance_only`` is false.
    """
    order = tuple(order) if order is not None else partitions_of(degree)
    built: dict[Partition, SymFunc] = {}
    norms: dict[Partition, RatFunc] = {}
    for kappa in reversed(order):
        m = monomial_to_powersum(kappa)
        v = m
        for mu, P in built.items():
            if dominance_only and not dominance_leq(mu, kappa):
                continue
            c = inner(m, P)
            if not c.is_zero():
                v = v - P * (c / norms[mu])
        built[kappa] = v
        norms[kappa] = inner(v, v)
    return {kappa: built[kappa] for kappa in order}


@lru_cache(maxsize=None)
def _jack_basis(degree: int) -> dict[Partition, SymFunc]:
    return gram_schmidt(degree, scalar_product_jack)


@lru_cache(maxsize=None)
def _macdonald_basis(degree: int) -> dict[Partition, SymFunc]:
    return gram_schmidt(degree, scalar_product_qt)


def jack(kappa: Partition) -> SymFunc:
    """Jack polynomial P_kappa^(alpha) in power sums, over Q(alpha)."""
    kappa = tuple(kappa)
    if not kappa:
        return SymFunc(0, {(): 1})
    return _jack_basis(size(kappa))[kappa]


def schur(kappa: Partition) -> SymFunc:
    """Schur function, i.e. the Jack polynomial at alpha = 1."""
    return jack(kappa).substitute({"alpha": 1})


def macdonald(kappa: Partition) -> SymFunc:
    """Macdonald polynomial P_kappa(q, t) in power sums, over Q(q, t)."""
    kappa = tuple(kappa)
    if not kappa:
        return SymFunc(0, {(): 1})
    return _macdonald_basis(size(kappa))[kappa]


def swap_qt(f: SymFunc) -> SymFunc:
    """Exchange the roles of q and t in every coefficient."""
    return f.substitute({"q": T, "t": Q})


# ---------------------------------------------------------------------------
# specializations

@dataclass(frozen=True)
class Specialization:
    """Substitution rule ``p_k -> rule(k)``; ``rule`` is a mapping or a callable."""

    rule: Mapping[int, RatFunc] | Callable[[int], object]
    name: str = ""

    def __call__(self, k: int) -> RatFunc:
        if callable(self.rule):
            return RatFunc(self.rule(k))
        if k not in self.rule:
            raise KeyError(f"specialization {self.name or self.rule!r} has no rule for p_{k}")
        return RatFunc(self.rule[k])


def principal(u: RatFunc) -> Specialization:
    """p_k -> (1 - u^k)/(1 - t^k); at u = t^N this is the alphabet (1, t, ..., t^(N-1))."""
    return Specialization(lambda k: (1 - u**k) / (1 - T**k), name=f"principal({u})")


def specialize(f: SymFunc, s: Specialization) -> RatFunc:
    values: dict[int, RatFunc] = {}
    total = ZERO
    for lam, c in f.items():
        term = c
        for part in lam:
            if part not in values:
                values[part] = s(part)
            term = term * values[part]
        total = total + term
    return total


def coefficient(f: SymFunc, lam: Partition) -> RatFunc:
    lam = tuple(sorted(lam, reverse=True))
    if size(lam) != f.degree:
        return ZERO
    return f[lam]


def omega_qt(f: SymFunc) -> SymFunc:
    """Macdonald automorphism: p_k -> (-1)^(k-1) (1-q^k)/(1-t^k) p_k."""

    def factor(lam):
        w = RatFunc((-1) ** (size(lam) - len(lam)))
        for part in lam:
            w = w * (1 - Q**part) / (1 - T**part)
        return w

    return SymFunc(f.degree, {lam: c * factor(lam) for lam, c in f.items()})


def omega_c_jack(f: SymFunc, c) -> SymFunc:
    """p_lambda -> c^l(lambda) p_lambda."""
    c = RatFunc(c)
    return SymFunc(f.degree, {lam: d * c ** len(lam) for lam, d in f.items()})


def evaluate_alphabet(f: SymFunc, xs: Iterable) -> RatFunc:
    xs = [RatFunc(x) for x in xs]
    return specialize(f, Specialization(lambda k: sum((x**k for x in xs), ZERO), name="alphabet"))


# ---------------------------------------------------------------------------
# power sums in distinguished bases

def powersum_in_schur(j: int, N: int) -> list[tuple[int, Partition]]:
    """p_j = sum_r (-1)^r s_(j-r, 1^r), r < min(j, N)."""
    if j < 1:
        raise ValueError("j must be positive")
    return [((-1) ** r, (j - r,) + (1,) * r) for r in range(min(j - 1, N - 1) + 1)]


def _rising(x: RatFunc, n: int) -> RatFunc:
    return prod((x + i for i in range(n)), start=ONE)


@lru_cache(maxsize=None)
def powersum_in_jack(j: int, check: bool = True) -> dict[Partition, RatFunc]:
    """Coefficients u_kappa(alpha) with p_j = sum u_kappa P_kappa^(alpha)."""
    if j < 1:
        raise ValueError("j must be positive")
    out = {}
    for kappa in partitions_of(j):
        upper, _ = hooks_jack(kappa)
        u = j * ALPHA**j * factorial(kappa[0] - 1) / upper
        for s in range(2, len(kappa) + 1):
            u = u * _rising(-(s - 1) / ALPHA, kappa[s - 1])
        if not u.is_zero():
            out[kappa] = u
    if check:
        rebuilt = SymFunc(j)
        for kappa, u in out.items():
            rebuilt = rebuilt + jack(kappa) * u
        if rebuilt != SymFunc.p((j,)):
            raise ArithmeticError(f"Jack expansion of p_{j} does not reconstruct")
    return out


@lru_cache(maxsize=None)
def powersum_in_macdonald(j: int, check: bool = True) -> dict[Partition, RatFunc]:
    """Coefficients u_kappa(q,t) = (1-q^j) chi_kappa / h'_kappa with p_j = sum u_kappa P_kappa."""
    if j < 1:
        raise ValueError("j must be positive")
    out = {}
    for kappa in partitions_of(j):
        _, upper = hooks_qt(kappa)
        u = (1 - Q**j) * chi_qt(kappa) / upper
        if not u.is_zero():
            out[kappa] = u
    if check:
        rebuilt = SymFunc(j)
        for kappa, u in out.items():
            rebuilt = rebuilt + macdonald(kappa) * u
        if rebuilt != SymFunc.p((j,)):
            raise ArithmeticError(f"Macdonald expansion of p_{j} does not reconstruct")
    return out

