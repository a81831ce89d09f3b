"""Superintegrability formulas and the identities that follow from them.

Gaussian beta side: averages live in Q(N, alpha) with N symbolic.
(q,t) side: averages live in Q(a, q, t, u) where u stands for t^N; integer N
is recovered by binding u = t^N.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .exactalg import ALPHA, A, N, ONE, Q, T, U, Z, ZERO, RatFunc, parse, substitute
from .partitions import (
    Partition,
    conjugate,
    gen_pochhammer_alpha,
    hooks_jack,
    hooks_qt,
    n_stat,
    partitions_of,
    size,
    z_and_multiplicities,
)
from .qseries import alsalam_carlitz_U
from .symfunc import (
    Specialization,
    SymFunc,
    coefficient,
    jack,
    macdonald,
    powersum_in_jack,
    powersum_in_macdonald,
    principal,
    specialize,
    to_monomial,
)
from . import oracle

__all__ = [
    "MomentTable",
    "TopologicalExpansion",
    "jack_average",
    "jack_normalised_average",
    "macdonald_average",
    "macdonald_normalised_average",
    "moment_gaussian_beta",
    "moment_qt",
    "moment_table",
    "functional_equation_check_qt",
    "functional_equation_check_gbe",
    "duality_check_jack",
    "duality_check_macdonald",
    "char_poly_average",
    "char_poly_check",
    "harer_zagier_moment",
    "topological_expansion",
    "hypergeom_check_qt",
    "hypergeom_check_jack",
    "odd_inverse_power_check",
    "SPEC_ONE_OVER",
    "SPEC_A",
]

SPEC_ONE_OVER = Specialization(lambda k: 1 / (1 - T**k), name="1/(1-t^k)")
SPEC_A = Specialization(lambda k: (1 + A**k) / (1 - T**k), name="(1+a^k)/(1-t^k)")
SPEC_N = Specialization(lambda k: N, name="N")

_QT_INVERT = {"q": 1 / T, "t": 1 / Q}


# ---------------------------------------------------------------------------
# result containers

@dataclass
class MomentTable:
    family: str
    entries: list[tuple[int, RatFunc]] = field(default_factory=list)
    provenance: str = ""

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "family": self.family,
            "provenance": self.provenance,
            "entries": [{"p": p, "value": str(v)} for p, v in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "MomentTable":
        return cls(
            data["family"],
            [(int(e["p"]), parse(e["value"])) for e in data["entries"]],
            data.get("provenance", ""),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "value"])
        for p, v in self.entries:
            writer.writerow([p, str(v)])
        return buf.getvalue()

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


@dataclass
class TopologicalExpansion:
    """2^p m_{N,2p} = sum_g coefficients[g] N^(p+1-g)."""

    p: int
    coefficients: dict[int, RatFunc]

    def at_alpha(self, alpha) -> dict[int, Fraction]:
        return {g: substitute(c, {"alpha": alpha}).to_fraction() for g, c in self.coefficients.items()}


# ---------------------------------------------------------------------------
# Gaussian beta ensemble

def jack_average(kappa: Partition) -> RatFunc:
    """<P_kappa^(alpha)> over the Gaussian beta ensemble, alpha = 2/beta, N symbolic."""
    kappa = tuple(kappa)
    n = size(kappa)
    if n % 2:
        return ZERO
    if n == 0:
        return ONE
    p2 = coefficient(jack(kappa), (2,) * (n // 2))
    return Fraction(1, 2 ** (n // 2)) * ALPHA**n * gen_pochhammer_alpha(N / ALPHA, kappa) * p2


def jack_normalised_average(kappa: Partition) -> RatFunc:
    """<P_kappa / P_kappa(1^N)>, which does not depend on N."""
    kappa = tuple(kappa)
    return jack_average(kappa) / specialize(jack(kappa), SPEC_N)


def moment_gaussian_beta(p: int) -> RatFunc:
    """m_{N,2p} = < sum_l x_l^(2p) > as a polynomial in N over Q(alpha)."""
    if p < 1:
        raise ValueError("p must be positive")
    total = ZERO
    for kappa, u in powersum_in_jack(2 * p).items():
        total = total + u * jack_average(kappa)
    return total


def functional_equation_check_gbe(p: int) -> bool:
    """m(N, alpha) = (-alpha)^(p+1) m(-N/alpha, 1/alpha)."""
    m = moment_gaussian_beta(p)
    dual = substitute(m, {"N": -N / ALPHA, "alpha": 1 / ALPHA})
    return m == (-ALPHA) ** (p + 1) * dual


def duality_check_jack(kappa: Partition) -> bool:
    """<P_k/P_k(1)>_alpha = (-alpha)^(|k|/2) <P_k'/P_k'(1)>_(1/alpha), both sides N-free."""
    kappa = tuple(kappa)
    n = size(kappa)
    lhs = jack_normalised_average(kappa)
    dual = jack_normalised_average(conjugate(kappa))
    if n % 2:
        return lhs.is_zero() and dual.is_zero()
    if "N" in lhs.variables() or "N" in dual.variables():
        return False
    rhs = (-ALPHA) ** (n // 2) * substitute(dual, {"alpha": 1 / ALPHA})
    return lhs == rhs


def harer_zagier_moment(p: int, N: int) -> Fraction:
    """GUE moment m_{N,2p} from the alternating sum, checked against coefficient extraction."""
    if p < 1 or N < 1:
        raise ValueError("need p, N >= 1")
    alternating = sum(
        (-1) ** s * comb(p - 1, s) * (comb(N + 2 * p - 2 * s - 1, 2 * p) + comb(N + 2 * p - 2 * s - 2, 2 * p))
        for s in range(p)
    )
    # [y^(p+1)] (1+y)^N (1-y)^(-N)
    series = sum(comb(N, i) * comb(N + p - i, p + 1 - i) for i in range(min(N, p + 1) + 1))
    if 2 * alternating != series:
        raise ArithmeticError(f"Harer-Zagier forms disagree at p={p}, N={N}")
    return Fraction(prod(range(2 * p - 1, 0, -2)) * alternating, 2**p)


def topological_expansion(p: int) -> TopologicalExpansion:
    """Genus coefficients E_g(p, alpha) of 2^p m_{N,2p}, with structural checks."""
    poly = 2**p * moment_gaussian_beta(p)
    by_power = poly.coefficients("N")
    if max(by_power) != p + 1 or 0 in by_power:
        raise ArithmeticError(f"2^{p} m is not of N-degree {p + 1} without constant term")
    coeffs = {}
    for g in range(p + 1):
        c = by_power.get(p + 1 - g, ZERO)
        if not c.is_polynomial() or (not c.is_zero() and c.degree("alpha") > p):
            raise ArithmeticError(f"E_{g}({p}, alpha) is not a polynomial of degree <= {p}")
        if not c.den.is_one():
            raise ArithmeticError(f"E_{g}({p}, alpha) has non-integer coefficients")
        coeffs[g] = c
    expansion = TopologicalExpansion(p, coeffs)
    at_one = expansion.at_alpha(1)
    if any(v for g, v in at_one.items() if g % 2):
        raise ArithmeticError("odd genus terms survive at alpha = 1")
    if at_one[0] != comb(2 * p, p) // (p + 1):
        raise ArithmeticError("leading coefficient is not the Catalan number")
    return expansion


def hypergeom_check_jack(degree: int, N_: int, alpha) -> bool:
    """Term-wise Gaussian average of 0F0(x; y) against exp(p_2(y)/2), through ``degree``.

    Averages come from the exact Gaussian oracle; the comparison is made in
    N variables (monomials with more than N parts dropped).
    """
    alpha = Fraction(alpha)
    beta = 2 / alpha
    if beta.denominator != 1:
        raise oracle.UnsupportedConfiguration(f"alpha={alpha} has no even beta")
    spec = oracle.GaussianSpec(N_, int(beta))
    bind = {"alpha": alpha}
    for k in range(1, degree + 1):
        lhs = SymFunc(k)
        for kappa in partitions_of(k, N_):
            P = jack(kappa).substitute(bind)
            upper, _ = hooks_jack(kappa)
            # the oracle density has exp(-beta x^2/2); rescale to exp(-x^2/2)
            avg = oracle.gaussian_average_exact(P, spec) * beta ** Fraction(k, 2) if k % 2 == 0 else Fraction(0)
            at_one = specialize(P, Specialization(lambda j: N_))
            lhs = lhs + P * (RatFunc(alpha**k * avg) / (substitute(upper, bind) * at_one))
        rhs = SymFunc.p((2,) * (k // 2), Fraction(1, 2 ** (k // 2) * factorial(k // 2))) if k % 2 == 0 else SymFunc(k)
        if not _equal_in_n_variables(lhs, rhs, N_):
            return False
    return True


# ---------------------------------------------------------------------------
# (q,t) ensemble

def macdonald_average(kappa: Partition) -> RatFunc:
    """<P_kappa(x; q, t)> as a rational function of (a, q, t, u = t^N)."""
    P = macdonald(tuple(kappa))
    return specialize(P, principal(U)) * specialize(P, SPEC_A) / specialize(P, SPEC_ONE_OVER)


def macdonald_normalised_average(kappa: Partition) -> RatFunc:
    """<P_kappa / P_kappa(1, t, ..., t^(N-1))>, which does not depend on u."""
    P = macdonald(tuple(kappa))
    return macdonald_average(kappa) / specialize(P, principal(U))


def moment_qt(p: int) -> RatFunc:
    """M_p(a, q, t, u) = < sum_l x_l^p >."""
    if p < 1:
        raise ValueError("p must be positive")
    total = ZERO
    for kappa, u in powersum_in_macdonald(p).items():
        total = total + u * macdonald_average(kappa)
    return total


def functional_equation_check_qt(p: int) -> bool:
    """M_p(a,q,t,u) = -q^(-p) (1-q^p)/(1-t^p) M_p(a, 1/t, 1/q, u)."""
    m = moment_qt(p)
    rhs = -(Q ** (-p)) * (1 - Q**p) / (1 - T**p) * substitute(m, _QT_INVERT)
    return m == rhs


def odd_inverse_power_check(p: int) -> bool:
    """At t = q: q^(p/2) M_p is odd under q -> 1/q (u fixed); checked squared-root free."""
    m = substitute(moment_qt(p), {"t": Q})
    return Q**p * m == -substitute(m, {"q": 1 / Q})


def duality_check_macdonald(kappa: Partition) -> bool:
    """Normalised averages of P_kappa(q,t) and P_kappa'(1/t, 1/q) agree, both free of u."""
    kappa = tuple(kappa)
    lhs = macdonald_normalised_average(kappa)
    dual = macdonald_normalised_average(conjugate(kappa))
    if "u" in lhs.variables() or "u" in dual.variables():
        return False
    return lhs == substitute(dual, _QT_INVERT)


def char_poly_average(N_: int) -> RatFunc:
    """< prod_l (z - x_l) > for N_ variables, from the averages of e_k = P_(1^k)."""
    if N_ < 0:
        raise ValueError("N must be non-negative")
    total = ZERO
    for k in range(N_ + 1):
        ek = substitute(macdonald_average((1,) * k), {"u": T**N_}) if k else ONE
        total = total + (-1) ** k * Z ** (N_ - k) * ek
    return total


def char_poly_check(N_: int) -> bool:
    """Averaged characteristic polynomial equals U_N^(a)(z; t) and carries no q."""
    avg = char_poly_average(N_)
    return "q" not in avg.variables() and avg == alsalam_carlitz_U(N_, "a", "z", "t")


def hypergeom_check_qt(degree: int, N_: int) -> bool:
    """Term-wise average of the (q,t) 0F0(x, y) against its closed form, through ``degree``.

    Symbolic in (a, q, t) with u = t^N; compared in N variables.
    """
    u_bind = {"u": T**N_}
    for k in range(1, degree + 1):
        lhs = SymFunc(k)
        for kappa in partitions_of(k, N_):
            P = macdonald(kappa)
            _, upper = hooks_qt(kappa)
            avg = substitute(macdonald_average(kappa), u_bind)
            at_principal = specialize(P, principal(T**N_))
            lhs = lhs + P * (T ** n_stat(kappa) * avg / (upper * at_principal))
        rhs = SymFunc(k)
        for lam in partitions_of(k):
            _, mult = z_and_multiplicities(lam)
            c = ONE
            for r, f in mult.items():
                c = c * ((1 + A**r) / ((1 - Q**r) * r)) ** f / factorial(f)
            rhs = rhs + SymFunc.p(lam, c)
        if not _equal_in_n_variables(lhs, rhs, N_):
            return False
    return True


def moment_table(family: str, max_p: int) -> MomentTable:
    if max_p < 1:
        raise ValueError("max_p must be positive")
    if family in ("gbeta", "gaussian_beta"):
        return MomentTable(
            "gaussian_beta",
            [(p, moment_gaussian_beta(p)) for p in range(1, max_p + 1)],
            "power sums in Jack polynomials + Gaussian superintegrability; value is m_{N,2p}",
        )
    if family == "qt":
        return MomentTable(
            "qt",
            [(p, moment_qt(p)) for p in range(1, max_p + 1)],
            "power sums in Macdonald polynomials + (q,t) superintegrability; u = t^N",
        )
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------

def _equal_in_n_variables(f: SymFunc, g: SymFunc, n: int) -> bool:
    """Equality as polynomials in n variables (monomials with > n parts vanish)."""
    diff = to_monomial(f - g)
    return all(len(mu) > n for mu in diff)
