"""Exact rational functions over Q in a fixed set of indeterminates.

A :class:`RatFunc` is a pair of integer-coefficient multivariate polynomials
(FLINT ``fmpz_mpoly``) kept in canonical form:

* numerator and denominator share no polynomial factor and no integer content,
* the leading coefficient of the denominator under graded-lex order is positive.

Two values are therefore mathematically equal iff they are structurally
equal.  The string format (``str`` / :func:`parse`) is the payload of every
JSON and CSV output, e.g. ``(1 + a - u - a*u)/(1 - t)`` up to sign
normalisation.
"""

from __future__ import annotations

from fractions import Fraction
from tokenize import TokenError
from typing import Mapping, Union

import sympy
from flint import fmpz, fmpz_mpoly, fmpz_mpoly_ctx
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

__all__ = [
    "VARIABLES",
    "MultiPoly",
    "RatFunc",
    "PoleError",
    "arith",
    "substitute",
    "eval_numeric",
    "parse",
    "var",
    "ALPHA",
    "Q",
    "T",
    "A",
    "U",
    "N",
    "Z",
    "ZERO",
    "ONE",
]

#: Fixed indeterminates.  ``u`` stands for t**N; ``z`` is the spectral
#: variable of the characteristic polynomial.
VARIABLES = ("alpha", "q", "t", "a", "u", "N", "z")

_CTX = fmpz_mpoly_ctx.get(VARIABLES, "deglex")
_GENS = _CTX.gens()
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_P0 = _CTX.from_dict({})
_P1 = _CTX.from_dict({(0,) * _NVARS: 1})

MultiPoly = fmpz_mpoly
Scalar = Union[int, Fraction]


class PoleError(ZeroDivisionError):
    """A denominator vanished, identically or at a point."""


def _const(c: int) -> fmpz_mpoly:
    return _CTX.from_dict({(0,) * _NVARS: c}) if c else _P0


def _normalize(num: fmpz_mpoly, den: fmpz_mpoly) -> tuple[fmpz_mpoly, fmpz_mpoly]:
    if den.is_zero():
        raise PoleError("zero denominator")
    if num.is_zero():
        return _P0, _P1
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


class RatFunc:
    """Immutable exact rational function in :data:`VARIABLES`."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value: object = 0):
        if isinstance(value, RatFunc):
            self.num, self.den = value.num, value.den
        elif isinstance(value, bool):
            raise TypeError("bool is not a coefficient")
        elif isinstance(value, (int, fmpz)):
            self.num, self.den = _const(int(value)), _P1
        elif isinstance(value, Fraction):
            self.num, self.den = _const(value.numerator), _const(value.denominator)
        elif isinstance(value, str):
            other = parse(value)
            self.num, self.den = other.num, other.den
        else:
            raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")
        self._hash = None

    @classmethod
    def _raw(cls, num: fmpz_mpoly, den: fmpz_mpoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num: fmpz_mpoly, den: fmpz_mpoly | None = None) -> "RatFunc":
        return cls._raw(*_normalize(num, _P1 if den is None else den))

    # -- predicates and inspection --------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def variables(self) -> set[str]:
        found = [False] * _NVARS
        for poly in (self.num, self.den):
            for m in poly.monoms():
                for i, e in enumerate(m):
                    if e:
                        found[i] = True
        return {VARIABLES[i] for i in range(_NVARS) if found[i]}

    def degree(self, name: str) -> int:
        """Degree in ``name``; the value must be polynomial in ``name``."""
        i = _INDEX[name]
        if self.den.degrees()[i]:
            raise ValueError(f"not polynomial in {name}")
        return int(self.num.degrees()[i]) if not self.is_zero() else -1

    def coefficients(self, name: str) -> dict[int, "RatFunc"]:
        """Coefficients of the powers of ``name`` (value must be polynomial in it)."""
        i = _INDEX[name]
        if self.den.degrees()[i]:
            raise ValueError(f"not polynomial in {name}")
        parts: dict[int, dict] = {}
        for m, c in self.num.terms():
            mm = m[:i] + (0,) + m[i + 1 :]
            parts.setdefault(int(m[i]), {})[mm] = c
        return {k: RatFunc.from_polys(_CTX.from_dict(d), self.den) for k, d in sorted(parts.items())}

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if self.is_zero():
            return Fraction(0)
        return Fraction(int(self.num.leading_coefficient()), int(self.den.leading_coefficient()))

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, fmpz)) and not isinstance(other, bool):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return RatFunc.from_polys(self.num + o.num, self.den)
        g = self.den.gcd(o.den)
        if g.is_one():
            return RatFunc.from_polys(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den / g, o.den / g
        return RatFunc.from_polys(self.num * d2 + o.num * d1, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        a, d = (self.num / g1, o.den / g1) if not g1.is_one() else (self.num, o.den)
        c, b = (o.num / g2, self.den / g2) if not g2.is_one() else (o.num, self.den)
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise PoleError("division by zero rational function")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        if n == 0:
            return ONE
        num, den = base.num**n, base.den**n
        return RatFunc._raw(num, den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num.terms()), tuple(self.den.terms())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- text -----------------------------------------------------------

    def __str__(self):
        num = _poly_str(self.num)
        if self.den.is_one():
            return num
        den = _poly_str(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1 or not self.den.is_constant():
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFunc('{self}')"

    def as_expr(self) -> sympy.Expr:
        """sympy expression, e.g. for ``sympy.factor`` when displaying results."""
        return parse_expr(str(self).replace("^", "**"), local_dict=dict(_SYMBOLS))


def _monomial_str(m) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _poly_str(poly: fmpz_mpoly) -> str:
    if poly.is_zero():
        return "0"
    # ascending total degree reads naturally: 1 - q - t + q*t
    terms = sorted(poly.terms(), key=lambda mc: (sum(mc[0]), tuple(-e for e in mc[0])))
    out = []
    for i, (m, c) in enumerate(terms):
        c = int(c)
        mono = _monomial_str(m)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)


_SYMBOLS = {name: sympy.Symbol(name) for name in VARIABLES}
_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication)


def _from_expr(expr) -> RatFunc:
    if expr.is_Symbol:
        return var(expr.name)
    if expr.is_Integer:
        return RatFunc(int(expr))
    if expr.is_Rational:
        return RatFunc(Fraction(int(expr.p), int(expr.q)))
    if expr.is_Add:
        total = ZERO
        for arg in expr.args:
            total = total + _from_expr(arg)
        return total
    if expr.is_Mul:
        total = ONE
        for arg in expr.args:
            total = total * _from_expr(arg)
        return total
    if expr.is_Pow and expr.exp.is_Integer:
        return _from_expr(expr.base) ** int(expr.exp)
    raise ValueError(f"not a rational function: {expr}")


def parse(text: str) -> RatFunc:
    """Inverse of ``str``; also accepts ``**``, ``α`` and implicit products."""
    text = text.replace("α", "alpha")
    try:
        expr = parse_expr(text, local_dict=dict(_SYMBOLS), transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, TokenError) as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    unknown = {s.name for s in expr.free_symbols} - set(VARIABLES)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)} in {text!r}")
    if expr.has(sympy.zoo, sympy.nan):
        raise PoleError(f"{text!r} has a vanishing denominator")
    return _from_expr(expr)


def var(name: str) -> RatFunc:
    return RatFunc._raw(_GENS[_INDEX[name]], _P1)


ALPHA, Q, T, A, U, N, Z = (var(n) for n in VARIABLES)
ZERO = RatFunc(0)
ONE = RatFunc(1)


def arith(x: RatFunc, y: RatFunc, op: str) -> RatFunc:
    """Field operation ``op`` in {add, sub, mul, div}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def substitute(f: RatFunc, bindings: Mapping[str, object]) -> RatFunc:
    """Simultaneously replace variables by rational functions."""
    unknown = set(bindings) - set(_INDEX)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)}")
    images = [RatFunc(bindings[n]) if n in bindings else None for n in VARIABLES]
    top = [int(max(a, b)) for a, b in zip(f.num.degrees(), f.den.degrees())]
    # n_i^e * d_i^(top_i - e) keeps everything polynomial; the common factor
    # prod d_i^top_i cancels between numerator and denominator
    tables = []
    for i, g in enumerate(images):
        if g is None or not top[i]:
            tables.append(None)
            continue
        n_pows, d_pows = [_P1], [_P1]
        for _ in range(top[i]):
            n_pows.append(n_pows[-1] * g.num)
            d_pows.append(d_pows[-1] * g.den)
        tables.append((n_pows, d_pows))

    def image(poly: fmpz_mpoly) -> fmpz_mpoly:
        total = _P0
        for m, c in poly.terms():
            m = tuple(int(e) for e in m)
            kept = tuple(0 if tables[i] else e for i, e in enumerate(m))
            term = _CTX.from_dict({kept: c})
            for i, e in enumerate(m):
                if tables[i]:
                    n_pows, d_pows = tables[i]
                    term = term * n_pows[e] * d_pows[top[i] - e]
            total = total + term
        return total

    den = image(f.den)
    if den.is_zero():
        raise PoleError(f"denominator of {f} vanishes under {dict(bindings)}")
    return RatFunc.from_polys(image(f.num), den)


def _eval_poly(poly: fmpz_mpoly, point: list[Fraction]) -> Fraction:
    total = Fraction(0)
    for m, c in poly.terms():
        term = Fraction(int(c))
        for x, e in zip(point, m):
            if e:
                term *= x ** int(e)
        total += term
    return total


def eval_numeric(f: RatFunc, bindings: Mapping[str, Scalar]) -> Fraction:
    """Exact value of ``f`` at a rational point."""
    missing = f.variables() - set(bindings)
    if missing:
        raise ValueError(f"unbound variables {sorted(missing)}")
    point = [Fraction(bindings.get(n, 0)) for n in VARIABLES]
    den = _eval_poly(f.den, point)
    if den == 0:
        raise PoleError(f"{f} has a pole at {dict(bindings)}")
    return _eval_poly(f.num, point) / den
