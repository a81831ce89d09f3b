"""Integer partitions: diagrams, conjugates, orders and hook products.

A partition is a plain tuple of weakly decreasing positive integers with no
trailing zeros; ``()`` is the empty partition.  Constraints such as "at most
N parts" are left to the caller.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

from .exactalg import ALPHA, ONE, Q, T, RatFunc, var

Partition = tuple[int, ...]
Cell = tuple[int, int]


def partition(parts) -> Partition:
    """Validate and normalise ``parts`` (trailing zeros are dropped)."""
    out = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(x < y for x, y in zip(out, out[1:])):
        raise ValueError(f"parts of {parts!r} are not weakly decreasing")
    return out


def parse_partition(text: str) -> Partition:
    """Read the literal syntax ``"3,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        return partition(parts)
    except ValueError as exc:
        raise ValueError(f"malformed partition literal {text!r}") from exc


def format_partition(kappa: Partition) -> str:
    return ",".join(str(p) for p in kappa)


def size(kappa: Partition) -> int:
    return sum(kappa)


def conjugate(kappa: Partition) -> Partition:
    if not kappa:
        return ()
    return tuple(sum(1 for p in kappa if p >= j) for j in range(1, kappa[0] + 1))


def cells(kappa: Partition) -> Iterator[Cell]:
    """Cells (i, j) of the diagram, 1-based, row by row."""
    for i, row in enumerate(kappa, start=1):
        for j in range(1, row + 1):
            yield i, j


def arm_leg(kappa: Partition, s: Cell) -> tuple[int, int]:
    i, j = s
    if i < 1 or j < 1 or i > len(kappa) or j > kappa[i - 1]:
        raise ValueError(f"cell {s} is not in the diagram of {kappa}")
    return kappa[i - 1] - j, conjugate(kappa)[j - 1] - i


def _arm_legs(kappa: Partition) -> list[tuple[int, int, int, int]]:
    conj = conjugate(kappa)
    return [(i, j, kappa[i - 1] - j, conj[j - 1] - i) for i, j in cells(kappa)]


def n_stat(kappa: Partition) -> int:
    """n(kappa) = sum (i-1) kappa_i, checked against the column formula."""
    by_rows = sum(i * p for i, p in enumerate(kappa))
    by_cols = sum(c * (c - 1) // 2 for c in conjugate(kappa))
    if by_rows != by_cols:
        raise ArithmeticError(f"n-statistic mismatch for {kappa}: {by_rows} != {by_cols}")
    return by_rows


def dominance_leq(mu: Partition, kappa: Partition) -> bool:
    """True iff mu <= kappa in dominance order."""
    if size(mu) != size(kappa):
        raise ValueError(f"dominance needs equal sizes, got {mu} and {kappa}")
    s_mu = s_kappa = 0
    for i in range(max(len(mu), len(kappa))):
        s_mu += mu[i] if i < len(mu) else 0
        s_kappa += kappa[i] if i < len(kappa) else 0
        if s_mu > s_kappa:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, max_parts: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n with at most ``max_parts`` parts, reverse-lex (largest first).

    Reverse-lex order is a linear extension of dominance, so every partition
    appears after all partitions that dominate it.
    """
    if n < 0:
        raise ValueError("size must be non-negative")
    limit = n if max_parts is None else max_parts
    if limit < 0:
        raise ValueError("max_parts must be non-negative")

    def gen(rest: int, largest: int, slots: int):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first, slots - 1):
                yield (first,) + tail

    return tuple(gen(n, n, limit))


def multiplicities(kappa: Partition) -> dict[int, int]:
    return dict(sorted(Counter(kappa).items()))


def z_and_multiplicities(kappa: Partition) -> tuple[int, dict[int, int]]:
    f = multiplicities(kappa)
    return prod(j**m * factorial(m) for j, m in f.items()), f


def z_const(kappa: Partition) -> int:
    return z_and_multiplicities(kappa)[0]


@lru_cache(maxsize=None)
def hooks_jack(kappa: Partition) -> tuple[RatFunc, RatFunc]:
    """(h'_kappa, h_kappa) in alpha: upper and lower hook products."""
    upper = lower = ONE
    for _, _, a, l in _arm_legs(kappa):
        upper = upper * (ALPHA * (a + 1) + l)
        lower = lower * (ALPHA * a + l + 1)
    return upper, lower


@lru_cache(maxsize=None)
def hooks_qt(kappa: Partition) -> tuple[RatFunc, RatFunc]:
    """(h_kappa(q,t), h'_kappa(q,t)).

    Note the order: the lower product comes first, matching the usual
    q,t conventions where h is prod(1 - q^a t^(l+1)).
    """
    lower = upper = ONE
    for _, _, a, l in _arm_legs(kappa):
        lower = lower * (1 - Q**a * T ** (l + 1))
        upper = upper * (1 - Q ** (a + 1) * T**l)
    return lower, upper


def gen_pochhammer_alpha(u_sym: str | RatFunc, kappa: Partition) -> RatFunc:
    """[u]_kappa^(alpha) = prod_l prod_{i<kappa_l} (u - (l-1)/alpha + i)."""
    u = var(u_sym) if isinstance(u_sym, str) else u_sym
    out = ONE
    for l, row in enumerate(kappa, start=1):
        shift = u - (l - 1) / ALPHA
        for i in range(row):
            out = out * (shift + i)
    return out


def gen_pochhammer_qt(a_sym: str | RatFunc, kappa: Partition) -> RatFunc:
    """(a)_kappa^(q,t) as a product over cells, checked against the row form."""
    a = var(a_sym) if isinstance(a_sym, str) else a_sym
    by_cells = ONE
    for i, j in cells(kappa):
        by_cells = by_cells * (T ** (i - 1) - a * Q ** (j - 1))
    by_rows = T ** n_stat(kappa)
    for i, row in enumerate(kappa, start=1):
        x = a * T ** (1 - i)
        for k in range(row):
            by_rows = by_rows * (1 - x * Q**k)
    if by_cells != by_rows:
        raise ArithmeticError(f"(q,t) Pochhammer forms disagree for {kappa}")
    return by_cells


def chi_qt(kappa: Partition) -> RatFunc:
    """prod over cells (i,j) != (1,1) of (t^(i-1) - q^(j-1))."""
    out = ONE
    for i, j in cells(kappa):
        if (i, j) != (1, 1):
            out = out * (T ** (i - 1) - Q ** (j - 1))
    return out
