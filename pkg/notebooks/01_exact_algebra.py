"""Exact rational functions: build, simplify, substitute, evaluate."""
from fractions import Fraction

from betaqt import eval_numeric, parse, substitute
from betaqt.exactalg import Q, T

f = (1 - Q * T) / (1 - T)
g = parse("(1 - t^2)/(1 - q*t)")
print("f * g =", f * g)                      # (1 - t) cancels automatically
print("f(q -> t) =", substitute(f, {"q": T}))
print("f at q=1/2, t=1/3:", eval_numeric(f, {"q": Fraction(1, 2), "t": Fraction(1, 3)}))
