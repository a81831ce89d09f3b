"""Compare closed forms with brute-force oracles."""
from fractions import Fraction

from betaqt import eval_numeric, jack, jack_average, macdonald, macdonald_average
from betaqt import oracle

spec = oracle.LatticeSpec(Fraction(1, 2), 2, Fraction(-3, 4), 2, 60)
for kappa in [(1,), (2,), (1, 1), (2, 1)]:
    numeric = oracle.jackson_average(macdonald(kappa), spec)
    exact = eval_numeric(macdonald_average(kappa), spec.bindings())
    print(kappa, float(numeric), float(exact), "rel err", float(abs(numeric / exact - 1)))

g = oracle.GaussianSpec(3, 4)
for kappa in [(2,), (1, 1), (4,), (2, 2)]:
    got = oracle.gaussian_average_exact(jack(kappa), g)
    want = eval_numeric(jack_average(kappa), {"alpha": g.alpha, "N": 3})
    print(kappa, got, want)
