"""Jack and Macdonald polynomials in the power-sum basis, and their norms."""
from betaqt import jack, macdonald
from betaqt.partitions import hooks_jack, hooks_qt
from betaqt.symfunc import scalar_product_jack, scalar_product_qt

for kappa in [(2,), (1, 1), (2, 1)]:
    print("J", kappa, "=", jack(kappa))
    upper, lower = hooks_jack(kappa)
    assert scalar_product_jack(jack(kappa), jack(kappa)) == upper / lower

P = macdonald((2, 1))
lower, upper = hooks_qt((2, 1))
print("<P_21, P_21>_qt =", scalar_product_qt(P, P))
assert scalar_product_qt(P, P) == upper / lower
