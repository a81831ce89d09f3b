"""Closed-form moments of the Gaussian beta-ensemble and the (q,t) ensemble."""
from betaqt import moment_gaussian_beta, moment_qt
from betaqt.superint import topological_expansion

for p in (1, 2, 3):
    print(f"<sum x^{2 * p}>_beta =", moment_gaussian_beta(p))
    print(f"  genus expansion at beta=2:", topological_expansion(p).at_alpha(1))
for p in (1, 2):
    print(f"<sum x^{p}>_qt =", moment_qt(p))
