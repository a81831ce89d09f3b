"""Exact superintegrability for the Gaussian beta and (q,t) Al-Salam--Carlitz ensembles.

Modules
-------
exactalg    exact multivariate rational functions (RatFunc)
partitions  partition combinatorics, hooks, generalized Pochhammer symbols
qseries     q-Pochhammer symbols, q-binomials, Al-Salam--Carlitz weight and polynomials
symfunc     symmetric functions in the power-sum basis; Jack and Macdonald polynomials
superint    ensemble averages, moments, dualities, functional equations
oracle      brute-force lattice and Gaussian evaluators used as independent checks
cli         ``betaqt`` command line
"""

from .exactalg import PoleError, RatFunc, eval_numeric, parse, substitute
from .symfunc import SymFunc, jack, macdonald, schur
from .superint import jack_average, macdonald_average, moment_gaussian_beta, moment_qt

__version__ = "0.1.0"

__all__ = [
    "PoleError",
    "RatFunc",
    "SymFunc",
    "eval_numeric",
    "jack",
    "jack_average",
    "macdonald",
    "macdonald_average",
    "moment_gaussian_beta",
    "moment_qt",
    "parse",
    "schur",
    "substitute",
]
