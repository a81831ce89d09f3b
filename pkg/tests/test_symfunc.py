from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from betaqt.exactalg import ALPHA, ONE, Q, T, U, ZERO, RatFunc, eval_numeric, substitute, var
from betaqt.partitions import (
    conjugate,
    format_partition,
    gen_pochhammer_qt,
    hooks_jack,
    hooks_qt,
    n_stat,
    partitions_of,
    size,
)
from betaqt.symfunc import (
    Specialization,
    SymFunc,
    coefficient,
    evaluate_alphabet,
    gram_schmidt,
    jack,
    macdonald,
    monomial_to_powersum,
    omega_c_jack,
    omega_qt,
    powersum_in_jack,
    powersum_in_macdonald,
    powersum_in_schur,
    principal,
    scalar_product_jack,
    scalar_product_qt,
    schur,
    specialize,
    swap_qt,
    to_monomial,
)

p = SymFunc.p
UP_TO_4 = [k for n in range(1, 5) for k in partitions_of(n)]
UP_TO_5 = [k for n in range(1, 6) for k in partitions_of(n)]


# -- basis transitions ------------------------------------------------------

def test_monomial_to_powersum_examples():
    assert monomial_to_powersum((1,)) == p((1,))
    assert monomial_to_powersum((2,)) == p((2,))
    assert monomial_to_powersum((1, 1)) == (p((1, 1)) - p((2,))) / 2


@pytest.mark.parametrize("n", range(1, 7))
def test_monomial_round_trip(n):
    for mu in partitions_of(n):
        back = to_monomial(monomial_to_powersum(mu))
        assert back == {mu: ONE}


def test_to_monomial_of_power_sum():
    # p_1^2 = m_2 + 2 m_11
    assert to_monomial(p((1, 1))) == {(2,): ONE, (1, 1): 2 * ONE}


# -- scalar products --------------------------------------------------------

def test_jack_scalar_product_examples():
    assert scalar_product_jack(p((2,)), p((2,))) == 2 * ALPHA
    assert scalar_product_jack(p((1, 1)), p((2,))).is_zero()
    assert scalar_product_jack(p((1, 1)), p((1, 1))) == 2 * ALPHA**2
    assert scalar_product_jack(p((1,)), p((2,))).is_zero()  # unequal degrees


def test_qt_scalar_product_examples():
    assert scalar_product_qt(p((1,)), p((1,))) == (1 - Q) / (1 - T)
    assert scalar_product_qt(p((2,)), p((1, 1))).is_zero()
    assert scalar_product_qt(p((2,)), p((2,))) == 2 * (1 - Q**2) / (1 - T**2)


# -- Jack and Macdonald polynomials -----------------------------------------

def test_jack_examples():
    assert jack((1,)) == p((1,))
    assert jack((2,)) == (p((1, 1)) + p((2,)) * ALPHA) / (1 + ALPHA)
    assert scalar_product_jack(jack((2,)), jack((2,))) == 2 * ALPHA**2 / (ALPHA + 1)
    assert jack(()) == SymFunc(0, {(): 1})


def test_macdonald_examples():
    assert macdonald((1,)) == p((1,))
    assert macdonald(()) == SymFunc(0, {(): 1})
    # frozen from Gram-Schmidt; certified by the norm and specialization tests below
    expected = (p((1, 1)) * ((1 - T) * (1 + Q)) + p((2,)) * ((1 + T) * (1 - Q))) / (2 * (1 - Q * T))
    assert macdonald((2,)) == expected
    assert macdonald((1, 1)) == (p((1, 1)) - p((2,))) / 2


def test_schur_examples():
    assert schur((1, 1)) == (p((1, 1)) - p((2,))) / 2
    assert schur((2,)) == (p((1, 1)) + p((2,))) / 2


@pytest.mark.parametrize("kappa", UP_TO_5, ids=format_partition)
def test_monomial_unitriangularity(kappa):
    from betaqt.partitions import dominance_leq

    for f in (jack(kappa), macdonald(kappa)):
        m = to_monomial(f)
        assert m[kappa] == ONE
        assert all(dominance_leq(mu, kappa) for mu in m)


@pytest.mark.parametrize("n", range(1, 6))
def test_jack_norms(n):
    for k in partitions_of(n):
        upper, lower = hooks_jack(k)
        for m in partitions_of(n):
            want = upper / lower if k == m else ZERO
            assert scalar_product_jack(jack(k), jack(m)) == want


@pytest.mark.parametrize("n", range(1, 6))
def test_macdonald_norms(n):
    for k in partitions_of(n):
        lower, upper = hooks_qt(k)
        for m in partitions_of(n):
            want = upper / lower if k == m else ZERO
            assert scalar_product_qt(macdonald(k), macdonald(m)) == want


@pytest.mark.parametrize("kappa", UP_TO_5, ids=format_partition)
def test_macdonald_at_t_equal_q_is_schur(kappa):
    assert macdonald(kappa).substitute({"t": Q}) == schur(kappa)


@pytest.mark.parametrize("kappa", UP_TO_4, ids=format_partition)
def test_macdonald_parameter_inversion(kappa):
    assert macdonald(kappa).substitute({"q": 1 / Q, "t": 1 / T}) == macdonald(kappa)


def test_gram_schmidt_tie_break_invariance():
    # (3,1,1,1) and (2,2,2) are incomparable in dominance
    default = partitions_of(6)
    i, j = default.index((3, 1, 1, 1)), default.index((2, 2, 2))
    assert j == i + 1
    swapped = list(default)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    base = gram_schmidt(6, scalar_product_jack)
    assert gram_schmidt(6, scalar_product_jack, order=swapped) == base
    # projecting onto every earlier polynomial, not only dominance-smaller ones
    assert gram_schmidt(6, scalar_product_jack, order=swapped, dominance_only=False) == base


def test_gram_schmidt_tie_break_invariance_macdonald():
    default = partitions_of(6)
    swapped = list(default)
    i = default.index((3, 1, 1, 1))
    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
    assert gram_schmidt(6, scalar_product_qt, order=swapped) == gram_schmidt(6, scalar_product_qt)


@pytest.mark.parametrize("beta,alpha", [(2, Fraction(1)), (4, Fraction(1, 2))])
@pytest.mark.parametrize("kappa", [(2,), (2, 1), (3, 1), (2, 2)], ids=format_partition)
def test_jack_limit_of_macdonald(kappa, beta, alpha):
    """Coefficients at q = 1 - eps, t = q^(beta/2) converge to the Jack coefficients.

    Invariance under (q, t) -> (1/q, 1/t) makes the coefficients even in
    log q along t = q^k, so the error is second order in eps.
    """
    target = {lam: eval_numeric(c, {"alpha": alpha}) for lam, c in jack(kappa).items()}

    def error(eps):
        qv = 1 - eps
        point = {"q": qv, "t": qv ** (beta // 2)}
        got = {lam: eval_numeric(c, point) for lam, c in macdonald(kappa).items()}
        return max(abs(got.get(lam, 0) - target.get(lam, 0)) for lam in set(got) | set(target))

    e3, e4 = error(Fraction(1, 10**3)), error(Fraction(1, 10**4))
    assert e4 < Fraction(1, 10**3)
    if e3:
        ratio = e3 / e4
        assert 50 < ratio < 200  # O(eps^2) convergence


# -- specializations --------------------------------------------------------

def test_specialization_examples():
    assert specialize(macdonald((1,)), principal(U)) == (1 - U) / (1 - T)
    assert (1 - U) / (1 - T) == gen_pochhammer_qt("u", (1,)) / hooks_qt((1,))[0]


@pytest.mark.parametrize("kappa", UP_TO_5, ids=format_partition)
def test_principal_specialization_formula(kappa):
    P = macdonald(kappa)
    assert specialize(P, principal(U)) == gen_pochhammer_qt("u", kappa) / hooks_qt(kappa)[0]
    stable = Specialization(lambda k: 1 / (1 - T**k))
    assert specialize(P, stable) == T ** n_stat(kappa) / hooks_qt(kappa)[0]


@pytest.mark.parametrize("kappa", UP_TO_4, ids=format_partition)
def test_principal_specialization_is_finite_alphabet(kappa):
    P = macdonald(kappa)
    for n in range(1, 5):
        assert specialize(P, principal(T**n)) == evaluate_alphabet(P, [T**i for i in range(n)])


def test_specialization_rules():
    rule = Specialization({1: 2, 2: 3}, name="finite")
    assert specialize(p((2, 1)) + p((1, 1, 1)), rule) == RatFunc(14)
    with pytest.raises(KeyError):
        specialize(p((3,)), rule)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_homogeneity(c):
    for kappa in [(2, 1), (2, 2), (3, 1)]:
        P = macdonald(kappa)
        scaled = specialize(P, Specialization(lambda k: RatFunc(c) ** k * var("z") ** k))
        assert scaled == RatFunc(c) ** size(kappa) * specialize(P, Specialization(lambda k: var("z") ** k))


def test_coefficient_examples():
    assert coefficient(jack((2,)), (1, 1)) == 1 / (1 + ALPHA)
    assert coefficient(jack((2,)), (2,)) == ALPHA / (1 + ALPHA)
    assert coefficient(jack((2,)), (3,)).is_zero()


@pytest.mark.parametrize("kappa", UP_TO_5, ids=format_partition)
def test_p1_coefficient_is_inverse_hook(kappa):
    assert coefficient(jack(kappa), (1,) * size(kappa)) == 1 / hooks_jack(kappa)[1]


# -- automorphisms ----------------------------------------------------------

def test_omega_examples():
    assert omega_qt(p((1,))) == p((1,)) * ((1 - Q) / (1 - T))
    assert omega_qt(p((2,))) == p((2,)) * (-(1 - Q**2) / (1 - T**2))
    c = var("z")
    assert omega_c_jack(p((1,)), c) == p((1,)) * c


@pytest.mark.parametrize("kappa", UP_TO_4, ids=format_partition)
def test_omega_on_jack(kappa):
    upper, lower = hooks_jack(kappa)
    lhs = omega_c_jack(jack(kappa), -ALPHA)
    rhs = jack(conjugate(kappa)).substitute({"alpha": 1 / ALPHA}) * ((-1) ** size(kappa) * upper / lower)
    assert lhs == rhs


@pytest.mark.parametrize("kappa", UP_TO_4, ids=format_partition)
def test_coefficient_ratio_duality(kappa):
    n = size(kappa)
    if n % 2:
        return
    inv = {"alpha": 1 / ALPHA}
    kc = conjugate(kappa)
    ratio = coefficient(jack(kappa), (2,) * (n // 2)) / coefficient(jack(kappa), (1,) * n)
    dual = coefficient(jack(kc), (2,) * (n // 2)) / coefficient(jack(kc), (1,) * n)
    assert ratio == (-ALPHA) ** (n // 2) * substitute(dual, inv)


@pytest.mark.parametrize("kappa", UP_TO_4, ids=format_partition)
def test_omega_on_macdonald(kappa):
    lower, upper = hooks_qt(kappa)
    assert omega_qt(macdonald(kappa)) == swap_qt(macdonald(conjugate(kappa))) * (upper / lower)


# -- alphabets and power-sum expansions -------------------------------------

def test_evaluate_alphabet_examples():
    assert evaluate_alphabet(p((2,)), [1, T]) == 1 + T**2
    x1, x2 = var("a"), var("z")
    assert evaluate_alphabet(macdonald((1, 1)), [x1, x2]) == x1 * x2


def test_powersum_in_schur_examples():
    assert powersum_in_schur(2, 5) == [(1, (2,)), (-1, (1, 1))]
    assert powersum_in_schur(1, 3) == [(1, (1,))]
    assert powersum_in_schur(3, 3) == [(1, (3,)), (-1, (2, 1)), (1, (1, 1, 1))]
    assert powersum_in_schur(3, 2) == [(1, (3,)), (-1, (2, 1))]


@pytest.mark.parametrize("j", range(1, 7))
def test_powersum_expansions_reconstruct(j):
    # the check flag raises on failure; here we also compare the alpha = 1 collapse
    u = powersum_in_jack(j)
    at_one = {k: substitute(c, {"alpha": 1}) for k, c in u.items()}
    assert {k: c for k, c in at_one.items() if not c.is_zero()} == {
        k: RatFunc(s) for s, k in powersum_in_schur(j, j)
    }
    powersum_in_macdonald(j)


def test_powersum_examples():
    assert powersum_in_jack(1) == {(1,): ONE}
    assert powersum_in_macdonald(1) == {(1,): ONE}


def test_json_round_trip():
    f = macdonald((2, 1))
    data = f.to_json()
    assert data["basis"] == "powersum" and data["degree"] == 3
    assert SymFunc.from_json(data) == f
    with pytest.raises(ValueError):
        SymFunc.from_json({"degree": 1, "basis": "monomial", "terms": []})


def test_symfunc_rejects_inhomogeneous_terms():
    with pytest.raises(ValueError):
        SymFunc(2, {(3,): 1})
    with pytest.raises(ValueError):
        p((1,)) + p((2,))
