from math import comb

import pytest
from hypothesis import given

from betaqt.exactalg import ALPHA, ONE, Q, T, parse, substitute, var
from betaqt.partitions import (
    arm_leg,
    cells,
    chi_qt,
    conjugate,
    dominance_leq,
    format_partition,
    gen_pochhammer_alpha,
    gen_pochhammer_qt,
    hooks_jack,
    hooks_qt,
    n_stat,
    parse_partition,
    partition,
    partitions_of,
    size,
    z_and_multiplicities,
)

from strategies import partitions_st

ALL_UP_TO_6 = [k for n in range(1, 7) for k in partitions_of(n)]


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


def test_arm_leg_examples():
    assert arm_leg((3, 2), (1, 1)) == (2, 1)
    assert arm_leg((1,), (1, 1)) == (0, 0)
    assert arm_leg((3, 2), (1, 3)) == (0, 0)
    with pytest.raises(ValueError):
        arm_leg((3, 2), (2, 3))


def test_n_stat_examples():
    assert n_stat((3, 1)) == 1
    assert n_stat((2, 2)) == 2
    assert n_stat((1, 1, 1)) == 3
    assert n_stat(()) == 0


def test_dominance_examples():
    assert dominance_leq((1, 1), (2,))
    assert not dominance_leq((2,), (1, 1))
    assert dominance_leq((2, 1), (2, 1))
    # incomparable pair at size 6
    assert not dominance_leq((3, 1, 1, 1), (2, 2, 2)) and not dominance_leq((2, 2, 2), (3, 1, 1, 1))
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


def test_enumeration_examples():
    assert partitions_of(4, 2) == ((4,), (3, 1), (2, 2))
    assert partitions_of(0, 3) == ((),)
    assert partitions_of(3, 3) == ((3,), (2, 1), (1, 1, 1))


def test_enumeration_counts_and_order():
    # partition numbers p(n)
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n in range(1, 9):
        ps = partitions_of(n)
        # dominance-larger partitions never appear after smaller ones
        for i, mu in enumerate(ps):
            for kappa in ps[i + 1 :]:
                assert not (dominance_leq(mu, kappa) and mu != kappa)


def test_z_and_multiplicities():
    assert z_and_multiplicities((2, 1, 1)) == (4, {1: 2, 2: 1})
    assert z_and_multiplicities((2,))[0] == 2
    assert z_and_multiplicities((1, 1))[0] == 2
    assert z_and_multiplicities(())[0] == 1


def test_hooks_jack_examples():
    assert hooks_jack((1,)) == (ALPHA, ONE)
    assert hooks_jack((2,)) == (2 * ALPHA**2, ALPHA + 1)
    # cells (1,1): a=0, l=1 and (2,1): a=0, l=0
    assert hooks_jack((1, 1)) == (ALPHA * (ALPHA + 1), 2 * ONE)
    assert hooks_jack(()) == (ONE, ONE)


def test_hooks_qt_examples():
    assert hooks_qt((1,)) == (1 - T, 1 - Q)
    assert hooks_qt((2,)) == ((1 - Q * T) * (1 - T), (1 - Q**2) * (1 - Q))


def test_pochhammer_examples():
    u = var("u")
    assert gen_pochhammer_alpha("u", (1,)) == u
    assert gen_pochhammer_alpha("u", (2,)) == u * (u + 1)
    assert gen_pochhammer_alpha("u", (1, 1)) == u * (u - 1 / ALPHA)
    assert gen_pochhammer_qt("u", (1,)) == 1 - u
    assert gen_pochhammer_qt("u", (2,)) == (1 - u) * (1 - u * Q)
    assert gen_pochhammer_qt("u", (1, 1)) == (1 - u) * (T - u)


def test_literal_syntax():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("") == ()
    assert format_partition((3, 1)) == "3,1"
    for bad in ("1,2", "0", "2,0", "a", "-1", "2,,1"):
        with pytest.raises(ValueError):
            parse_partition(bad)
    assert partition([2, 1, 0]) == (2, 1)


@given(partitions_st())
def test_conjugate_is_an_involution(kappa):
    assert conjugate(conjugate(kappa)) == kappa
    assert size(conjugate(kappa)) == size(kappa)


@given(partitions_st())
def test_n_stat_both_forms(kappa):
    direct = sum(i * k for i, k in enumerate(kappa))
    via_conjugate = sum(comb(c, 2) for c in conjugate(kappa))
    assert n_stat(kappa) == direct == via_conjugate


@given(partitions_st())
def test_cells_and_hook_count(kappa):
    assert len(list(cells(kappa))) == size(kappa)
    # hook lengths multiply to n! / f^kappa > 0; at alpha = 1 both products agree
    upper, lower = hooks_jack(kappa)
    assert substitute(upper, {"alpha": 1}) == substitute(lower, {"alpha": 1})


@pytest.mark.parametrize("kappa", ALL_UP_TO_6, ids=format_partition)
def test_jack_hook_transpose(kappa):
    inv = {"alpha": 1 / ALPHA}
    upper, lower = hooks_jack(kappa)
    c_upper, c_lower = hooks_jack(conjugate(kappa))
    n = size(kappa)
    assert upper == ALPHA**n * substitute(c_lower, inv)
    assert lower == ALPHA**n * substitute(c_upper, inv)


@pytest.mark.parametrize("kappa", ALL_UP_TO_6, ids=format_partition)
def test_qt_hook_transpose_and_inversion(kappa):
    lower, upper = hooks_qt(kappa)
    c_lower, _ = hooks_qt(conjugate(kappa))
    assert upper == substitute(c_lower, {"q": T, "t": Q})
    n = size(kappa)
    inverted = substitute(lower, {"q": 1 / Q, "t": 1 / T})
    assert lower == (-1) ** n * Q ** n_stat(conjugate(kappa)) * T ** (n_stat(kappa) + n) * inverted


@pytest.mark.parametrize("kappa", ALL_UP_TO_6, ids=format_partition)
def test_chi_transpose_sign(kappa):
    swapped = substitute(chi_qt(conjugate(kappa)), {"q": T, "t": Q})
    assert swapped == (-1) ** (size(kappa) - 1) * chi_qt(kappa)


@pytest.mark.parametrize("kappa", ALL_UP_TO_6, ids=format_partition)
def test_alpha_pochhammer_transpose(kappa):
    n_over_alpha = var("N") / ALPHA
    lhs = gen_pochhammer_alpha(n_over_alpha, kappa)
    rhs = (-ALPHA) ** -size(kappa) * substitute(gen_pochhammer_alpha(-var("N"), conjugate(kappa)), {"alpha": 1 / ALPHA})
    assert lhs == rhs


def test_qt_pochhammer_at_integer_power_vanishes_beyond_length():
    # (t^N)_kappa contains the factor t^(N) - t^N once l(kappa) > N
    for kappa in [(1, 1, 1), (2, 1, 1)]:
        assert gen_pochhammer_qt(T**2, kappa).is_zero()
    assert not gen_pochhammer_qt(T**2, (2, 1)).is_zero()


def test_chi_small_values():
    assert chi_qt((1,)) == ONE
    assert chi_qt((2,)) == 1 - Q
    assert chi_qt((1, 1)) == T - 1
    # cells (1,2), (2,1), (2,2)
    assert chi_qt((2, 2)) == (1 - Q) * (T - 1) * (T - Q)
