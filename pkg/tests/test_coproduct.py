import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaffine.coproduct import (
    READINGS,
    c_coeff_closed,
    c_coeff_recursive,
    c_shift_check,
    delta_closed,
    enumerate_omega,
    l_profile,
    power_closed,
)
from qaffine.morphisms import delta_recursive, delta_seed
from qaffine.pbw import Element, PBWMonomial, x, y
from qaffine.scalar import LaurentPoly, ScalarQ
from qaffine.series import gen_series
from qaffine.tensor import TensorElement

Q2 = LaurentPoly.monomial(2)


def test_enumerate_omega_examples():
    assert enumerate_omega(2, 2) == [(0, 2), (1, 1)]
    assert enumerate_omega(1, 0, positive=True) == []
    assert enumerate_omega(3, 4, positive=True) == [(1, 1, 2)]


def test_enumerate_omega_is_exhaustive():
    for n in range(1, 5):
        for m in range(0, 7):
            brute = sorted(
                t for t in itertools.product(range(m + 1), repeat=n) if sum(t) == m and list(t) == sorted(t)
            )
            assert enumerate_omega(n, m) == brute
            assert enumerate_omega(n, m, positive=True) == [t for t in brute if min(t) >= 1]


def test_l_profile_examples():
    assert l_profile((1, 1, 2, 2, 3, 5, 5, 5)) == (2, 2, 1, 3)
    assert l_profile((4,)) == (1,)
    assert l_profile((0, 0, 0)) == (3,)


def test_c_coeff_examples():
    for m in range(6):
        assert c_coeff_recursive((m,)) == ScalarQ(1)
        assert c_coeff_closed((m,)) == LaurentPoly.const(1)
    assert c_coeff_recursive((0, 2)) == ScalarQ(1 + Q2)
    assert c_coeff_recursive((1, 1)) == ScalarQ(Q2)
    assert c_coeff_closed((0, 2)) == 1 + Q2
    assert c_coeff_closed((1, 1)) == Q2
    assert c_coeff_recursive(()) == ScalarQ(1)


def test_c_coeff_rejects_unsorted_tuple():
    with pytest.raises(ValueError):
        c_coeff_closed((2, 1))


def test_c_coeff_against_brute_force_series_power():
    # independent oracle: read coefficients off the normal-ordered n-th power
    D = 4
    for n in range(1, 4):
        power = gen_series("X0plus", D) ** n
        for m in range(D + 1):
            coeff = power.coefficient(-m)
            for t in enumerate_omega(n, m):
                mono = PBWMonomial(0, 0, t)
                assert coeff.coefficient(mono) == ScalarQ(c_coeff_closed(t))


def test_shift_identity_examples():
    assert c_shift_check((1, 1), 1)
    assert c_coeff_closed((0, 0)) == LaurentPoly.monomial(-2) * c_coeff_closed((1, 1))
    assert c_shift_check((1, 2), 1)
    for t in [(0, 3), (2, 2, 4)]:
        assert c_shift_check(t, 0)


small_tuples = st.lists(st.integers(0, 5), min_size=1, max_size=4).map(lambda v: tuple(sorted(v)))


@settings(max_examples=80, deadline=None)
@given(small_tuples)
def test_closed_equals_recursive(t):
    assert ScalarQ(c_coeff_closed(t)) == c_coeff_recursive(t)


@settings(max_examples=80, deadline=None)
@given(small_tuples)
def test_shift_identity_holds(t):
    for a in range(t[0] + 1):
        assert c_shift_check(t, a)


def test_power_closed_examples():
    assert power_closed("X0plus", 1, 3) == gen_series("X0plus", 3)
    assert power_closed("X0plus", 2, 2).coefficient(-2) == (x(0) * x(2)).scale(1 + Q2) + (x(1) * x(1)).scale(Q2)
    expected = Element({PBWMonomial(0, 0, (), (), (2, 0)): 1 + Q2, PBWMonomial(0, 0, (), (), (1, 1)): Q2})
    assert power_closed("Y0plus", 2, 2).coefficient(-2) == expected


@pytest.mark.parametrize("kind", ["X0plus", "Y0plus"])
@pytest.mark.parametrize("n", [2, 3])
def test_power_closed_matches_repeated_product(kind, n):
    assert power_closed(kind, n, 4) == gen_series(kind, 4) ** n


def test_delta_closed_examples():
    assert delta_closed("psi", 0) == TensorElement({(PBWMonomial(1), PBWMonomial(1)): 1})
    assert delta_closed("y", 1) == delta_seed("y1")
    assert delta_closed("x", 0) == delta_seed("x0")
    assert delta_closed("x", 1) == delta_recursive("x", 1)


@pytest.mark.parametrize("family", ["x", "y"])
@pytest.mark.parametrize("n", [-3, -2, -1, 0, 1, 2, 3])
def test_delta_closed_matches_oracle(family, n):
    assert delta_closed(family, n) == delta_recursive(family, n)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_delta_closed_cartan_matches_oracle(n):
    assert delta_closed("psi", n) == delta_recursive("psi", n)
    assert delta_closed("phi", -n) == delta_recursive("phi", -n)


def test_y_readings_agree_at_one_and_only_corrected_survives_beyond():
    assert set(READINGS) == {"printed", "corrected"}
    for r in ("printed", "psi_only", "coeff_only", "corrected"):
        assert delta_closed("y", 1, r) == delta_recursive("y", 1)
    for n in (2, 3):
        oracle = delta_recursive("y", n)
        assert delta_closed("y", n, "corrected") == oracle
        for r in ("printed", "psi_only", "coeff_only"):
            assert delta_closed("y", n, r) != oracle


def test_delta_closed_bad_arguments():
    with pytest.raises(ValueError):
        delta_closed("psi", -1)
    with pytest.raises(ValueError):
        delta_closed("phi", 2)
    with pytest.raises(ValueError):
        delta_closed("h", 1)
