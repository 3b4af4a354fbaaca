import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import pair_masses
from rankin import (InvalidArgumentError, MeasureSpace, counting_space,
                    diagonal_mass, offdiagonal_mass)

weight_lists = st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=1, max_size=30)


def test_counting_space_weights():
    s = counting_space(3)
    assert list(s.weights) == [1.0, 1.0, 1.0]
    assert s.total_mass == 3
    assert counting_space(1).total_mass == 1


def test_counting_space_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        counting_space(0)


def test_counting_space_masses_n5():
    assert pair_masses([1.0] * 5) == (5.0, 20.0)
    s = counting_space(5)
    assert diagonal_mass(s) == 5
    assert offdiagonal_mass(s) == 20


@pytest.mark.parametrize("weights, diag, off", [
    ((1, 1, 1), 3.0, 6.0),
    ((1, 1, 2), 6.0, 10.0),
    ((0.5,), 0.25, 0.0),
])
def test_masses_against_pair_enumeration(weights, diag, off):
    assert pair_masses(weights) == (diag, off)
    s = MeasureSpace(weights)
    assert diagonal_mass(s) == pytest.approx(diag, rel=1e-15)
    assert offdiagonal_mass(s) == pytest.approx(off, rel=1e-15)


@pytest.mark.parametrize("bad", [[], [1.0, 0.0], [-1.0], [1.0, np.inf], [np.nan]])
def test_invalid_weights_rejected(bad):
    with pytest.raises(InvalidArgumentError):
        MeasureSpace(bad)


def test_labels_are_positional_and_may_repeat():
    s = MeasureSpace([1, 2], labels=["a", "a"])
    assert s.labels == ("a", "a")
    with pytest.raises(InvalidArgumentError):
        MeasureSpace([1, 2], labels=["a"])


def test_space_is_immutable():
    s = counting_space(2)
    with pytest.raises(ValueError):
        s.weights[0] = 3.0


def test_dominant_atom_does_not_cancel():
    s = MeasureSpace([1e8, 1e-8])
    assert offdiagonal_mass(s) == pytest.approx(2.0, rel=1e-15)


@settings(max_examples=200, deadline=None)
@given(weight_lists)
def test_masses_partition_total(weights):
    s = MeasureSpace(weights)
    total = s.total_mass
    assert diagonal_mass(s) + offdiagonal_mass(s) == pytest.approx(total * total, rel=1e-12)
    diag, off = pair_masses(weights)
    assert diagonal_mass(s) == pytest.approx(diag, rel=1e-12)
    assert offdiagonal_mass(s) == pytest.approx(off, rel=1e-12, abs=1e-300)


@settings(max_examples=200, deadline=None)
@given(weight_lists)
def test_masses_positive_iff_two_atoms(weights):
    s = MeasureSpace(weights)
    assert diagonal_mass(s) > 0
    assert (offdiagonal_mass(s) == 0) == (len(weights) == 1)


@settings(max_examples=200, deadline=None)
@given(weight_lists.filter(lambda w: len(w) >= 2), st.floats(min_value=1e-3, max_value=1e3))
def test_scaling_weights_scales_masses_quadratically(weights, c):
    s, t = MeasureSpace(weights), MeasureSpace(np.array(weights) * c)
    assert diagonal_mass(t) == pytest.approx(c * c * diagonal_mass(s), rel=1e-12)
    assert offdiagonal_mass(t) == pytest.approx(c * c * offdiagonal_mass(s), rel=1e-12)


@pytest.mark.parametrize("n", range(1, 60))
def test_counting_masses_are_exact_integers(n):
    s = counting_space(n)
    assert diagonal_mass(s) == n
    assert offdiagonal_mass(s) == n * (n - 1)
