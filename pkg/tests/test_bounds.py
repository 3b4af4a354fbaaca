from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import pair_masses, random_unit_rows
from rankin import (InvalidArgumentError, MeasureSpace, UndefinedBoundError,
                    VectorFamily, check_rankin, classical_rankin_bound,
                    counting_space, discretize, rankin_bound)


@pytest.mark.parametrize("n", range(2, 51))
def test_counting_space_gives_classical_bound(n):
    b = rankin_bound(counting_space(n))
    assert b.coherence_bound == -1 / (n - 1)
    assert b.distance_bound == 2 * n / (n - 1)
    assert (b.coherence_bound, b.distance_bound) == classical_rankin_bound(n)


@pytest.mark.parametrize("n, expected", [
    (2, (-1.0, 4.0)),
    (4, (-1 / 3, 8 / 3)),
    (10, (-1 / 9, 20 / 9)),
])
def test_classical_values(n, expected):
    assert classical_rankin_bound(n) == expected


def test_classical_rejects_small_n():
    with pytest.raises(InvalidArgumentError):
        classical_rankin_bound(1)


def test_weighted_example():
    diag, off = pair_masses([1, 1, 2])
    ref = Fraction(-int(diag), int(off))
    assert ref == Fraction(-3, 5)
    b = rankin_bound(MeasureSpace([1, 1, 2]))
    assert b.coherence_bound == pytest.approx(-0.6, rel=1e-15)
    assert b.distance_bound == pytest.approx(3.2, rel=1e-15)
    assert (b.diagonal_mass, b.offdiagonal_mass) == (6.0, 10.0)


def test_single_atom_is_an_error():
    with pytest.raises(UndefinedBoundError):
        rankin_bound(counting_space(1))


weights = st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=2, max_size=40)


@settings(max_examples=300, deadline=None)
@given(weights)
def test_report_invariants(w):
    b = rankin_bound(MeasureSpace(w))
    assert b.distance_bound == pytest.approx(2 * (1 - b.coherence_bound), rel=1e-12)
    assert b.coherence_bound < 0
    # >= -1 exactly when the off-diagonal mass dominates
    if b.offdiagonal_mass > b.diagonal_mass * (1 + 1e-12):
        assert b.coherence_bound >= -1
    elif b.offdiagonal_mass < b.diagonal_mass * (1 - 1e-12):
        assert b.coherence_bound < -1


@settings(max_examples=300, deadline=None)
@given(weights, st.floats(min_value=1e-3, max_value=1e3))
def test_weight_scaling_invariance(w, c):
    a = rankin_bound(MeasureSpace(w)).coherence_bound
    b = rankin_bound(MeasureSpace(np.array(w) * c)).coherence_bound
    assert b == pytest.approx(a, rel=1e-14)


def test_bound_does_not_depend_on_dimension(rng):
    space = MeasureSpace([0.3, 2.0, 1.0, 5.0, 0.7])
    bounds = {check_rankin(VectorFamily(space, random_unit_rows(rng, 5, d))).coherence_bound
              for d in (1, 2, 3, 10, 50)}
    assert bounds == {rankin_bound(space).coherence_bound}


def test_equal_weight_refinement_is_monotone():
    values = [rankin_bound(discretize("circle", n).space).coherence_bound for n in range(2, 300)]
    assert all(v == -1 / (n - 1) for v, n in zip(values, range(2, 300)))
    assert all(a < b < 0 for a, b in zip(values, values[1:]))
