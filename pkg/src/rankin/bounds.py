"""Closed-form Rankin bounds, classical and weighted."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgumentError, UndefinedBoundError
from .measure import MeasureSpace, diagonal_mass, offdiagonal_mass

__all__ = ["BoundReport", "rankin_bound", "classical_rankin_bound"]


@dataclass(frozen=True)
class BoundReport:
    """Lower bound on the coherence and upper bound on the minimal squared
    distance, together with the two masses they were computed from."""

    coherence_bound: float
    distance_bound: float
    diagonal_mass: float
    offdiagonal_mass: float


def rankin_bound(space: MeasureSpace) -> BoundReport:
    """Weighted Rankin bound of a measure space.

    Any unit-vector family over ``space``, in any dimension, has coherence at
    least ``-diag/offdiag`` and minimal squared distance at most
    ``2 * (1 + diag/offdiag)``, where ``diag`` and ``offdiag`` are the product
    masses of the diagonal and of its complement.

    The ratio is evaluated on weights divided by their maximum.  It is scale
    invariant anyway, and for equal weights every mass is then an exact
    integer, so the counting-measure value ``-1/(n-1)`` comes out correctly
    rounded.
    """
    if space.n_atoms < 2:
        raise UndefinedBoundError(
            "the Rankin bound needs at least two atoms; with one atom the "
            "supremum over distinct pairs is empty")
    unit = MeasureSpace(space.weights / space.weights.max())
    diag = diagonal_mass(unit)
    off = offdiagonal_mass(unit)
    return BoundReport(
        coherence_bound=-diag / off,
        distance_bound=2.0 * (diag + off) / off,
        diagonal_mass=diagonal_mass(space),
        offdiagonal_mass=offdiagonal_mass(space),
    )


def classical_rankin_bound(n: int):
    """``(-1/(n-1), 2n/(n-1))`` for ``n`` unit vectors."""
    if int(n) != n or n < 2:
        raise InvalidArgumentError(f"classical Rankin bound needs n >= 2, got {n}")
    n = int(n)
    return -1 / (n - 1), 2 * n / (n - 1)
