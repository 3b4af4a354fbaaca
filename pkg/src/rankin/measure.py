"""Finite atomic measure spaces and product-measure masses of the diagonal."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .errors import InvalidArgumentError

__all__ = [
    "MeasureSpace",
    "counting_space",
    "diagonal_mass",
    "offdiagonal_mass",
]


@dataclass(frozen=True, eq=False)
class MeasureSpace:
    """A finite list of atoms, each carrying a strictly positive weight.

    Labels are opaque; atom identity is positional, so repeated labels are
    allowed.
    """

    labels: tuple
    weights: np.ndarray

    def __init__(self, weights: Sequence[float], labels: Sequence[Any] | None = None):
        w = np.array(weights, dtype=float).reshape(-1)
        if w.size == 0:
            raise InvalidArgumentError("a measure space needs at least one atom")
        if not np.all(np.isfinite(w)):
            raise InvalidArgumentError("atom weights must be finite")
        if np.any(w <= 0):
            raise InvalidArgumentError("atom weights must be strictly positive")
        if labels is None:
            labels = range(w.size)
        labels = tuple(labels)
        if len(labels) != w.size:
            raise InvalidArgumentError(
                f"{len(labels)} labels given for {w.size} atoms")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return self.weights.size

    def __eq__(self, other):
        if not isinstance(other, MeasureSpace):
            return NotImplemented
        return (self.labels == other.labels
                and np.array_equal(self.weights, other.weights))

    __hash__ = None

    @property
    def n_atoms(self) -> int:
        return self.weights.size

    @property
    def total_mass(self) -> float:
        return math.fsum(self.weights)

    def scaled(self, c: float) -> "MeasureSpace":
        return MeasureSpace(self.weights * c, self.labels)

    def is_equal_weight(self) -> bool:
        return bool(np.all(self.weights == self.weights[0]))


def counting_space(n: int) -> MeasureSpace:
    """Counting measure on ``{0, ..., n-1}``."""
    if int(n) != n or n < 1:
        raise InvalidArgumentError(f"counting space needs n >= 1, got {n}")
    return MeasureSpace(np.ones(int(n)))


def diagonal_mass(space: MeasureSpace) -> float:
    """Product mass of the diagonal: the sum of squared weights."""
    return math.fsum(space.weights ** 2)


def offdiagonal_mass(space: MeasureSpace) -> float:
    """Product mass of the complement of the diagonal."""
    w = space.weights
    if w.size == 1:
        return 0.0
    # sum_i w_i * (mass of the other atoms); only positive terms are added,
    # so a dominant atom cannot cancel the rest away
    before = np.concatenate(([0.0], np.cumsum(w)[:-1]))
    after = np.concatenate((np.cumsum(w[::-1])[:-1][::-1], [0.0]))
    return math.fsum(w * (before + after))
