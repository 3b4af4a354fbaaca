"""Unit-vector families indexed by atomic measure spaces.

A family pairs every atom of a :class:`~rankin.measure.MeasureSpace` with a
vector of R^d.  Coefficient functions (elements of L^2 of the space) are plain
per-atom arrays; the weights only enter through the L^2 pairing and through
synthesis, which is the atomic form of the weak integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatchError, InvalidArgumentError,
                     NormalizationError, UndefinedBoundError)
from .measure import MeasureSpace

__all__ = [
    "NORM_TOLERANCE",
    "VectorFamily",
    "counting_family",
    "coherence",
    "abs_coherence",
    "min_pairwise_distance_sq",
    "gram",
    "analysis",
    "synthesis",
    "frame_operator_apply",
    "l2_pairing",
    "weighted_gram_total",
    "discretize",
]

NORM_TOLERANCE = 1e-9

_MODES = ("strict", "renormalize", "raw")


@dataclass(frozen=True, eq=False)
class VectorFamily:
    """Vectors ``vectors[i]`` in R^dim attached to atom ``i`` of ``space``.

    ``mode`` controls normalization:

    * ``"strict"`` rejects any vector whose norm is off by more than 1e-9,
    * ``"renormalize"`` divides every vector by its norm (zero vectors are
      rejected),
    * ``"raw"`` stores the vectors untouched; :attr:`normalized` then tells
      whether they happen to be unit vectors.  Verification refuses
      non-normalized families.
    """

    space: MeasureSpace
    vectors: np.ndarray
    normalized: bool

    def __init__(self, space: MeasureSpace, vectors, mode: str = "strict"):
        if mode not in _MODES:
            raise InvalidArgumentError(f"unknown normalization mode {mode!r}")
        X = np.array(vectors, dtype=float)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        if X.ndim != 2 or X.shape[1] < 1:
            raise InvalidArgumentError("vectors must form an n x d array with d >= 1")
        if X.shape[0] != space.n_atoms:
            raise DimensionMismatchError(
                f"{X.shape[0]} vectors for {space.n_atoms} atoms")
        if not np.all(np.isfinite(X)):
            raise InvalidArgumentError("vector entries must be finite")
        norms = np.linalg.norm(X, axis=1)
        if mode == "renormalize":
            if np.any(norms == 0):
                raise NormalizationError("cannot renormalize a zero vector")
            X = X / norms[:, None]
            norms = np.linalg.norm(X, axis=1)
        deviation = float(np.max(np.abs(norms - 1.0)))
        if mode == "strict" and deviation > NORM_TOLERANCE:
            raise NormalizationError(
                f"vector norms deviate from 1 by up to {deviation:.3g}")
        X.setflags(write=False)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "vectors", X)
        object.__setattr__(self, "normalized", deviation <= NORM_TOLERANCE)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def n_atoms(self) -> int:
        return self.vectors.shape[0]

    @property
    def weights(self) -> np.ndarray:
        return self.space.weights

    def __len__(self):
        return self.n_atoms

    def __eq__(self, other):
        if not isinstance(other, VectorFamily):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.vectors, other.vectors)

    __hash__ = None


def counting_family(vectors, mode: str = "strict") -> VectorFamily:
    """Family over the counting measure on as many atoms as there are vectors."""
    X = np.array(vectors, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    return VectorFamily(MeasureSpace(np.ones(X.shape[0])), X, mode=mode)


def gram(fam: VectorFamily) -> np.ndarray:
    X = fam.vectors
    G = X @ X.T
    # matmul does not promise exact symmetry
    return (G + G.T) / 2


def _require_pairs(fam):
    if fam.n_atoms < 2:
        raise UndefinedBoundError(
            "supremum over distinct atom pairs is undefined for a single atom")


def _argbest_pair(M, pick):
    """Lexicographically smallest (i, j), i < j, attaining ``pick`` over the
    strict upper triangle of ``M``."""
    iu, ju = np.triu_indices(M.shape[0], k=1)
    vals = M[iu, ju]
    k = int(pick(vals))  # argmax/argmin return the first hit in row-major order
    return float(vals[k]), (int(iu[k]), int(ju[k]))


def coherence(fam: VectorFamily):
    """Largest signed inner product over distinct atoms, with a witness pair."""
    _require_pairs(fam)
    return _argbest_pair(gram(fam), np.argmax)


def abs_coherence(fam: VectorFamily):
    """Largest absolute inner product over distinct atoms.

    A convenience only; the Rankin bound concerns the signed version.
    """
    _require_pairs(fam)
    return _argbest_pair(np.abs(gram(fam)), np.argmax)


def min_pairwise_distance_sq(fam: VectorFamily):
    """Smallest squared distance between vectors of distinct atoms."""
    _require_pairs(fam)
    X = fam.vectors
    diff = X[:, None, :] - X[None, :, :]
    D = np.einsum("ijk,ijk->ij", diff, diff)
    return _argbest_pair(D, np.argmin)


def _as_vector(h, d):
    h = np.asarray(h, dtype=float).reshape(-1)
    if h.size != d:
        raise DimensionMismatchError(f"expected a vector of length {d}, got {h.size}")
    return h


def _as_coefficients(f, n):
    f = np.asarray(f, dtype=float).reshape(-1)
    if f.size != n:
        raise DimensionMismatchError(
            f"coefficient function has {f.size} values for {n} atoms")
    return f


def analysis(fam: VectorFamily, h) -> np.ndarray:
    """Coefficients ``<h, tau_i>`` for every atom."""
    return fam.vectors @ _as_vector(h, fam.dim)


def synthesis(fam: VectorFamily, f) -> np.ndarray:
    """Atomic integral ``sum_i w_i f_i tau_i``."""
    f = _as_coefficients(f, fam.n_atoms)
    return (fam.weights * f) @ fam.vectors


def frame_operator_apply(fam: VectorFamily, h) -> np.ndarray:
    h = _as_vector(h, fam.dim)
    X = fam.vectors
    return (fam.weights * (X @ h)) @ X


def l2_pairing(space: MeasureSpace, a, b) -> float:
    """Inner product of two coefficient functions in L^2 of ``space``."""
    n = space.n_atoms
    return float(np.sum(space.weights * _as_coefficients(a, n) * _as_coefficients(b, n)))


def weighted_gram_total(fam: VectorFamily) -> float:
    """``sum_{i,j} w_i w_j <tau_i, tau_j>``, i.e. the squared norm of the
    synthesis of the constant-one function."""
    w = fam.weights
    return math.fsum((np.outer(w, w) * gram(fam)).ravel())


def _fibonacci_sphere(n):
    k = np.arange(n, dtype=float)
    z = 1.0 - (2.0 * k + 1.0) / n
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = k * (math.pi * (3.0 - math.sqrt(5.0)))
    return np.column_stack((r * np.cos(phi), r * np.sin(phi), z))


def discretize(shape: str, n: int) -> VectorFamily:
    """Equal-weight quadrature of the unit circle or the unit sphere.

    ``"circle"`` puts atoms at angles 2*pi*k/n with weight 2*pi/n.
    ``"sphere"`` uses a Fibonacci lattice with weight 4*pi/n.
    """
    if int(n) != n or n < 2:
        raise InvalidArgumentError(f"discretization needs n >= 2, got {n}")
    n = int(n)
    if shape == "circle":
        theta = 2.0 * math.pi * np.arange(n) / n
        X = np.column_stack((np.cos(theta), np.sin(theta)))
        weight = 2.0 * math.pi / n
    elif shape == "sphere":
        X = _fibonacci_sphere(n)
        weight = 4.0 * math.pi / n
    else:
        raise InvalidArgumentError(f"unknown shape {shape!r}; use 'circle' or 'sphere'")
    return VectorFamily(MeasureSpace(np.full(n, weight)), X, mode="renormalize")
