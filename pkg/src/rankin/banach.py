"""Functional Rankin bound for vector/functional pairs on finite-dimensional
l^p spaces.

A :class:`FunctionalFamily` holds vectors ``tau_j`` of l^p and functionals
``f_j`` of the dual l^q, both indexed by the atoms of a measure space.  When

    (i)   f_j(tau_j) = 1,
    (ii)  ||f_j||_q <= 1 and ||tau_j||_p <= 1,
    (iii) sum_{j,k} w_j w_k f_j(tau_k) >= 0,

the largest off-diagonal value f_j(tau_k) is at least ``-diag/offdiag``, the
same bound as in the Hilbert case.  Condition (iii) is checked in this summed
form.  The stronger pointwise form (every ``sum_k w_k f_j(tau_k) >= 0``) is
reported but never required.

Other Banach spaces can be plugged in by passing ``pairing``,
``vector_norm`` and ``functional_norm`` callables; their values are trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .bounds import rankin_bound
from .errors import (DimensionMismatchError, InvalidArgumentError,
                     PreconditionViolation, UndefinedBoundError)
from .family import VectorFamily
from .measure import MeasureSpace

__all__ = [
    "CONDITION_TOLERANCE",
    "FunctionalFamily",
    "FunctionalRankinReport",
    "conjugate_exponent",
    "lp_norm",
    "duality_functional",
    "from_vector_family",
    "pairing_matrix",
    "condition_report",
    "gram_sum_condition",
    "functional_coherence",
    "check_functional_rankin",
]

CONDITION_TOLERANCE = 1e-9


def conjugate_exponent(p: float) -> float:
    """Hoelder conjugate of ``p``; 1 and infinity are swapped."""
    p = float(p)
    if not p >= 1:
        raise InvalidArgumentError(f"exponent must lie in [1, inf], got {p}")
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1)


def lp_norm(v, p: float) -> float:
    return float(np.linalg.norm(np.asarray(v, dtype=float).reshape(-1), ord=float(p)))


def duality_functional(v, p: float) -> np.ndarray:
    """Norming functional of a unit vector of l^p.

    Returns ``f`` with ``f(v) = 1`` and ``||f||_q = 1``.  For ``p = 1`` and
    ``p = inf`` the duality map is multivalued and a canonical member is
    picked: the sign vector (with ``sign(0) = 0``) for ``p = 1``, and
    ``sign(v_m) e_m`` at the first index ``m`` of maximal modulus for
    ``p = inf``.
    """
    v = np.asarray(v, dtype=float).reshape(-1)
    p = float(p)
    conjugate_exponent(p)
    norm = lp_norm(v, p)
    if abs(norm - 1.0) > CONDITION_TOLERANCE:
        raise InvalidArgumentError(f"duality functional needs a unit l^{p:g} vector, norm is {norm!r}")
    if p == 1:
        return np.sign(v)
    if math.isinf(p):
        m = int(np.argmax(np.abs(v)))
        f = np.zeros_like(v)
        f[m] = np.sign(v[m])
        return f
    return np.sign(v) * np.abs(v) ** (p - 1)


@dataclass(frozen=True, eq=False)
class FunctionalFamily:
    """Vectors and functionals aligned with the atoms of ``space``.

    No validity conditions are enforced at construction; see
    :func:`condition_report` and :func:`check_functional_rankin`.
    """

    space: MeasureSpace
    p: float
    vectors: np.ndarray
    functionals: np.ndarray
    pairing: Optional[Callable] = field(default=None, repr=False)
    vector_norm: Optional[Callable] = field(default=None, repr=False)
    functional_norm: Optional[Callable] = field(default=None, repr=False)

    def __post_init__(self):
        conjugate_exponent(self.p)
        object.__setattr__(self, "p", float(self.p))
        for name in ("vectors", "functionals"):
            a = np.array(getattr(self, name), dtype=float)
            if a.ndim == 1:
                a = a.reshape(-1, 1)
            if a.ndim != 2 or a.shape[0] != self.space.n_atoms:
                raise DimensionMismatchError(
                    f"{name} must have one row per atom ({self.space.n_atoms})")
            if not np.all(np.isfinite(a)):
                raise InvalidArgumentError(f"{name} must be finite")
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        if self.pairing is None and self.vectors.shape[1] != self.functionals.shape[1]:
            raise DimensionMismatchError("vectors and functionals differ in length")

    @property
    def q(self) -> float:
        return conjugate_exponent(self.p)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def n_atoms(self) -> int:
        return self.space.n_atoms

    def vector_norms(self) -> np.ndarray:
        norm = self.vector_norm or (lambda v: lp_norm(v, self.p))
        return np.array([norm(v) for v in self.vectors])

    def functional_norms(self) -> np.ndarray:
        norm = self.functional_norm or (lambda f: lp_norm(f, self.q))
        return np.array([norm(f) for f in self.functionals])

    def __eq__(self, other):
        if not isinstance(other, FunctionalFamily):
            return NotImplemented
        return (self.space == other.space and self.p == other.p
                and np.array_equal(self.vectors, other.vectors)
                and np.array_equal(self.functionals, other.functionals))

    __hash__ = None


def from_vector_family(fam: VectorFamily, p: float = 2.0) -> FunctionalFamily:
    """Pair each vector of ``fam`` with its norming functional in l^p.

    The vectors are rescaled to unit l^p norm first (a no-op for ``p = 2``).
    """
    V = np.array([v / lp_norm(v, p) for v in fam.vectors])
    F = np.array([duality_functional(v, p) for v in V])
    return FunctionalFamily(fam.space, p, V, F)


def pairing_matrix(fam: FunctionalFamily) -> np.ndarray:
    """``P[j, k] = f_j(tau_k)``."""
    if fam.pairing is None:
        return fam.functionals @ fam.vectors.T
    n = fam.n_atoms
    return np.array([[fam.pairing(fam.functionals[j], fam.vectors[k]) for k in range(n)]
                     for j in range(n)], dtype=float)


def gram_sum_condition(fam: FunctionalFamily) -> float:
    """``sum_{j,k} w_j w_k f_j(tau_k)``; condition (iii) asks for this to be
    nonnegative."""
    w = fam.space.weights
    return math.fsum((np.outer(w, w) * pairing_matrix(fam)).ravel())


def condition_report(fam: FunctionalFamily, tolerance: float = CONDITION_TOLERANCE) -> dict:
    """Worst violation of each hypothesis, keyed ``"i"``, ``"ii"``, ``"iii"``.

    A value of 0 means the condition holds within ``tolerance``.  The key
    ``"iii_pointwise"`` holds the smallest per-atom value
    ``sum_k w_k f_j(tau_k)`` for information only.
    """
    P = pairing_matrix(fam)
    w = fam.space.weights
    diag_err = float(np.max(np.abs(np.diag(P) - 1.0)))
    norm_excess = max(float(np.max(fam.vector_norms())) - 1.0,
                      float(np.max(fam.functional_norms())) - 1.0, 0.0)
    total = math.fsum((np.outer(w, w) * P).ravel())
    return {
        "i": diag_err if diag_err > tolerance else 0.0,
        "ii": norm_excess if norm_excess > tolerance else 0.0,
        "iii": -total if total < -tolerance else 0.0,
        "iii_pointwise": float(np.min(P @ w)),
    }


def functional_coherence(fam: FunctionalFamily):
    """Largest ``f_j(tau_k)`` over ordered pairs ``j != k``, with witness.

    Ordered because ``f_j(tau_k)`` and ``f_k(tau_j)`` differ in general; ties
    go to the lexicographically smallest ``(j, k)``.
    """
    n = fam.n_atoms
    if n < 2:
        raise UndefinedBoundError("functional coherence needs at least two atoms")
    P = pairing_matrix(fam)
    masked = np.where(np.eye(n, dtype=bool), -np.inf, P)
    k = int(np.argmax(masked))
    j, kk = divmod(k, n)
    return float(P[j, kk]), (j, kk)


@dataclass(frozen=True)
class FunctionalRankinReport:
    coherence: float
    coherence_bound: float
    slack: float
    witness_pair: tuple
    satisfied: bool
    gram_sum: float
    pointwise_condition_holds: bool
    tolerance: float = CONDITION_TOLERANCE


def check_functional_rankin(fam: FunctionalFamily,
                            tolerance: float = CONDITION_TOLERANCE) -> FunctionalRankinReport:
    """Verify the functional Rankin bound.

    Raises :class:`PreconditionViolation` naming each failed condition when
    the family does not satisfy the hypotheses; no verdict is produced then.
    """
    if fam.n_atoms < 2:
        raise UndefinedBoundError("check_functional_rankin needs at least two atoms")
    cond = condition_report(fam, tolerance)
    failures = {}
    if cond["i"]:
        failures["i"] = f"|f_j(tau_j) - 1| up to {cond['i']:.3g}"
    if cond["ii"]:
        failures["ii"] = f"norm exceeds 1 by {cond['ii']:.3g}"
    if cond["iii"]:
        failures["iii"] = f"weighted pairing sum is {-cond['iii']:.6g} < 0"
    if failures:
        raise PreconditionViolation(failures)
    coh, witness = functional_coherence(fam)
    bound = rankin_bound(fam.space).coherence_bound
    slack = coh - bound
    return FunctionalRankinReport(
        coherence=coh,
        coherence_bound=bound,
        slack=slack,
        witness_pair=witness,
        satisfied=bool(slack >= -tolerance),
        gram_sum=gram_sum_condition(fam),
        pointwise_condition_holds=bool(cond["iii_pointwise"] >= -tolerance),
        tolerance=tolerance,
    )
