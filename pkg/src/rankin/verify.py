"""Check the weighted Rankin bound on concrete families and replay its proof.

Everything here is recomputed from the raw vectors and weights.  Tolerances:

* ``SLACK_TOLERANCE`` (1e-9) decides pass/fail of the bound,
* ``RESIDUAL_TOLERANCE`` (1e-10, relative to ``max(1, |total|)``) bounds the
  decomposition residual.

Sums involve at most ~1e4 terms of size at most ``max(w)**2``, which keeps
rounding well inside both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import rankin_bound
from .errors import NormalizationError, UndefinedBoundError
from .family import (NORM_TOLERANCE, VectorFamily, coherence, gram,
                     min_pairwise_distance_sq)
from .measure import offdiagonal_mass

__all__ = [
    "SLACK_TOLERANCE",
    "RESIDUAL_TOLERANCE",
    "CoherenceReport",
    "DecompositionReport",
    "check_rankin",
    "proof_decomposition",
    "implied_coherence_floor",
    "polarization_identity",
]

SLACK_TOLERANCE = 1e-9
RESIDUAL_TOLERANCE = 1e-10


@dataclass(frozen=True)
class CoherenceReport:
    coherence: float
    min_distance_sq: float
    coherence_bound: float
    distance_bound: float
    slack: float
    distance_slack: float
    witness_pair: tuple
    satisfied: bool
    tolerance: float = SLACK_TOLERANCE


@dataclass(frozen=True)
class DecompositionReport:
    """Squared norm of the synthesized constant function, split into the
    diagonal and off-diagonal parts of the double sum."""

    total: float
    diag_part: float
    offdiag_part: float
    residual: float
    tolerance: float = RESIDUAL_TOLERANCE


def _require_normalized(fam):
    norms = np.linalg.norm(fam.vectors, axis=1)
    dev = float(np.max(np.abs(norms - 1.0)))
    if dev > NORM_TOLERANCE:
        raise NormalizationError(
            f"family is not normalized: norms deviate from 1 by up to {dev:.3g}")


def check_rankin(fam: VectorFamily, tolerance: float = SLACK_TOLERANCE) -> CoherenceReport:
    """Compare a family's coherence and minimal distance with the bound of
    its measure space.

    ``satisfied`` must come out true for every normalized family; a false
    verdict means the inputs or this code are broken.
    """
    if fam.n_atoms < 2:
        raise UndefinedBoundError("check_rankin needs at least two atoms")
    _require_normalized(fam)
    bound = rankin_bound(fam.space)
    coh, witness = coherence(fam)
    dist, _ = min_pairwise_distance_sq(fam)
    slack = coh - bound.coherence_bound
    distance_slack = bound.distance_bound - dist
    return CoherenceReport(
        coherence=coh,
        min_distance_sq=dist,
        coherence_bound=bound.coherence_bound,
        distance_bound=bound.distance_bound,
        slack=slack,
        distance_slack=distance_slack,
        witness_pair=witness,
        satisfied=bool(slack >= -tolerance and distance_slack >= -tolerance),
        tolerance=tolerance,
    )


def proof_decomposition(fam: VectorFamily) -> DecompositionReport:
    _require_normalized(fam)
    w = fam.weights
    W = np.outer(w, w) * gram(fam)
    on_diag = np.eye(fam.n_atoms, dtype=bool)
    total = math.fsum(W.ravel())
    diag_part = math.fsum(W[on_diag])
    offdiag_part = math.fsum(W[~on_diag])
    return DecompositionReport(
        total=total,
        diag_part=diag_part,
        offdiag_part=offdiag_part,
        residual=total - diag_part - offdiag_part,
    )


def implied_coherence_floor(fam: VectorFamily) -> float:
    """Instance-specific lower bound on the coherence read off the proof.

    The off-diagonal part of the double sum is at most ``coherence`` times the
    off-diagonal mass, so ``(total - diag_part) / offdiag_mass`` bounds the
    coherence from below.  Because ``total >= 0`` it never drops below the
    closed-form bound; the two agree when the weighted vector sum vanishes.
    """
    if fam.n_atoms < 2:
        raise UndefinedBoundError("implied_coherence_floor needs at least two atoms")
    dec = proof_decomposition(fam)
    return (dec.total - dec.diag_part) / offdiagonal_mass(fam.space)


def polarization_identity(fam: VectorFamily) -> float:
    """``N - 2(1 - M)``: zero (up to rounding) for unit vectors.

    Links the minimal squared distance N to the coherence M through
    ``|a - b|^2 = 2 - 2<a, b>``.
    """
    _require_normalized(fam)
    coh, _ = coherence(fam)
    dist, _ = min_pairwise_distance_sq(fam)
    return dist - 2.0 * (1.0 - coh)
