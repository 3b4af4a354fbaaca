"""Search for unit-vector families of minimal coherence.

For a measure space and an ambient dimension, :func:`minimize_coherence`
runs independent projected-gradient descents on the product of unit spheres.
The nonsmooth max of the off-diagonal Gram entries is replaced by a
log-sum-exp soft maximum whose temperature decays geometrically, and the
final families are re-scored with the exact max.  Pairs are not weighted;
the weights only move the bound that the result is compared against.

:func:`simplex_family` gives the closed-form optimum when ``d >= n - 1``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List

import numpy as np
from scipy.special import logsumexp, softmax

from .bounds import rankin_bound
from .errors import InvalidArgumentError, UndefinedBoundError
from .family import VectorFamily, coherence, gram, synthesis
from .measure import MeasureSpace, counting_space

__all__ = [
    "CERTIFIED",
    "GAP_POSITIVE",
    "OptimizerConfig",
    "RestartTrace",
    "OptimizerResult",
    "smoothed_objective",
    "simplex_family",
    "minimize_coherence",
]

CERTIFIED = "equality-certified"
GAP_POSITIVE = "gap-positive"

CERTIFICATE_GAP = 1e-6
CERTIFICATE_GRAM = 1e-5
CERTIFICATE_SYNTHESIS = 1e-4


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 16
    max_iters: int = 5000
    temperature: float = 1.0
    decay: float = 0.85
    decay_every: int = 200
    step: float = 0.05
    tol: float = 1e-10
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        for name in ("restarts", "max_iters", "decay_every", "threads"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < 1:
                raise InvalidArgumentError(f"{name} must be a positive integer, got {v!r}")
        for name in ("temperature", "step", "tol"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= 0:
                raise InvalidArgumentError(f"{name} must be a positive real, got {v!r}")
        if not 0 < self.decay < 1:
            raise InvalidArgumentError(f"decay must lie in (0, 1), got {self.decay!r}")
        if not isinstance(self.seed, (int, np.integer)) or not 0 <= self.seed < 2**64:
            raise InvalidArgumentError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


@dataclass(frozen=True)
class RestartTrace:
    restart: int
    iterations: int
    smoothed: float
    final_temperature: float
    coherence: float


@dataclass(frozen=True)
class OptimizerResult:
    best_family: VectorFamily
    achieved_coherence: float
    bound: float
    gap: float
    best_restart: int
    certificate: str
    traces: List[RestartTrace] = field(default_factory=list)


def _pair_values(X):
    n = X.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    G = X @ X.T
    return iu, ju, G[iu, ju]


def _objective(X, T):
    n = X.shape[0]
    iu, ju, vals = _pair_values(X)
    z = vals / T
    value = T * float(logsumexp(z))
    p = softmax(z)
    P = np.zeros((n, n))
    P[iu, ju] = p
    P = P + P.T
    return value, P @ X


def smoothed_objective(fam: VectorFamily, temperature: float):
    """Soft maximum ``T log sum_{i<j} exp(<tau_i, tau_j> / T)`` and its
    gradient with respect to the ambient coordinates (``n x d``).

    The value lies between the exact max and max + ``T log(n(n-1)/2)``.
    """
    if not temperature > 0:
        raise InvalidArgumentError(f"temperature must be positive, got {temperature!r}")
    if fam.n_atoms < 2:
        raise UndefinedBoundError("smoothed objective needs at least two atoms")
    return _objective(np.asarray(fam.vectors, dtype=float), float(temperature))


def simplex_family(n: int, d: int) -> VectorFamily:
    """``n`` unit vectors in R^d with all pairwise inner products ``-1/(n-1)``.

    Centers the standard basis of R^n, normalizes, and maps the result
    isometrically onto R^(n-1) (padded with zeros up to ``d``).
    """
    if int(n) != n or n < 2:
        raise InvalidArgumentError(f"simplex needs n >= 2, got {n}")
    n, d = int(n), int(d)
    if d < n - 1:
        raise InvalidArgumentError(
            f"{n} vectors with pairwise inner product -1/(n-1) need dimension >= {n - 1}, got {d}")
    V = np.eye(n) - 1.0 / n
    V /= np.linalg.norm(V, axis=1, keepdims=True)
    # rows lie in the hyperplane orthogonal to (1,...,1); take coordinates
    # in an orthonormal basis of that hyperplane
    Q, _ = np.linalg.qr(np.vstack([np.ones(n), np.eye(n)[:-1]]).T)
    basis = Q[:, 1:]
    Y = V @ basis
    Y /= np.linalg.norm(Y, axis=1, keepdims=True)
    out = np.zeros((n, d))
    out[:, :n - 1] = Y
    return VectorFamily(counting_space(n), out, mode="renormalize")


def _normalize_rows(X):
    return X / np.linalg.norm(X, axis=1, keepdims=True)


def _descend(n, d, cfg, restart):
    rng = np.random.default_rng(cfg.seed + restart)
    X = _normalize_rows(rng.standard_normal((n, d)))
    T = cfg.temperature
    decays_left = cfg.max_iters // cfg.decay_every
    step = cfg.step
    value, grad = _objective(X, T)
    since_decay = 0
    it = 0
    while it < cfg.max_iters:
        it += 1
        since_decay += 1
        tangent = grad - np.sum(grad * X, axis=1, keepdims=True) * X
        X_new = _normalize_rows(X - step * tangent)
        new_value, new_grad = _objective(X_new, T)
        if new_value > value:
            step /= 2
            converged = step * np.linalg.norm(tangent) < cfg.tol
        else:
            converged = value - new_value < cfg.tol
            X, value, grad = X_new, new_value, new_grad
        # a converged level moves on to the next temperature early
        if since_decay == cfg.decay_every or converged:
            if decays_left == 0:
                if converged:
                    break
                continue
            decays_left -= 1
            since_decay = 0
            T *= cfg.decay
            step = cfg.step
            value, grad = _objective(X, T)
    return X, value, T, it


def _run_restart(space, d, cfg, restart):
    X, smoothed, T, iters = _descend(space.n_atoms, d, cfg, restart)
    fam = VectorFamily(space, X, mode="renormalize")
    coh, _ = coherence(fam)
    return fam, RestartTrace(restart, iters, smoothed, T, coh)


def _certify(fam, coh, bound):
    if coh - bound > CERTIFICATE_GAP:
        return GAP_POSITIVE
    G = gram(fam)
    off = G[~np.eye(fam.n_atoms, dtype=bool)]
    if np.max(np.abs(off - bound)) > CERTIFICATE_GRAM:
        return GAP_POSITIVE
    if np.linalg.norm(synthesis(fam, np.ones(fam.n_atoms))) > CERTIFICATE_SYNTHESIS:
        return GAP_POSITIVE
    return CERTIFIED


def minimize_coherence(space: MeasureSpace, d: int,
                       cfg: OptimizerConfig | None = None) -> OptimizerResult:
    """Best family over ``cfg.restarts`` seeded descents.

    Restart ``r`` draws its start from ``seed + r``.  The winner has the
    lowest exact coherence, ties going to the lower restart index, so the
    result does not depend on ``cfg.threads``.
    """
    cfg = cfg or OptimizerConfig()
    if space.n_atoms < 2:
        raise UndefinedBoundError("coherence minimization needs at least two atoms")
    if int(d) != d or d < 1:
        raise InvalidArgumentError(f"dimension must be >= 1, got {d}")
    d = int(d)
    bound = rankin_bound(space).coherence_bound

    def job(r):
        return _run_restart(space, d, cfg, r)

    if cfg.threads == 1:
        runs = [job(r) for r in range(cfg.restarts)]
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            runs = list(pool.map(job, range(cfg.restarts)))

    best = min(range(len(runs)), key=lambda r: (runs[r][1].coherence, r))
    fam, trace = runs[best]
    coh = trace.coherence
    return OptimizerResult(
        best_family=fam,
        achieved_coherence=coh,
        bound=bound,
        gap=coh - bound,
        best_restart=best,
        certificate=_certify(fam, coh, bound),
        traces=[t for _, t in runs],
    )
