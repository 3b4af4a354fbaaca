"""Exit criteria.  Each test prints one PASS/FAIL line (collected again in
the terminal summary) and then asserts it."""

import math
import struct
import time

import numpy as np
import pytest

from conftest import record_criterion
from oracles import central_difference_gradient, random_unit_rows, random_weights
from rankin import (FunctionalFamily, MeasureSpace, PreconditionViolation,
                    VectorFamily, check_functional_rankin, check_rankin,
                    coherence, counting_space, diagonal_mass, discretize,
                    duality_functional, from_vector_family,
                    functional_coherence, gram_sum_condition, lp_norm,
                    minimize_coherence, proof_decomposition, rankin_bound,
                    simplex_family, smoothed_objective, synthesis)
from rankin.cli import main
from rankin.formats import (dumps, family_document, functional_family_document,
                            loads, parse_family, parse_functional_family,
                            parse_space, space_document, to_jsonable)

pytestmark = pytest.mark.acceptance

N_FAMILIES = 10_000


@pytest.fixture(scope="module")
def random_families(request):
    rng = np.random.default_rng(request.config.getoption("--rankin-seed"))
    fams = []
    for _ in range(N_FAMILIES):
        n = int(rng.integers(2, 51))
        d = int(rng.integers(1, 21))
        fams.append(VectorFamily(MeasureSpace(random_weights(rng, n)),
                                 random_unit_rows(rng, n, d)))
    return fams


def test_ac1_classical_reduction():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(2, 51):
        b = rankin_bound(counting_space(n))
        worst = max(worst,
                    abs(b.coherence_bound - (-1 / (n - 1))) / (1 / (n - 1)),
                    abs(b.distance_bound - 2 * n / (n - 1)) / (2 * n / (n - 1)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-14 and elapsed < 1
    assert record_criterion("AC1 classical reduction",
                            ok, f"max rel err {worst:.1e}, {elapsed:.3f}s")


def test_ac2_equality_attainment():
    t0 = time.perf_counter()
    worst_gram = worst_slack = 0.0
    for n in range(2, 13):
        fam = simplex_family(n, n - 1)
        G = fam.vectors @ fam.vectors.T
        off = G[~np.eye(n, dtype=bool)]
        worst_gram = max(worst_gram, float(np.max(np.abs(off + 1 / (n - 1)))))
        worst_slack = max(worst_slack, abs(check_rankin(fam).slack))
    elapsed = time.perf_counter() - t0
    ok = worst_gram <= 1e-12 and worst_slack <= 1e-11 and elapsed < 1
    assert record_criterion("AC2 equality attainment", ok,
                            f"gram err {worst_gram:.1e}, |slack| {worst_slack:.1e}, {elapsed:.3f}s")


def test_ac3_universal_validity(random_families):
    t0 = time.perf_counter()
    min_slack = min_dslack = math.inf
    worst_polar = 0.0
    all_sat = True
    for fam in random_families:
        r = check_rankin(fam)
        min_slack = min(min_slack, r.slack)
        min_dslack = min(min_dslack, r.distance_slack)
        worst_polar = max(worst_polar, abs(r.min_distance_sq - 2 * (1 - r.coherence)))
        all_sat &= r.satisfied
    elapsed = time.perf_counter() - t0
    ok = (all_sat and min_slack >= -1e-9 and min_dslack >= -1e-9
          and worst_polar <= 1e-12 and elapsed < 60)
    assert record_criterion(
        "AC3 universal validity", ok,
        f"{len(random_families)} families, min slack {min_slack:.3g}, "
        f"min distance slack {min_dslack:.3g}, polarization err {worst_polar:.1e}, {elapsed:.1f}s")


def test_ac4_proof_decomposition(random_families):
    t0 = time.perf_counter()
    worst_res = worst_diag = worst_syn = 0.0
    for fam in random_families:
        d = proof_decomposition(fam)
        worst_res = max(worst_res, abs(d.residual) / max(1.0, abs(d.total)))
        dm = diagonal_mass(fam.space)
        worst_diag = max(worst_diag, abs(d.diag_part - dm) / max(1.0, dm))
        s = synthesis(fam, np.ones(fam.n_atoms))
        syn = float(s @ s)
        worst_syn = max(worst_syn, abs(d.total - syn) / max(1.0, abs(syn)))
    elapsed = time.perf_counter() - t0
    ok = worst_res <= 1e-10 and worst_diag <= 1e-12 and worst_syn <= 1e-10 and elapsed < 60
    assert record_criterion(
        "AC4 proof decomposition", ok,
        f"residual {worst_res:.1e}, diag {worst_diag:.1e}, synthesis {worst_syn:.1e}, {elapsed:.1f}s")


def test_ac5_optimizer_attainment():
    t0 = time.perf_counter()
    gaps = {}
    for n in (2, 3, 4, 5):
        res = minimize_coherence(counting_space(n), n - 1)
        gaps[n] = min(t.coherence for t in res.traces) - res.bound
    elapsed = time.perf_counter() - t0
    ok = all(g <= 1e-6 for g in gaps.values()) and elapsed < 120
    detail = ", ".join(f"n={n} gap {g:.1e}" for n, g in gaps.items())
    assert record_criterion("AC5 optimizer attainment", ok, f"{detail}, {elapsed:.1f}s")


def test_ac6_weight_scaling_invariance(rng):
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 51))
        w = random_weights(rng, n)
        base = rankin_bound(MeasureSpace(w)).coherence_bound
        for c in (1e-3, 1.0, 1e3):
            b = rankin_bound(MeasureSpace(w * c)).coherence_bound
            worst = max(worst, abs(b - base) / abs(base))
    ok = worst <= 1e-14
    assert record_criterion("AC6 weight-scaling invariance", ok, f"max rel change {worst:.1e}")


def test_ac7_continuous_limit():
    t0 = time.perf_counter()
    sizes = [2 ** k for k in range(1, 11)]
    bounds, cohs = [], []
    exact = coh_ok = True
    for n in sizes:
        fam = discretize("circle", n)
        b = rankin_bound(fam.space).coherence_bound
        c, _ = coherence(fam)
        exact &= b == -1 / (n - 1)
        coh_ok &= abs(c - math.cos(2 * math.pi / n)) <= 1e-12
        bounds.append(b)
        cohs.append(c)
    elapsed = time.perf_counter() - t0
    increasing = all(a < b < 0 for a, b in zip(bounds, bounds[1:]))
    coh_up = all(a < b <= 1 for a, b in zip(cohs, cohs[1:])) and cohs[-1] > 0.9999
    ok = exact and coh_ok and increasing and coh_up and elapsed < 5
    assert record_criterion(
        "AC7 continuous limit", ok,
        f"bound exact={exact} increasing={increasing}, coherence=cos(2pi/n) {coh_ok}, "
        f"last {cohs[-1]:.6f}, {elapsed:.2f}s")


def test_ac8_banach_reduction_and_validity(rng):
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 31))
        fam = VectorFamily(MeasureSpace(random_weights(rng, n)),
                           random_unit_rows(rng, n, int(rng.integers(1, 11))))
        ff = from_vector_family(fam, 2)
        worst = max(worst, abs(functional_coherence(ff)[0] - coherence(fam)[0]))
    part_a = worst <= 1e-12

    counts = {}
    part_b = True
    for p in (1.0, 1.5, 3.0, math.inf):
        valid = rejected = 0
        for _ in range(1000):
            n = int(rng.integers(2, 31))
            d = int(rng.integers(1, 8))
            V = rng.standard_normal((n, d))
            V = np.array([v / lp_norm(v, p) for v in V])
            ff = FunctionalFamily(counting_space(n), p, V, [duality_functional(v, p) for v in V])
            if gram_sum_condition(ff) >= -1e-9:
                r = check_functional_rankin(ff)
                part_b &= r.satisfied and r.coherence >= -1 / (n - 1) - 1e-9
                valid += 1
            else:
                try:
                    check_functional_rankin(ff)
                    part_b = False
                except PreconditionViolation as exc:
                    part_b &= "iii" in exc.failures
                rejected += 1
        counts[p] = (valid, rejected)
    elapsed = time.perf_counter() - t0
    ok = part_a and part_b and elapsed < 60
    detail = ", ".join(f"p={p:g}: {v} ok/{r} rejected" for p, (v, r) in counts.items())
    assert record_criterion("AC8 Banach reduction and validity", ok,
                            f"p=2 max diff {worst:.1e}; {detail}; {elapsed:.1f}s")


def test_ac9_gradient_correctness(rng):
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 9))
        d = int(rng.integers(1, 6))
        X = random_unit_rows(rng, n, d)
        space = counting_space(n)
        for T in (1.0, 0.1, 0.01):
            _, g = smoothed_objective(VectorFamily(space, X), T)

            def f(Y):
                return smoothed_objective(VectorFamily(space, Y, mode="raw"), T)[0]

            fd = central_difference_gradient(f, X, h=1e-6)
            worst = max(worst, float(np.linalg.norm(g - fd) / np.linalg.norm(g)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-5 and elapsed < 10
    assert record_criterion("AC9 gradient correctness", ok,
                            f"max rel err {worst:.1e}, {elapsed:.2f}s")


def _bits(values):
    return [struct.pack("<d", float(v)) for v in values]


def _floats(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _floats(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _floats(v)
    elif isinstance(obj, float):
        yield obj


def test_ac10_determinism_and_round_trip(rng, tmp_path, capsys):
    t0 = time.perf_counter()
    space_file = tmp_path / "space.json"
    space_file.write_text(dumps(space_document(MeasureSpace([1.0, 2.0, 0.5, 1.5, 1.0]))))
    outputs = []
    for _ in range(2):
        main(["optimize", str(space_file), "--dim", "3", "--restarts", "3",
              "--seed", "12345", "--json"])
        out = capsys.readouterr().out
        outputs.append("\n".join(ln for ln in out.splitlines() if '"wall_time"' not in ln))
    deterministic = outputs[0] == outputs[1]

    exact = True
    for k in range(1000):
        n = int(rng.integers(1, 15))
        d = int(rng.integers(1, 8))
        w = np.exp(rng.uniform(-30, 30, size=n))
        X = rng.standard_normal((n, d)) * np.exp(rng.uniform(-20, 20, size=(n, d)))
        space = MeasureSpace(w)
        kind = k % 4
        if kind == 0:
            back = parse_space(dumps(space_document(space)))
            exact &= _bits(back.weights) == _bits(w)
        elif kind == 1:
            fam = VectorFamily(space, X, mode="raw")
            back = parse_family(dumps(family_document(fam)))
            exact &= _bits(back.vectors.ravel()) == _bits(X.ravel())
            exact &= _bits(back.weights) == _bits(w)
        elif kind == 2:
            p = [1.0, 1.5, 2.0, 3.0, math.inf][k % 5]
            ff = FunctionalFamily(space, p, X, rng.standard_normal((n, d)))
            back = parse_functional_family(dumps(functional_family_document(ff)))
            exact &= back == ff
        else:
            fam = VectorFamily(space, random_unit_rows(rng, n, d))
            doc = {"format": "rankin/report", "version": 1,
                   "payload": to_jsonable({"decomposition": proof_decomposition(fam),
                                           "family": fam})}
            back = loads(dumps(doc))
            exact &= back == doc and _bits(_floats(back)) == _bits(_floats(doc))
    elapsed = time.perf_counter() - t0
    ok = deterministic and exact and elapsed < 10
    assert record_criterion("AC10 determinism and round-trip", ok,
                            f"reports identical={deterministic}, 1000 documents exact={exact}, "
                            f"{elapsed:.2f}s")
