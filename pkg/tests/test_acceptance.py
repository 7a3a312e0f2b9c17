"""Exit criteria for the package; one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL table in the
terminal summary.
"""
import itertools
import time

import numpy as np
import pytest

from pigeonhole import cli
from pigeonhole import observables as obs
from pigeonhole.pathspace import (
    CONFIGS,
    DiagonalProjector,
    Interference,
    config_pairs,
    hamming,
    interference_sign,
    plus_state,
    post_state,
    weak_value,
)
from pigeonhole.oracle import integrate_mc, integrate_quad
from pigeonhole.profiles import Convention, gram_matrix, overlap, triangle_vectors, u_overlap

GRID = np.round(np.arange(0, 5.0 + 1e-9, 0.1), 10)
ORACLE_POINTS = [0.0, 0.5, 1.0, 1.43, 2.0, 4.0]
LAMBDAS = [0.5, 2.0, 10.0]
# |MC - exact| at x = 0 is pure rounding: the weights are constant there
ROUNDOFF = 1e-14


def eq7(x):
    return (1 + 1.5 * np.exp(-5 / 8 * x * x) - 1.5 * np.exp(-3 / 8 * x * x)) / 8


def test_weak_values(criterion):
    criterion(1, "weak values: same_12 = 0, same_123 = -1/2 (1e-14)")
    pre, post = plus_state(), post_state((1, 1, 1))
    assert abs(weak_value(DiagonalProjector.same(0, 1), pre, post)) <= 1e-14
    assert abs(weak_value(DiagonalProjector.same(0, 1, 2), pre, post) - (-0.5)) <= 1e-14


def test_coincidence_closed_form(criterion):
    criterion(2, "coincidence probability: closed form and Gram route on x = 0..5 (1e-12)")
    for x in GRID:
        closed = obs.p_all_same_closed(x, Convention.EQ7)
        assert abs(closed - eq7(x)) <= 1e-12
        assert abs(obs.p_all_same_gram(x, Convention.EQ7) - closed) <= 1e-12


def test_oracle_agreement(criterion):
    criterion(3, "oracles: quad order 40 (1e-9), MC 1e6 samples (3 s.e.), under 2 min")
    start = time.perf_counter()
    for x in ORACLE_POINTS:
        exact = obs.p_all_same_closed(x, Convention.EQ7)
        quad = integrate_quad(x, Convention.EQ7, order=40)
        assert abs(quad.value - exact) <= 1e-9, (x, quad)
        mc = integrate_mc(x, Convention.EQ7, samples=1_000_000, seed=2024)
        assert abs(mc.value - exact) <= 3 * mc.std_error + ROUNDOFF, (x, mc)
    assert time.perf_counter() - start <= 120


def test_minimum(criterion):
    criterion(4, "minimum: x* = 2 sqrt(ln 5/3) (1e-9), p* = (1 - (3/5)^(5/2))/8 (1e-12)")
    rep = obs.find_minimum(Convention.EQ7)
    assert abs(rep.x_star - 2 * np.sqrt(np.log(5 / 3))) <= 1e-9
    assert abs(rep.p_star - (1 - 0.6 ** 2.5) / 8) <= 1e-12
    assert rep.p_star == pytest.approx(0.0901431, abs=1e-7)


def test_witness_closed_form(criterion):
    criterion(5, "witness: linear variant = 3/4 (1 - exp(-5x^2/4)) under EQ9 (1e-12); quadratic differs")
    for x in GRID:
        linear = obs.p_int(x, Convention.EQ9, "linear")
        assert abs(linear - 0.75 * (1 - np.exp(-1.25 * x * x))) <= 1e-12
    assert obs.p_int(30.0, Convention.EQ9, "linear") == pytest.approx(0.75, abs=1e-12)
    assert obs.p_int(30.0, Convention.EQ9, "quadratic") == pytest.approx(15 / 16, abs=1e-12)
    assert abs(obs.p_int(1.0, Convention.EQ9, "quadratic") - obs.p_int(1.0, Convention.EQ9, "linear")) > 0.1


def test_limits_and_flat_start(criterion):
    criterion(6, "limits at x = 10 (1e-6) and vanishing slope at x = 0 (1e-6)")
    assert abs(obs.p_all_same_closed(10.0) - 0.125) <= 1e-6
    assert abs(obs.p_all_same_gram(10.0) - 0.125) <= 1e-6
    assert np.all(np.abs(obs.output_distribution(10.0) - 0.125) <= 1e-6)

    h = 1e-4
    for conv in Convention:
        # central differences on the even extension to x < 0
        assert abs(obs._closed(h, conv) - obs._closed(-h, conv)) / (2 * h) <= 1e-6
        for variant in ("linear", "quadratic"):
            assert abs(obs._p_int(h, conv, variant) - obs._p_int(-h, conv, variant)) / (2 * h) <= 1e-6
        # and a second-order one-sided stencil through the public API
        for f in (lambda x: obs.p_all_same_gram(x, conv), lambda x: obs.p_int(x, conv, "linear"),
                  lambda x: obs.p_int(x, conv, "quadratic")):
            assert abs(-3 * f(0.0) + 4 * f(h) - f(2 * h)) / (2 * h) <= 1e-6


def test_interference_classification(criterion):
    criterion(7, "interference: 28 pairs, neutral iff odd distance, sign = Re(i^dk), LLR/LRL constructive")
    pairs = list(config_pairs())
    assert len(pairs) == 28
    sign_of = {Interference.CONSTRUCTIVE: 1, Interference.NEUTRAL: 0, Interference.DESTRUCTIVE: -1}
    for b, b2 in pairs:
        kind = interference_sign(b, b2)
        assert (kind is Interference.NEUTRAL) == (hamming(b, b2) % 2 == 1)
        re = (1j ** (b.r_count - b2.r_count)).real
        assert sign_of[kind] == int(round(re))
    assert interference_sign("LLR", "LRL") is Interference.CONSTRUCTIVE
    assert hamming("LLR", "LRL") == 2


def test_structural_invariants(criterion):
    criterion(8, "Gram PSD, scale invariance for lambda in {0.5, 2, 10}, EQ9(x) = EQ7(x sqrt 2) (1e-12)")
    for conv in Convention:
        for a in np.linspace(0, 6, 25):
            assert np.linalg.eigvalsh(gram_matrix(a, 1.0, conv)).min() >= -1e-10

    v = triangle_vectors()
    for conv, a, sigma, lam in itertools.product(Convention, [0.3, 1.0, 2.7], [0.5, 1.0, 1.9], LAMBDAS):
        assert np.max(np.abs(gram_matrix(lam * a, lam * sigma, conv) - gram_matrix(a, sigma, conv))) <= 1e-12
        assert abs(overlap(v[0], v[1], lam * a, lam * sigma, conv) - overlap(v[0], v[1], a, sigma, conv)) <= 1e-12
        for b in CONFIGS:
            assert abs(u_overlap(b, lam * a, lam * sigma, conv) - u_overlap(b, a, sigma, conv)) <= 1e-12

    for x in GRID:
        xs = x * np.sqrt(2)
        assert abs(obs.p_all_same_closed(x, Convention.EQ9) - obs.p_all_same_closed(xs, Convention.EQ7)) <= 1e-12
        assert abs(obs.p_all_same_gram(x, Convention.EQ9) - obs.p_all_same_gram(xs, Convention.EQ7)) <= 1e-12
        for variant in ("linear", "quadratic"):
            assert abs(obs.p_int(x, Convention.EQ9, variant) - obs.p_int(xs, Convention.EQ7, variant)) <= 1e-12


def test_sweep_determinism(criterion, tmp_path):
    criterion(9, "repeated seeded sweeps write byte-identical CSV files")
    args = ["sweep", "--x-min", "0", "--x-max", "5", "--steps", "11", "--convention", "eq7",
            "--oracle", "mc", "--samples", "100000", "--seed", "42"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.main(args + ["--out", str(a)]) == 0
    assert cli.main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("# convention=eq7\n")
