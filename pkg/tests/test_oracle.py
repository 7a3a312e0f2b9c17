import itertools

import numpy as np
import pytest

from pigeonhole.errors import InsufficientSamples, NegativeStrength, OrderOutOfRange
from pigeonhole.observables import SIGN_PATTERNS, expectation_u, output_distribution, p_all_same_closed
from pigeonhole.oracle import (
    integrate_mc,
    integrate_quad,
    postselected_amplitude_at,
    quad_expectation_u,
    u_matrix,
)
from pigeonhole.profiles import Convention

# double-precision floor for |estimate - exact| when the MC weights are
# constant (x = 0) and the sample standard error collapses to ~1e-20
ROUNDOFF = 1e-14


def gaussian_2d(x, y, width):
    return np.exp(-(x * x + y * y) / (2 * width * width)) / (width * np.sqrt(np.pi))


class TestAmplitude:
    def test_origin_at_zero_strength(self):
        width = Convention.EQ7.width(1.0)
        amp = postselected_amplitude_at(np.zeros(6), 0.0)
        phase_sum = (1 + 1j) ** 3
        assert abs(phase_sum) ** 2 == pytest.approx(8)
        assert amp == pytest.approx(phase_sum / np.sqrt(8) * gaussian_2d(0, 0, width) ** 3)

    @pytest.mark.parametrize("conv", list(Convention))
    def test_factorizes_without_kicks(self, conv):
        pts = np.random.default_rng(0).normal(size=(50, 6))
        width = conv.width(1.0)
        single = [gaussian_2d(pts[:, k], pts[:, 3 + k], width) for k in range(3)]
        expected = (1 + 1j) ** 3 / np.sqrt(8) * single[0] * single[1] * single[2]
        np.testing.assert_allclose(postselected_amplitude_at(pts, 0.0, conv), expected, rtol=1e-12)

    @pytest.mark.parametrize("x", [0.5, 1.43, 3.0])
    def test_symmetric_under_u(self, x):
        pts = np.random.default_rng(1).normal(size=(200, 6))
        amp = postselected_amplitude_at(pts, x)
        np.testing.assert_allclose(postselected_amplitude_at(pts @ u_matrix().T, x), amp, rtol=1e-10, atol=1e-300)

    def test_u_matrix_is_a_rotation(self):
        u = u_matrix()
        np.testing.assert_allclose(u @ u.T, np.eye(6), atol=1e-15)
        np.testing.assert_allclose(np.linalg.matrix_power(u, 3), np.eye(6), atol=1e-14)

    def test_negative_strength(self):
        with pytest.raises(NegativeStrength):
            postselected_amplitude_at(np.zeros(6), -1.0)


class TestMonteCarlo:
    def test_zero_strength(self):
        res = integrate_mc(0.0, samples=100_000, seed=7)
        assert abs(res.value - 0.125) <= 3 * res.std_error + ROUNDOFF

    @pytest.mark.parametrize("conv", list(Convention))
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_matches_closed_form(self, x, conv):
        res = integrate_mc(x, conv, samples=200_000, seed=11)
        assert abs(res.value - p_all_same_closed(x, conv)) <= 3 * res.std_error

    def test_other_detector_patterns(self):
        dist = output_distribution(1.2)
        for k in (1, 3, 6):
            res = integrate_mc(1.2, post_signs=SIGN_PATTERNS[k], samples=200_000, seed=k)
            assert abs(res.value - dist[k]) <= 3 * res.std_error

    def test_deterministic(self):
        a = integrate_mc(1.0, samples=50_000, seed=42)
        b = integrate_mc(1.0, samples=50_000, seed=42)
        assert a == b
        assert integrate_mc(1.0, samples=50_000, seed=43).value != a.value

    def test_independent_of_workers(self):
        a = integrate_mc(1.3, samples=300_000, seed=5, workers=1)
        b = integrate_mc(1.3, samples=300_000, seed=5, workers=4)
        assert a.value == b.value and a.std_error == b.std_error

    def test_error_scaling(self):
        small = integrate_mc(1.0, samples=20_000, seed=3)
        big = integrate_mc(1.0, samples=200_000, seed=3)
        ratio = small.std_error / big.std_error
        assert np.sqrt(10) / 2 <= ratio <= np.sqrt(10) * 2

    def test_centered_proposal_at_moderate_strength(self):
        res = integrate_mc(1.0, samples=200_000, seed=9, proposal="centered")
        assert abs(res.value - p_all_same_closed(1.0)) <= 3 * res.std_error
        mix = integrate_mc(1.0, samples=200_000, seed=9)
        assert mix.std_error < res.std_error

    def test_mixture_weights_bounded(self):
        # f/q <= 1 makes the per-sample variance at most 1/4
        res = integrate_mc(6.0, samples=50_000, seed=1)
        assert res.std_error * np.sqrt(50_000) <= 0.5

    def test_errors(self):
        with pytest.raises(InsufficientSamples):
            integrate_mc(1.0, samples=9_999)
        with pytest.raises(ValueError):
            integrate_mc(1.0, samples=10_000, proposal="uniform")
        with pytest.raises(NegativeStrength):
            integrate_mc(-1.0, samples=10_000)


class TestQuadrature:
    def test_zero_strength(self):
        assert abs(integrate_quad(0.0, order=20).value - 0.125) <= 1e-10

    @pytest.mark.parametrize("conv", list(Convention))
    @pytest.mark.parametrize("x", [0.25, 1.0, 1.43, 3.0, 4.0])
    def test_matches_closed_form(self, x, conv):
        res = integrate_quad(x, conv, order=40)
        assert abs(res.value - p_all_same_closed(x, conv)) <= 1e-9
        assert res.est_error <= 1e-9

    def test_large_shift_flagged_by_error_estimate(self):
        # the fixed grid under-resolves far-displaced branches; the
        # order-doubling estimate must say so
        res = integrate_quad(6.0, "eq9", order=40)
        miss = abs(res.value - p_all_same_closed(6.0, "eq9"))
        assert miss > 1e-9
        assert miss <= 2 * res.est_error

    def test_all_patterns(self):
        dist = output_distribution(0.8, "eq9")
        for k, s in enumerate(SIGN_PATTERNS):
            assert integrate_quad(0.8, "eq9", s, order=30).value == pytest.approx(dist[k], abs=1e-10)

    def test_axis_order_invariance(self):
        base = integrate_quad(1.7, order=40).value
        for perm in list(itertools.permutations(range(6)))[::97]:
            assert abs(integrate_quad(1.7, order=40, axis_order=perm).value - base) <= 1e-12

    def test_order_range(self):
        for bad in (3, 65):
            with pytest.raises(OrderOutOfRange):
                integrate_quad(1.0, order=bad)
        integrate_quad(1.0, order=4)
        integrate_quad(1.0, order=64)

    def test_low_order_error_estimate_is_honest(self):
        res = integrate_quad(4.0, order=4)
        assert abs(res.value - p_all_same_closed(4.0)) <= 10 * res.est_error + 1e-15

    @pytest.mark.parametrize("conv", list(Convention))
    def test_expectation_u(self, conv):
        for x in (0.0, 1.0, 2.5):
            assert abs(quad_expectation_u(x, conv, order=40).value - expectation_u(x, conv)) <= 1e-9
        assert quad_expectation_u(1.0, "eq9").value == pytest.approx(0.464879, abs=1e-6)
