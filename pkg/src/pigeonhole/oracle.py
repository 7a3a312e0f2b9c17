"""
Numeric integration oracle for the post-selected probabilities.

The post-selected amplitude is rebuilt pointwise from the branch structure
(kick displacements and post-selection phases) and ``|amplitude|**2`` is
integrated over the six transverse coordinates in two independent ways:

* importance-sampled Monte Carlo, and
* tensor-product Gauss-Hermite quadrature, one 1-D rule per coordinate and
  branch pair, since the integrand is a sum of 64 separable Gaussian products.

Nothing here uses the closed forms or the Gram matrix. The oracle uses
``sigma = 1``; only ``x = a / sigma`` matters.

Coordinates of a point are ordered ``(x1, x2, x3, y1, y2, y3)``.

Monte Carlo streams
-------------------
Samples are drawn in blocks of ``BLOCK_SIZE``. Block ``k`` uses
``numpy.random.default_rng(numpy.random.SeedSequence([seed, k]))``, and
block statistics are merged in block order, so the estimate depends only on
``(seed, samples)`` and not on how many worker threads are used.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InsufficientSamples, NegativeStrength, OrderOutOfRange
from .pathspace import _signs, postselection_phases
from .profiles import Convention, all_kick_displacements

__all__ = [
    "IntegrationResult",
    "BLOCK_SIZE",
    "MIN_SAMPLES",
    "branch_centers",
    "u_matrix",
    "postselected_amplitude_at",
    "integrate_mc",
    "integrate_quad",
    "quad_expectation_u",
]

BLOCK_SIZE = 1 << 16
MIN_SAMPLES = 10_000
MIN_ORDER, MAX_ORDER = 4, 64


@dataclass(frozen=True)
class IntegrationResult:
    """Numeric estimate of a post-selected probability.

    ``error`` is the sample standard error for Monte Carlo and the
    order-doubling difference for quadrature.
    """

    value: float
    error: float
    samples_or_order: int
    method: str
    seed: Optional[int] = None

    @property
    def std_error(self) -> float:
        return self.error

    @property
    def est_error(self) -> float:
        return self.error


def _check_x(x):
    if x < 0:
        raise NegativeStrength(f"interaction strength x must be >= 0, got {x}")


def branch_centers(x: float) -> np.ndarray:
    """Profile centres of the 8 branches as 6-vectors ``(x1, x2, x3, y1, y2, y3)``."""
    d = x * all_kick_displacements()          # (8, particle, axis)
    return d.transpose(0, 2, 1).reshape(8, 6)


def u_matrix() -> np.ndarray:
    """The symmetry operation as a 6x6 orthogonal matrix on point coordinates.

    Each particle's position is rotated by +2pi/3 and the result is handed to
    the next particle label (1 -> 2 -> 3 -> 1).
    """
    c, s = np.cos(2 * np.pi / 3), np.sin(2 * np.pi / 3)
    m = np.zeros((6, 6))
    for src in range(3):
        dst = (src + 1) % 3
        m[dst, src] = c
        m[dst, 3 + src] = -s
        m[3 + dst, src] = s
        m[3 + dst, 3 + src] = c
    return m


def _log_profile(points, centers, width):
    # log of the product of three unit-norm 2-D Gaussians; points (..., 6), centers (6,)
    r2 = np.sum((points - centers) ** 2, axis=-1)
    return -r2 / (2 * width * width) - 3 * np.log(width * np.sqrt(np.pi))


def postselected_amplitude_at(points, x: float, convention=Convention.EQ7, post_signs=(1, 1, 1)):
    """Post-selected amplitude ``sum_b c_b / (2 sqrt 2) * prod_i F(r_i; a d_i(b))``.

    ``points`` has shape ``(..., 6)``; the result has shape ``points.shape[:-1]``.
    """
    _check_x(x)
    width = Convention.parse(convention).width(1.0)
    points = np.asarray(points, dtype=float)
    c = postselection_phases(post_signs)
    centers = branch_centers(x)
    amp = np.zeros(points.shape[:-1], dtype=complex)
    for cb, center in zip(c, centers):
        amp = amp + cb * np.exp(_log_profile(points, center, width))
    return amp / np.sqrt(8.0)


def _mc_block(k, n, seed, x, convention, post_signs, proposal):
    rng = np.random.default_rng(np.random.SeedSequence([seed, k]))
    width = Convention.parse(convention).width(1.0)
    centers = branch_centers(x)
    # |F|^2 of each particle is a normal density with per-axis std width/sqrt(2)
    std = width / np.sqrt(2.0)
    pts = rng.normal(0.0, std, size=(n, 6))
    if proposal == "mixture":
        pts += centers[rng.integers(0, 8, size=n)]
        # sum of the 8 branch densities, each |psi_b|^2
        log_q = np.stack([2 * _log_profile(pts, cb, width) for cb in centers])
        q = np.mean(np.exp(log_q), axis=0)
    else:
        q = np.exp(2 * _log_profile(pts, np.zeros(6), width))
    f = np.abs(postselected_amplitude_at(pts, x, convention, post_signs)) ** 2 / 8.0
    w = f / q
    mean = w.mean()
    return n, mean, float(np.sum((w - mean) ** 2))


def integrate_mc(x: float, convention=Convention.EQ7, post_signs=(1, 1, 1), samples: int = 1_000_000,
                 seed: int = 0, proposal: str = "mixture", workers: int = 1) -> IntegrationResult:
    """Monte Carlo estimate of ``K(|amplitude|**2) / 8``.

    Parameters
    ----------
    proposal : {"mixture", "centered"}
        ``"centered"`` samples from the undisplaced profile density. Its
        weights have variance growing like ``exp(3 x**2)``, so beyond
        ``x ~ 2`` the estimate and its error bar stop being trustworthy.
        ``"mixture"`` samples from the equal mixture of all 8 branch
        densities; by Cauchy-Schwarz the weight ``f/q`` is then at most 1.
        The two coincide at ``x = 0``.
    workers : int
        Thread count; does not change the result.
    """
    _check_x(x)
    if samples < MIN_SAMPLES:
        raise InsufficientSamples(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if proposal not in ("mixture", "centered"):
        raise ValueError(f"unknown proposal {proposal!r}")
    _signs(post_signs)
    sizes = [BLOCK_SIZE] * (samples // BLOCK_SIZE)
    if samples % BLOCK_SIZE:
        sizes.append(samples % BLOCK_SIZE)

    def run(k):
        return _mc_block(k, sizes[k], seed, x, convention, post_signs, proposal)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(run, range(len(sizes))))
    else:
        blocks = [run(k) for k in range(len(sizes))]

    # pairwise (Chan et al.) merge of block means and squared deviations
    n, mean, m2 = blocks[0]
    for nb, mb, m2b in blocks[1:]:
        tot = n + nb
        delta = mb - mean
        mean = mean + delta * nb / tot
        m2 = m2 + m2b + delta * delta * n * nb / tot
        n = tot
    std_error = np.sqrt(m2 / (n - 1) / n)
    return IntegrationResult(float(mean), float(std_error), samples, f"mc-{proposal}", seed)


def _check_order(order):
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise OrderOutOfRange(f"quadrature order must be in [{MIN_ORDER}, {MAX_ORDER}], got {order}")


def _pair_integrals(left, right, width, order, axis_order=None):
    """``int F(r; left) F(r; right) d^6 r`` for every pair of rows, by Gauss-Hermite.

    ``left`` is ``(m, 6)``, ``right`` is ``(n, 6)``; returns ``(m, n)``.
    """
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    axes = range(6) if axis_order is None else axis_order
    out = np.ones((left.shape[0], right.shape[0]))
    for k in axes:
        alpha = left[:, k][:, None, None]
        beta = right[:, k][None, :, None]
        # substitute t = width * u; weight exp(-u^2) is absorbed by hermgauss
        g = np.exp(nodes * (alpha + beta) / width - (alpha ** 2 + beta ** 2) / (2 * width * width))
        out = out * (g @ weights) / np.sqrt(np.pi)
    return out


def _quad_probability(x, convention, post_signs, order, axis_order=None):
    width = Convention.parse(convention).width(1.0)
    c = postselection_phases(post_signs)
    centers = branch_centers(x)
    s = _pair_integrals(centers, centers, width, order, axis_order)
    return float(np.real(np.vdot(c, s @ c))) / 64.0


def integrate_quad(x: float, convention=Convention.EQ7, post_signs=(1, 1, 1), order: int = 40,
                   axis_order=None) -> IntegrationResult:
    """Gauss-Hermite estimate of ``K(|amplitude|**2) / 8``.

    The error estimate is the difference from the same rule at twice the order.
    The grid is centred at the origin for every branch pair, so accuracy
    degrades once the kicks reach several widths (beyond ``x ~ 5`` under EQ7
    at order 40); the error estimate tracks this.
    ``axis_order`` permutes the order in which the six 1-D factors are
    multiplied; the result must not depend on it.
    """
    _check_x(x)
    _check_order(order)
    value = _quad_probability(x, convention, post_signs, order, axis_order)
    finer = _quad_probability(x, convention, post_signs, 2 * order, axis_order)
    return IntegrationResult(value, abs(finer - value), order, "gauss-hermite")


def quad_expectation_u(x: float, convention=Convention.EQ7, order: int = 40) -> IntegrationResult:
    """Gauss-Hermite estimate of ``<phi_1|U|phi_1>``.

    ``(U psi)(r) = psi(U^-1 r)``; for an isotropic product profile centred at
    ``C`` this is the same profile centred at ``U C``.
    """
    _check_x(x)
    _check_order(order)
    width = Convention.parse(convention).width(1.0)
    centers = branch_centers(x)
    moved = centers @ u_matrix().T

    def value(n):
        s = _pair_integrals(centers, moved, width, n)
        return float(np.mean(np.diag(s)))

    v = value(order)
    return IntegrationResult(v, abs(value(2 * order) - v), order, "gauss-hermite")
