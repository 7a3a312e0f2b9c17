"""
Headline observables of the interferometer as functions of ``x = a / sigma``.

``p_all_same_*``
    probability that all three particles fire the ``+i`` detectors.
``expectation_u`` / ``p_int``
    rotational-symmetry witness of a pairwise interaction.
``output_distribution``
    probabilities of all 8 detector sign patterns.
``reduced_density``
    path density matrix with the transverse modes traced out.

The closed forms are used for reporting; the Gram-matrix routes build the
same numbers from the branch overlaps and serve as the first cross-check.

A note on the printed minimum: the minimum of the coincidence probability
is ``(1 - (3/5)**(5/2)) / 8``. Without the ``1/8`` prefactor the value would
exceed the global bound ``1/8``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, asdict
from typing import Optional

import numpy as np
from scipy import optimize

from .errors import NegativeStrength
from .pathspace import CONFIGS, postselection_phases
from .profiles import Convention, gram_matrix, u_overlap

__all__ = [
    "SweepRecord",
    "MinimumReport",
    "SIGN_PATTERNS",
    "p_all_same_closed",
    "p_all_same_gram",
    "expectation_u",
    "p_int",
    "find_minimum",
    "output_distribution",
    "reduced_density",
    "sweep",
]

SIGN_PATTERNS = tuple(itertools.product((1, -1), repeat=3))


def _check_x(x):
    if x < 0:
        raise NegativeStrength(f"interaction strength x must be >= 0, got {x}")


def _scale(convention) -> float:
    # EQ9 exponents are twice the EQ7 ones
    return 1.0 if Convention.parse(convention) is Convention.EQ7 else 2.0


def _closed(x, convention):
    k = _scale(convention) * x * x
    return (1.0 + 1.5 * np.exp(-0.625 * k) - 1.5 * np.exp(-0.375 * k)) / 8.0


def _closed_slope(x, convention):
    kappa = _scale(convention)
    k = kappa * x * x
    return 1.5 / 8.0 * kappa * x * (-1.25 * np.exp(-0.625 * k) + 0.75 * np.exp(-0.375 * k))


def _pattern_probability(x, convention, signs) -> float:
    c = postselection_phases(signs)
    g = gram_matrix(abs(x), 1.0, convention)
    value = np.vdot(c, g @ c) / 64.0
    return float(value.real)


def _expectation_u(x, convention):
    return float(np.mean([u_overlap(b, abs(x), 1.0, convention) for b in CONFIGS]))


def _p_int(x, convention, variant):
    e = _expectation_u(x, convention)
    if variant == "linear":
        return 1.0 - e
    if variant == "quadratic":
        return 1.0 - e * e
    raise ValueError(f"variant must be 'linear' or 'quadratic', got {variant!r}")


def p_all_same_closed(x: float, convention=Convention.EQ7) -> float:
    """Closed-form probability that all three particles reach the ``+i`` detectors.

    ``(1 + 1.5 exp(-5 x**2 / 8) - 1.5 exp(-3 x**2 / 8)) / 8`` under EQ7; the
    EQ9 variant doubles both exponents.
    """
    _check_x(x)
    return float(_closed(x, convention))


def p_all_same_gram(x: float, convention=Convention.EQ7) -> float:
    """Same probability from the branch Gram matrix.

    ``(1/64) sum_{b,b'} c_b conj(c_b') G[b, b']`` with ``c_b = i**r_count(b)``.
    """
    _check_x(x)
    return _pattern_probability(x, convention, (1, 1, 1))


def expectation_u(x: float, convention=Convention.EQ7) -> float:
    """``<phi_1|U|phi_1>``: the mean of the per-branch symmetry overlaps.

    Different path branches are orthogonal and ``U`` acts on the profiles
    only, so no cross terms appear.
    """
    _check_x(x)
    return _expectation_u(x, convention)


def p_int(x: float, convention=Convention.EQ7, variant: str = "linear") -> float:
    """Interaction witness from the symmetry overlap.

    ``variant="linear"`` gives ``1 - <U>``, which under EQ9 equals
    ``0.75 (1 - exp(-1.25 x**2))``. ``variant="quadratic"`` gives
    ``1 - <U>**2``, which tends to 15/16 rather than 3/4.
    """
    _check_x(x)
    return _p_int(x, convention, variant)


@dataclass(frozen=True)
class MinimumReport:
    x_star: float
    p_star: float
    iterations: int
    convention: Convention = Convention.EQ7


def find_minimum(convention=Convention.EQ7, upper: float = 4.0, xtol: float = 1e-14) -> MinimumReport:
    """Locate the dip of ``p_all_same_closed`` on ``(0, upper)``.

    The slope is scanned on a coarse grid for a sign change from negative to
    positive, and the bracket is refined by bisection.
    """
    conv = Convention.parse(convention)
    grid = np.linspace(0.0, upper, 401)[1:]
    slope = _closed_slope(grid, conv)
    flips = np.nonzero((slope[:-1] < 0) & (slope[1:] >= 0))[0]
    if flips.size == 0:
        raise RuntimeError(f"no interior minimum found on (0, {upper})")
    lo, hi = grid[flips[0]], grid[flips[0] + 1]
    root, info = optimize.bisect(_closed_slope, lo, hi, args=(conv,), xtol=xtol, rtol=4 * np.finfo(float).eps,
                                 maxiter=200, full_output=True)
    return MinimumReport(float(root), float(_closed(root, conv)), int(info.iterations), conv)


def output_distribution(x: float, convention=Convention.EQ7) -> np.ndarray:
    """Probabilities of the 8 detector sign patterns, ordered as ``SIGN_PATTERNS``.

    Pattern ``(s1, s2, s3)`` means particle ``k`` fired the ``s_k i`` detector;
    the first entry ``(+, +, +)`` is ``p_all_same_gram``.
    """
    _check_x(x)
    return np.array([_pattern_probability(x, convention, s) for s in SIGN_PATTERNS])


def reduced_density(x: float, convention=Convention.EQ7) -> np.ndarray:
    """Path density matrix ``G / 8`` after tracing out the transverse modes."""
    _check_x(x)
    return gram_matrix(x, 1.0, convention).astype(complex) / 8.0


@dataclass(frozen=True)
class SweepRecord:
    x: float
    p_lll_closed: float
    p_lll_gram: float
    p_int_linear: float
    p_int_quadratic: float
    expectation_u: float
    oracle_value: Optional[float] = None
    oracle_err: Optional[float] = None

    @property
    def oracle_dev(self) -> Optional[float]:
        if self.oracle_value is None:
            return None
        return abs(self.oracle_value - self.p_lll_closed)

    def asdict(self):
        return asdict(self)


def sweep(xs, convention=Convention.EQ7, oracle=None) -> list:
    """Evaluate every observable on the grid ``xs``.

    ``oracle`` is an optional callable ``x -> IntegrationResult`` supplying an
    independent estimate of ``p_all_same`` at each point.
    """
    conv = Convention.parse(convention)
    records = []
    for x in np.asarray(xs, dtype=float):
        x = float(x)
        e = expectation_u(x, conv)
        value = err = None
        if oracle is not None:
            res = oracle(x)
            value, err = res.value, res.error
        records.append(SweepRecord(
            x=x,
            p_lll_closed=p_all_same_closed(x, conv),
            p_lll_gram=p_all_same_gram(x, conv),
            p_int_linear=1.0 - e,
            p_int_quadratic=1.0 - e * e,
            expectation_u=e,
            oracle_value=value,
            oracle_err=err,
        ))
    return records
