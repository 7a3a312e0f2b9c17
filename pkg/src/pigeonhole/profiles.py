"""
Transverse Gaussian modes of the three particles.

Each particle carries an isotropic, real, unit-norm 2-D Gaussian profile.
Particles sharing an arm repel each other, which shifts their profile
centres by a kick of length ``a`` along the triangle directions. Everything
observable depends on ``x = a / sigma`` only.

Two width conventions are supported, because the two closed forms for the
post-selected coincidence probability and for the symmetry witness
correspond to Gaussians of different widths:

``EQ7``
    single-particle width ``sqrt(2) * sigma``; overlap
    ``exp(-a**2 |u - w|**2 / (8 sigma**2))``.
``EQ9``
    single-particle width ``sigma``; overlap
    ``exp(-a**2 |u - w|**2 / (4 sigma**2))``.

They are related by ``x -> x / sqrt(2)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import NegativeStrength, NonpositiveWidth
from .pathspace import CONFIGS, PathConfig, _as_config

__all__ = [
    "Convention",
    "GaussianProfile",
    "BranchProfile",
    "DressedState",
    "triangle_vectors",
    "rotation",
    "kick_displacements",
    "all_kick_displacements",
    "u_transform",
    "overlap",
    "gram_matrix",
    "u_overlap",
]


class Convention(str, enum.Enum):
    EQ7 = "eq7"
    EQ9 = "eq9"

    @classmethod
    def parse(cls, value) -> "Convention":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())

    @property
    def kernel_denominator(self) -> float:
        """``k`` in the overlap ``exp(-a**2 |u - w|**2 / (k sigma**2))``."""
        return 8.0 if self is Convention.EQ7 else 4.0

    def width(self, sigma: float) -> float:
        """Gaussian width ``s`` of ``F(r) ~ exp(-|r - c|**2 / (2 s**2))``."""
        return np.sqrt(2.0) * sigma if self is Convention.EQ7 else sigma


def _check_width(sigma):
    if not sigma > 0:
        raise NonpositiveWidth(f"sigma must be positive, got {sigma}")


def _check_strength(a, name="a"):
    if a < 0:
        raise NegativeStrength(f"{name} must be non-negative, got {a}")


def triangle_vectors() -> np.ndarray:
    """Unit vectors to the vertices of the initial triangle, shape ``(3, 2)``."""
    h = np.sqrt(3.0) / 2.0
    return np.array([[1.0, 0.0], [-0.5, h], [-0.5, -h]])


def rotation(angle: float = 2.0 * np.pi / 3.0) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def kick_displacements(b) -> np.ndarray:
    """Profile displacements of the three particles in branch ``b``, in units of ``a``.

    Particle ``i`` is pushed away from its co-occupants: it moves by
    ``-sum(v_j)`` over the other particles ``j`` in the same arm. A lone
    particle stays put, and all three together end up at ``(v1, v2, v3)``
    because the triangle vectors sum to zero.

    Returns
    -------
    ndarray, shape (3, 2)
    """
    b = _as_config(b)
    v = triangle_vectors()
    out = np.zeros((3, 2))
    for i in range(3):
        for j in range(3):
            if j != i and b.shares_arm(i, j):
                out[i] -= v[j]
    return out


def all_kick_displacements() -> np.ndarray:
    """Stacked displacements for all 8 branches, shape ``(8, 3, 2)``."""
    return np.array([kick_displacements(b) for b in CONFIGS])


def u_transform(centers: np.ndarray) -> np.ndarray:
    """Centres of ``U psi`` given the per-particle centres of a product profile ``psi``.

    ``U`` rotates the plane by 2pi/3 (``v1 -> v2 -> v3 -> v1``) and relabels
    the particles cyclically, so particle ``k`` inherits the rotated centre
    of particle ``k - 1``. With this pairing the triple-occupancy branch is
    invariant. Works on any array whose last two axes are ``(3, 2)``.
    """
    centers = np.asarray(centers, dtype=float)
    rotated = centers @ rotation().T
    return np.roll(rotated, 1, axis=-2)


def overlap(u, w, a: float, sigma: float, convention=Convention.EQ7) -> float:
    """Inner product of two unit-norm Gaussians centred at ``a*u`` and ``a*w``."""
    _check_width(sigma)
    _check_strength(a)
    conv = Convention.parse(convention)
    d2 = float(np.sum((np.asarray(u, float) - np.asarray(w, float)) ** 2))
    return float(np.exp(-(a * a) * d2 / (conv.kernel_denominator * sigma * sigma)))


def _product_overlap(centers1, centers2, a, sigma, conv):
    # centres in units of a; summed over particles and both axes
    d2 = np.sum((centers1 - centers2) ** 2, axis=(-2, -1))
    return np.exp(-(a * a) * d2 / (conv.kernel_denominator * sigma * sigma))


def gram_matrix(a: float, sigma: float = 1.0, convention=Convention.EQ7) -> np.ndarray:
    """8x8 matrix of inner products between the branch profile products."""
    _check_width(sigma)
    _check_strength(a)
    conv = Convention.parse(convention)
    d = all_kick_displacements()
    return _product_overlap(d[:, None], d[None, :], a, sigma, conv)


def u_overlap(b, a: float, sigma: float = 1.0, convention=Convention.EQ7) -> float:
    """``<psi_b | U | psi_b>`` for the branch profile of configuration ``b``."""
    _check_width(sigma)
    _check_strength(a)
    conv = Convention.parse(convention)
    d = kick_displacements(b)
    return float(_product_overlap(d, u_transform(d), a, sigma, conv))


@dataclass(frozen=True)
class GaussianProfile:
    """Real isotropic unit-norm 2-D Gaussian centred at ``center``."""

    center: tuple
    sigma: float
    convention: Convention = Convention.EQ7

    def __post_init__(self):
        _check_width(self.sigma)
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        object.__setattr__(self, "convention", Convention.parse(self.convention))

    @property
    def width(self) -> float:
        return self.convention.width(self.sigma)

    def __call__(self, x, y):
        s = self.width
        r2 = (np.asarray(x) - self.center[0]) ** 2 + (np.asarray(y) - self.center[1]) ** 2
        return np.exp(-r2 / (2.0 * s * s)) / (s * np.sqrt(np.pi))

    def inner(self, other: "GaussianProfile") -> float:
        if other.width != self.width:
            raise ValueError("closed-form inner product needs equal widths")
        d2 = sum((p - q) ** 2 for p, q in zip(self.center, other.center))
        return float(np.exp(-d2 / (4.0 * self.width ** 2)))


@dataclass(frozen=True)
class BranchProfile:
    """Product of the three displaced particle profiles of one branch."""

    branch: PathConfig
    a: float
    sigma: float = 1.0
    convention: Convention = Convention.EQ7

    def __post_init__(self):
        _check_width(self.sigma)
        _check_strength(self.a)
        object.__setattr__(self, "branch", _as_config(self.branch))
        object.__setattr__(self, "convention", Convention.parse(self.convention))

    @property
    def centers(self) -> np.ndarray:
        return self.a * kick_displacements(self.branch)

    @property
    def profiles(self) -> tuple:
        return tuple(GaussianProfile(c, self.sigma, self.convention) for c in self.centers)

    def __call__(self, xs, ys):
        """Evaluate at particle coordinates ``xs = (x1, x2, x3)``, ``ys = (y1, y2, y3)``."""
        out = 1.0
        for f, x, y in zip(self.profiles, xs, ys):
            out = out * f(x, y)
        return out

    def inner(self, other: "BranchProfile") -> float:
        return float(np.prod([p.inner(q) for p, q in zip(self.profiles, other.profiles)]))


@dataclass(frozen=True)
class DressedState:
    """Path superposition with each branch dressed by its transverse profile.

    At ``a = 0`` this is the state right after the first beam splitter; for
    ``a > 0`` it is the state after the repulsion. All eight coefficients are
    ``1 / (2 sqrt(2))``.
    """

    a: float
    sigma: float = 1.0
    convention: Convention = Convention.EQ7
    coefficients: np.ndarray = field(default_factory=lambda: np.full(8, 1.0 / np.sqrt(8.0), dtype=complex))

    def __post_init__(self):
        _check_width(self.sigma)
        _check_strength(self.a)
        object.__setattr__(self, "convention", Convention.parse(self.convention))

    @property
    def x(self) -> float:
        return self.a / self.sigma

    @property
    def branches(self) -> tuple:
        return tuple(BranchProfile(b, self.a, self.sigma, self.convention) for b in CONFIGS)

    def __iter__(self):
        return iter(zip(self.coefficients, self.branches))

    def gram(self) -> np.ndarray:
        return gram_matrix(self.a, self.sigma, self.convention)
