"""
Discrete path algebra for three particles in a two-arm interferometer.

The path Hilbert space is spanned by the eight configurations
``|LLL>, |LLR>, ..., |RRR>`` in lexicographic order with ``L < R``, so the
index of a configuration is its arm pattern read as a binary number with
``R = 1``.

Only diagonal (computational-basis) projectors are modelled. They are
represented by their support, a set of configuration indices.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegeneratePostSelection

__all__ = [
    "PathConfig",
    "CONFIGS",
    "DiscreteState",
    "DiagonalProjector",
    "Interference",
    "plus_state",
    "post_state",
    "postselection_phases",
    "weak_value",
    "strong_conditional_mean",
    "hamming",
    "interference_sign",
    "config_pairs",
]

#: Below this modulus of <post|pre> the weak value is undefined.
WEAK_VALUE_FLOOR = 1e-14
#: Below this joint post-selection probability the conditional mean is undefined.
STRONG_FLOOR = 1e-28

_ARMS = ("L", "R")


@dataclass(frozen=True, order=True)
class PathConfig:
    """Arm assignment of the three particles, e.g. ``PathConfig("LLR")``."""

    arms: tuple

    def __post_init__(self):
        arms = tuple(self.arms)
        if len(arms) != 3 or any(a not in _ARMS for a in arms):
            raise ValueError(f"expected three arms from {_ARMS}, got {self.arms!r}")
        object.__setattr__(self, "arms", arms)

    @classmethod
    def from_index(cls, index: int) -> "PathConfig":
        if not 0 <= index < 8:
            raise ValueError(f"configuration index must be in 0..7, got {index}")
        return cls(tuple(_ARMS[(index >> shift) & 1] for shift in (2, 1, 0)))

    @property
    def index(self) -> int:
        return 4 * (self.arms[0] == "R") + 2 * (self.arms[1] == "R") + (self.arms[2] == "R")

    @property
    def r_count(self) -> int:
        return self.arms.count("R")

    def complement(self) -> "PathConfig":
        """Configuration with every particle moved to the other arm."""
        return PathConfig(tuple("R" if a == "L" else "L" for a in self.arms))

    # L<->R relabelling of the arms is the same map as the complement
    flip = complement

    def shares_arm(self, i: int, j: int) -> bool:
        return self.arms[i] == self.arms[j]

    def __str__(self):
        return "".join(self.arms)

    def __repr__(self):
        return f"PathConfig({str(self)!r})"


CONFIGS = tuple(PathConfig.from_index(k) for k in range(8))


def _as_config(b) -> PathConfig:
    if isinstance(b, PathConfig):
        return b
    if isinstance(b, (int, np.integer)):
        return PathConfig.from_index(int(b))
    return PathConfig(tuple(b))


@dataclass(frozen=True)
class DiscreteState:
    """Complex amplitudes over the eight path configurations."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (8,):
            raise ValueError(f"expected 8 amplitudes, got shape {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __getitem__(self, b) -> complex:
        return complex(self.amplitudes[_as_config(b).index])

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    @property
    def normalized(self) -> bool:
        return abs(self.norm ** 2 - 1.0) <= 1e-12

    def conj(self) -> "DiscreteState":
        return DiscreteState(self.amplitudes.conj())

    def inner(self, other: "DiscreteState") -> complex:
        """Return ``<self|other>``."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True)
class DiagonalProjector:
    """Projector onto a set of path configurations."""

    support: frozenset

    def __post_init__(self):
        support = frozenset(_as_config(b).index for b in self.support)
        object.__setattr__(self, "support", support)

    @classmethod
    def of(cls, configs: Iterable) -> "DiagonalProjector":
        return cls(frozenset(configs))

    @classmethod
    def identity(cls) -> "DiagonalProjector":
        return cls(frozenset(range(8)))

    @classmethod
    def empty(cls) -> "DiagonalProjector":
        return cls(frozenset())

    @classmethod
    def same(cls, *particles: int) -> "DiagonalProjector":
        """Particles (0-based) all in the same arm, whichever it is.

        ``same(0, 1)`` is the two-particle "same path" projector on
        particles 1 and 2; ``same(0, 1, 2)`` is ``|LLL><LLL| + |RRR><RRR|``.
        """
        if len(particles) < 2 or len(set(particles)) != len(particles):
            raise ValueError("need at least two distinct particles")
        return cls(frozenset(
            b.index for b in CONFIGS if len({b.arms[p] for p in particles}) == 1
        ))

    @classmethod
    def arms(cls, assignment: dict) -> "DiagonalProjector":
        """Projector fixing the arms of some particles, e.g. ``{0: "L", 1: "R"}``."""
        return cls(frozenset(
            b.index for b in CONFIGS
            if all(b.arms[p] == arm for p, arm in assignment.items())
        ))

    def complement(self) -> "DiagonalProjector":
        return DiagonalProjector(frozenset(range(8)) - self.support)

    def __or__(self, other: "DiagonalProjector") -> "DiagonalProjector":
        return DiagonalProjector(self.support | other.support)

    def __and__(self, other: "DiagonalProjector") -> "DiagonalProjector":
        return DiagonalProjector(self.support & other.support)

    def __contains__(self, b) -> bool:
        return _as_config(b).index in self.support

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(8, dtype=bool)
        m[list(self.support)] = True
        return m

    @property
    def configs(self) -> tuple:
        return tuple(CONFIGS[k] for k in sorted(self.support))

    def apply(self, state: DiscreteState) -> DiscreteState:
        return DiscreteState(np.where(self.mask, state.amplitudes, 0.0))


def _signs(signs) -> tuple:
    if isinstance(signs, str):
        signs = [+1 if s == "+" else -1 if s == "-" else None for s in signs]
    signs = tuple(int(s) for s in signs) if signs is not None else ()
    if len(signs) != 3 or any(s not in (1, -1) for s in signs):
        raise ValueError(f"expected three signs of +1/-1, got {signs!r}")
    return signs


def _product_state(single: Sequence[np.ndarray]) -> DiscreteState:
    amps = single[0]
    for vec in single[1:]:
        amps = np.kron(amps, vec)
    return DiscreteState(amps)


def plus_state() -> DiscreteState:
    """``|+++>`` with ``|+> = (|L> + |R>)/sqrt(2)``."""
    plus = np.array([1.0, 1.0]) / np.sqrt(2.0)
    return _product_state([plus] * 3)


def post_state(signs=(1, 1, 1)) -> DiscreteState:
    """Detector state ``|s1 i>|s2 i>|s3 i>`` with ``|+-i> = (|L> +- i|R>)/sqrt(2)``.

    ``signs`` is a length-3 sequence of +1/-1 or a string such as ``"+-+"``.
    """
    vecs = [np.array([1.0, s * 1j]) / np.sqrt(2.0) for s in _signs(signs)]
    return _product_state(vecs)


def postselection_phases(signs=(1, 1, 1), convention: str = "row") -> np.ndarray:
    """Unnormalized post-selection coefficients ``c_b`` over the 8 branches.

    ``convention="row"`` gives ``2*sqrt(2) * post_state(signs)``; for
    ``(+,+,+)`` this is ``i**r_count(b)``, i.e. ``(1, i, i, -1, i, -1, -1, -i)``.
    ``convention="bra"`` gives the literal bra coefficients, which are the
    complex conjugate. Every probability is invariant under the choice.
    """
    c = post_state(signs).amplitudes * 2.0 * np.sqrt(2.0)
    if convention == "row":
        return c
    if convention == "bra":
        return c.conj()
    raise ValueError(f"unknown phase convention {convention!r}")


def _transition(p: DiagonalProjector, pre: DiscreteState, post: DiscreteState) -> complex:
    return complex(np.sum(np.conj(post.amplitudes[p.mask]) * pre.amplitudes[p.mask]))


def weak_value(p: DiagonalProjector, pre: DiscreteState, post: DiscreteState) -> complex:
    """Weak value ``<post|P|pre> / <post|pre>`` of a diagonal projector.

    Raises
    ------
    DegeneratePostSelection
        If ``|<post|pre>| <= 1e-14``.
    """
    denom = post.inner(pre)
    if abs(denom) <= WEAK_VALUE_FLOOR:
        raise DegeneratePostSelection(f"<post|pre> = {denom:.3g} is zero; weak value undefined")
    return _transition(p, pre, post) / denom


def strong_conditional_mean(p: DiagonalProjector, pre: DiscreteState, post: DiscreteState) -> float:
    """Probability that a sharp measurement of ``p`` gave 1, given post-selection on ``post``.

    The projective measurement of ``p`` sits between preparation and
    post-selection, so the two outcome branches add incoherently.
    """
    yes = abs(_transition(p, pre, post)) ** 2
    no = abs(_transition(p.complement(), pre, post)) ** 2
    total = yes + no
    if total <= STRONG_FLOOR:
        raise DegeneratePostSelection("post-selection has zero probability after the measurement")
    return yes / total


def hamming(b, b2) -> int:
    """Number of particles whose arm differs between two configurations."""
    b, b2 = _as_config(b), _as_config(b2)
    return sum(x != y for x, y in zip(b.arms, b2.arms))


class Interference(enum.Enum):
    NEUTRAL = "neutral"
    CONSTRUCTIVE = "constructive"
    DESTRUCTIVE = "destructive"


def interference_sign(b, b2) -> Interference:
    """Sign of the cross term ``2 Re(c_b conj(c_b2))`` under all-same-detector post-selection.

    With ``c_b = i**r_count(b)`` the cross term is ``2 cos(pi * dk / 2)`` where
    ``dk = r_count(b) - r_count(b2)``: zero for odd ``dk``, positive for
    ``dk = 0 mod 4`` and negative for ``dk = 2 mod 4``. An odd ``dk`` is the
    same as an odd Hamming distance, but for even distances the rule is in
    terms of ``dk``: ``LLR`` vs ``LRL`` are at distance 2 yet interfere
    constructively.
    """
    b, b2 = _as_config(b), _as_config(b2)
    if b == b2:
        raise ValueError("interference sign needs two distinct configurations")
    dk = (b.r_count - b2.r_count) % 4
    if dk % 2:
        return Interference.NEUTRAL
    return Interference.CONSTRUCTIVE if dk == 0 else Interference.DESTRUCTIVE


def config_pairs():
    """All 28 unordered pairs of distinct configurations."""
    return itertools.combinations(CONFIGS, 2)
