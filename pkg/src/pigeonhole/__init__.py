"""
Three repelling particles with Gaussian transverse modes in a two-arm
Mach-Zehnder interferometer: weak values, post-selected coincidence
probabilities, and a rotational-symmetry interaction witness, each closed
form paired with a numeric integration oracle.
"""
from .errors import (
    DegeneratePostSelection,
    InsufficientSamples,
    InvalidRange,
    NegativeStrength,
    NonpositiveWidth,
    OrderOutOfRange,
    PigeonholeError,
)
from .pathspace import (
    CONFIGS,
    DiagonalProjector,
    DiscreteState,
    Interference,
    PathConfig,
    hamming,
    interference_sign,
    plus_state,
    post_state,
    postselection_phases,
    strong_conditional_mean,
    weak_value,
)
from .profiles import (
    BranchProfile,
    Convention,
    DressedState,
    GaussianProfile,
    gram_matrix,
    kick_displacements,
    overlap,
    triangle_vectors,
    u_overlap,
)
from .observables import (
    MinimumReport,
    SweepRecord,
    expectation_u,
    find_minimum,
    output_distribution,
    p_all_same_closed,
    p_all_same_gram,
    p_int,
    reduced_density,
)
from .oracle import IntegrationResult, integrate_mc, integrate_quad, quad_expectation_u

__version__ = "0.1.0"
