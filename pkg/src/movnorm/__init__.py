"""Moving norms, augmented moving norms and horizons of complex matrices.

The augmented moving norm of a square matrix x is
am(lambda) = ||x - lambda*I|| + lambda under the spectral norm; for
nonexpansive x its horizon is the largest lambda with am(lambda) = 1.
This package computes both quantities, classifies matrices as
nonexpansive / monotone / firmly nonexpansive, and verifies the
identities and inequalities these notions satisfy on random matrix
ensembles.
"""

from .algebra import (
    SpectralRange,
    add,
    adjoint,
    as_element,
    element_from_dict,
    element_to_dict,
    hermitian_range,
    identity,
    is_hermitian,
    is_unitary,
    mul,
    operator_norm,
    scale,
)
from .ensembles import KINDS, EnsembleSpec, draw, generate
from .errors import (
    BadGrid,
    BadSpec,
    ConvergenceError,
    DimensionMismatch,
    MovnormError,
    NegativeLambda,
    NotHermitian,
    NotNonexpansive,
    NotUnitary,
)
from .hermitian import (
    hermitian_am_closed_form,
    hermitian_horizon_closed_form,
    unitary_am_lower_bound_check,
)
from .moving import (
    TOL_FLAT,
    TOL_LAMBDA,
    HorizonResult,
    MovingNormCurve,
    augmented_moving_norm,
    horizon,
    moving_norm,
    sample_curve,
)
from .operators import (
    ClassReport,
    classify,
    fne_gap,
    fne_inner_product_check,
    is_fne,
    is_fne_via_horizon,
    is_monotone,
    is_nonexpansive,
    min_symmetric_eig,
)
from .verify import (
    CHECKS,
    DEFAULT_COUNT,
    DEFAULT_DIMS,
    DEFAULT_TOLERANCES,
    Check,
    TheoremReport,
    default_specs,
    infimum_decomposition_check,
    replay_trial,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "MovnormError",
    "DimensionMismatch",
    "NegativeLambda",
    "NotHermitian",
    "NotUnitary",
    "NotNonexpansive",
    "BadGrid",
    "BadSpec",
    "ConvergenceError",
    "SpectralRange",
    "as_element",
    "identity",
    "add",
    "scale",
    "mul",
    "adjoint",
    "operator_norm",
    "hermitian_range",
    "is_hermitian",
    "is_unitary",
    "element_from_dict",
    "element_to_dict",
    "TOL_LAMBDA",
    "TOL_FLAT",
    "MovingNormCurve",
    "HorizonResult",
    "moving_norm",
    "augmented_moving_norm",
    "sample_curve",
    "horizon",
    "hermitian_am_closed_form",
    "hermitian_horizon_closed_form",
    "unitary_am_lower_bound_check",
    "ClassReport",
    "is_nonexpansive",
    "is_monotone",
    "is_fne",
    "is_fne_via_horizon",
    "fne_inner_product_check",
    "fne_gap",
    "min_symmetric_eig",
    "classify",
    "KINDS",
    "EnsembleSpec",
    "draw",
    "generate",
    "Check",
    "TheoremReport",
    "CHECKS",
    "DEFAULT_TOLERANCES",
    "DEFAULT_DIMS",
    "DEFAULT_COUNT",
    "default_specs",
    "run_all",
    "replay_trial",
    "infimum_decomposition_check",
]
