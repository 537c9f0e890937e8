"""Boundary jet interpolation in the Schur class.

Given a point on the unit circle and prescribed asymptotic-expansion
coefficients there, decide whether a Schur-class function realizes them
(no solution / exactly one / infinitely many), construct solutions, and
verify the claims numerically.
"""

from .classify import Classification, Verdict, classify, classify_order1, classify_order2
from .errors import (
    ConstructionError,
    DegenerateSystemError,
    InconsistencyError,
    InputError,
    InsufficientDataError,
    NonUnitDivisorError,
    PoleError,
    PreconditionError,
    SchurJetError,
    UsageError,
)
from .functions import (
    AnalyticFunction,
    BlaschkeProduct,
    Constant,
    LftComposite,
    LftPreimage,
    Polynomial,
)
from .jets import Jet
from .lft import (
    CoefficientMatrix,
    ReducedProblem,
    build_lft,
    lft_apply,
    lft_invert,
    reduce_problem,
)
from .psd import DEFAULT_TOL, PsdReport, hermitian_test, psd_rank, range_consistency
from .structured import (
    BoundaryJet,
    ExtensionData,
    StructuredSet,
    coeff_hankel,
    extension_data,
    lower_toeplitz,
    pick_entry,
    pick_matrix,
    signed_binomial_matrix,
    structured_set,
    symmetry_residual,
)
from .synthesize import SolveResult, fit_schur_polynomial, solve, unique_solution
from .verify import (
    VerificationReport,
    boundary_schwarz_pick,
    disk_sup_norm,
    random_blaschke_problem,
    schwarz_pick_matrix,
    verify_asymptotics,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction",
    "BlaschkeProduct",
    "BoundaryJet",
    "Classification",
    "CoefficientMatrix",
    "Constant",
    "ConstructionError",
    "DEFAULT_TOL",
    "DegenerateSystemError",
    "ExtensionData",
    "InconsistencyError",
    "InputError",
    "InsufficientDataError",
    "Jet",
    "LftComposite",
    "LftPreimage",
    "NonUnitDivisorError",
    "PoleError",
    "Polynomial",
    "PreconditionError",
    "PsdReport",
    "ReducedProblem",
    "SchurJetError",
    "SolveResult",
    "StructuredSet",
    "UsageError",
    "Verdict",
    "VerificationReport",
    "boundary_schwarz_pick",
    "build_lft",
    "classify",
    "classify_order1",
    "classify_order2",
    "coeff_hankel",
    "disk_sup_norm",
    "extension_data",
    "fit_schur_polynomial",
    "hermitian_test",
    "lft_apply",
    "lft_invert",
    "lower_toeplitz",
    "pick_entry",
    "pick_matrix",
    "psd_rank",
    "random_blaschke_problem",
    "range_consistency",
    "reduce_problem",
    "schwarz_pick_matrix",
    "signed_binomial_matrix",
    "solve",
    "structured_set",
    "symmetry_residual",
    "unique_solution",
    "verify_asymptotics",
]
