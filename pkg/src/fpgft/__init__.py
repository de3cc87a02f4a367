"""fpgft: fixed-point meromorphic function classes M_w(A, B, m).

Truncated Laurent series with a simple pole at a prescribed point w of
the unit disk, the coefficient-criterion membership test for the class
M_w(A, B, m), independent analytic-condition verification on sampled
grids, the operators I^m, H1, H2 with quadrature oracles, and the
extreme-point convex-hull machinery, plus a deterministic CLI.
"""

from .errors import (
    COutOfRange,
    DerivativeVanishes,
    EvalAtPole,
    FixedPointOutsideDisk,
    FunctionClassError,
    GammaOutOfRange,
    IndexBelowK,
    IndexBetween1AndKminus1,
    InputNotMember,
    InvalidClassParams,
    MixedFixedPoints,
    NegativeCoefficient,
    NotAMember,
    OrderOutOfRange,
    OutsideDomain,
    OverflowGuard,
    QuadratureNonConvergence,
    TruncationLimitExceeded,
    WeightsNotConvex,
)
from .hull import (
    HullWeights,
    convex_combine_members,
    decompose,
    extreme_point,
    make_weights,
    recompose,
)
from .kernels import BACKEND
from .membership import (
    ClassParams,
    ConditionSample,
    GridSummary,
    MembershipReport,
    condition_ratio,
    is_member,
    phi_functional,
    summarize_grid,
    verify_on_grid,
)
from .operators import (
    H1Param,
    H2Param,
    ImOrder,
    apply_H1_transform,
    apply_H2_transform,
    apply_Im_closed,
    apply_Im_recurrence,
    quadrature_oracle_H1,
    quadrature_oracle_H2,
)
from .series import (
    FpSeries,
    GeneralSeries,
    differentiate,
    evaluate,
    linear_combine,
    make_series,
    to_general,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND",
    # series
    "FpSeries",
    "GeneralSeries",
    "make_series",
    "to_general",
    "differentiate",
    "evaluate",
    "linear_combine",
    # membership
    "ClassParams",
    "MembershipReport",
    "ConditionSample",
    "GridSummary",
    "phi_functional",
    "is_member",
    "condition_ratio",
    "verify_on_grid",
    "summarize_grid",
    # operators
    "ImOrder",
    "H1Param",
    "H2Param",
    "apply_Im_closed",
    "apply_Im_recurrence",
    "apply_H1_transform",
    "apply_H2_transform",
    "quadrature_oracle_H1",
    "quadrature_oracle_H2",
    # hull
    "HullWeights",
    "make_weights",
    "extreme_point",
    "decompose",
    "recompose",
    "convex_combine_members",
    # errors
    "FunctionClassError",
    "FixedPointOutsideDisk",
    "IndexBelowK",
    "NegativeCoefficient",
    "TruncationLimitExceeded",
    "WeightsNotConvex",
    "MixedFixedPoints",
    "IndexBetween1AndKminus1",
    "InvalidClassParams",
    "OrderOutOfRange",
    "GammaOutOfRange",
    "COutOfRange",
    "NotAMember",
    "InputNotMember",
    "EvalAtPole",
    "OutsideDomain",
    "DerivativeVanishes",
    "OverflowGuard",
    "QuadratureNonConvergence",
]
