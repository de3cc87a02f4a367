"""Membership in the class M_w(A, B, m).

A series f of the canonical fixed-point form belongs to M_w(A, B, m)
when the transformed series g = I^m f satisfies, on 0 < |z-w| < 1,

    | Q + 1 | / | B Q + A + 1 | <= 1,    Q = 1 + (z-w) g''(z) / g'(z).

For the truncated nonnegative-coefficient series handled here this is
equivalent to the coefficient criterion

    phi(f) = sum_{n=k}^{N} n^(m+1) [n(B+1) + A+2] a_n  <=  1 + A - B,

which is what is_member decides (inclusive at the bound, absolute
tolerance 1e-12). condition_ratio and verify_on_grid evaluate the
analytic ratio directly and independently, for cross-checking the
criterion on sampled disks.

A caution on the two directions: with B >= 0 the coefficient criterion
empirically controls the sampled ratio at every angle, but for B < 0
the ratio of a saturated member can exceed 1 along non-real directions;
only the real direction z - w = r is controlled there. The test suite
machine-checks a concrete instance of this gap. Grid verification is
therefore an independent diagnostic, not a second oracle, once B < 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import MAX_ORDER
from .errors import (
    DerivativeVanishes,
    EvalAtPole,
    InvalidClassParams,
    OrderOutOfRange,
    OutsideDomain,
    OverflowGuard,
)
from .kernels import coeff_weight, grid_ratios, phi_sum, pow_int, ratio_at
from .series import POLE_TOL, FpSeries

MEMBER_TOL = 1e-12
RATIO_PASS_TOL = 1e-9
DERIV_TOL = 1e-13
DEFAULT_RADII = (0.5, 0.9, 0.99, 0.999)
DEFAULT_ANGLES = 64

__all__ = [
    "ClassParams",
    "MembershipReport",
    "ConditionSample",
    "GridSummary",
    "phi_functional",
    "weight_at",
    "is_member",
    "condition_ratio",
    "verify_on_grid",
    "summarize_grid",
    "MEMBER_TOL",
    "RATIO_PASS_TOL",
    "DEFAULT_RADII",
    "DEFAULT_ANGLES",
]


@dataclass(frozen=True)
class ClassParams:
    """Class parameters (A, B, m) with -1 <= B < A < 1, A >= 0, m >= 0.

    A < 1 is enforced strictly; the bound 1 + A - B is then positive.
    """

    A: float
    B: float
    m: int

    def __post_init__(self):
        A = float(self.A)
        B = float(self.B)
        if not (math.isfinite(A) and math.isfinite(B)):
            raise InvalidClassParams("A and B must be finite reals")
        if not (-1.0 <= B < A < 1.0):
            raise InvalidClassParams(
                f"need -1 <= B < A < 1, got A = {A!r}, B = {B!r}"
            )
        if A < 0.0:
            raise InvalidClassParams(f"need A >= 0, got A = {A!r}")
        if int(self.m) != self.m or self.m < 0 or self.m > MAX_ORDER:
            raise OrderOutOfRange(
                f"order m must be an integer in 0..{MAX_ORDER}, got {self.m!r}"
            )
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "m", int(self.m))

    @property
    def bound(self) -> float:
        """Right-hand side 1 + A - B of the coefficient criterion."""
        return 1.0 + self.A - self.B


@dataclass(frozen=True)
class MembershipReport:
    phi: float
    bound: float
    margin: float
    member: bool


@dataclass(frozen=True)
class ConditionSample:
    """One evaluation of the analytic condition at a point z.

    passed means ratio <= 1 + 1e-9; error records a per-sample numerical
    failure (vanishing derivative), in which case ratio is NaN and the
    sample counts as failed.
    """

    z: complex
    ratio: float
    passed: bool
    error: str | None = None


@dataclass(frozen=True)
class GridSummary:
    failures: int
    worst_ratio: float
    worst_z: complex
    samples: int


def _tail_arrays(f: FpSeries) -> tuple[np.ndarray, np.ndarray]:
    items = f.sorted_items()
    ns = np.array([float(n) for n, _ in items], dtype=np.float64)
    cs = np.array([a for _, a in items], dtype=np.float64)
    return ns, cs


def weight_at(n: int, p: ClassParams) -> float:
    """Functional weight n^(m+1) [n(B+1) + A+2] at index n."""
    return coeff_weight(float(n), p.A, p.B, p.m)


def phi_functional(f: FpSeries, p: ClassParams) -> float:
    """phi(f) = sum n^(m+1) [n(B+1) + A+2] a_n, ascending n, compensated."""
    ns, cs = _tail_arrays(f)
    value = phi_sum(ns, cs, p.A, p.B, p.m)
    if not math.isfinite(value):
        raise OverflowGuard("membership functional left the double range")
    return value


def is_member(f: FpSeries, p: ClassParams) -> MembershipReport:
    """Coefficient criterion: member iff phi <= bound + 1e-12."""
    phi = phi_functional(f, p)
    bound = p.bound
    margin = bound - phi
    return MembershipReport(phi=phi, bound=bound, margin=margin,
                            member=margin >= -MEMBER_TOL)


def _transformed_tail(f: FpSeries, p: ClassParams) -> tuple[np.ndarray, np.ndarray]:
    # tail of g = I^m f: b_n = n^m a_n
    items = f.sorted_items()
    ns = np.array([float(n) for n, _ in items], dtype=np.float64)
    bs = np.array([pow_int(float(n), p.m) * a for n, a in items],
                  dtype=np.float64)
    return ns, bs


def condition_ratio(f: FpSeries, p: ClassParams, z: complex) -> ConditionSample:
    """Analytic-condition ratio |Q+1| / |BQ+A+1| at one point.

    Evaluated in cleared-denominator form, so no explicit division by
    g' occurs; a numerically vanishing g' (relative to its principal
    term 1/(z-w)^2, threshold 1e-13) still raises DerivativeVanishes
    because the ratio stops being meaningful there.
    """
    u = complex(z) - f.w
    if abs(u) < POLE_TOL:
        raise EvalAtPole(f"condition sample within {POLE_TOL} of the pole")
    if abs(u) >= 1.0:
        raise OutsideDomain(f"condition sample needs |z - w| < 1, got {abs(u)}")
    ns, bs = _transformed_tail(f, p)
    ratio, dscale = ratio_at(u, ns, bs, p.A, p.B)
    if dscale < DERIV_TOL:
        raise DerivativeVanishes(
            f"|(z-w)^2 (I^m f)'(z)| = {dscale:.3e} < {DERIV_TOL} at z = {z!r}"
        )
    return ConditionSample(z=complex(z), ratio=ratio,
                           passed=ratio <= 1.0 + RATIO_PASS_TOL)


def verify_on_grid(f: FpSeries, p: ClassParams,
                   radii=DEFAULT_RADII,
                   angles: int = DEFAULT_ANGLES) -> list[ConditionSample]:
    """Sample the condition on z = w + r e^(i theta) over a polar grid.

    Points run radius-major, angle-minor with theta = 2 pi j / angles.
    Per-sample numerical failures are recorded on the sample rather than
    aborting the sweep. Radii must lie in (0, 1).
    """
    if int(angles) != angles or angles < 1:
        raise ValueError(f"angles must be an integer >= 1, got {angles!r}")
    angles = int(angles)
    radii = [float(r) for r in radii]
    for r in radii:
        if not (0.0 < r < 1.0) or not math.isfinite(r):
            raise OutsideDomain(f"grid radius must lie in (0, 1), got {r!r}")

    us = np.empty(len(radii) * angles, dtype=np.complex128)
    idx = 0
    for r in radii:
        for j in range(angles):
            theta = 2.0 * math.pi * j / angles
            us[idx] = complex(r * math.cos(theta), r * math.sin(theta))
            idx += 1

    ns, bs = _transformed_tail(f, p)
    out_ratio = np.empty(len(us), dtype=np.float64)
    out_dscale = np.empty(len(us), dtype=np.float64)
    grid_ratios(us, ns, bs, p.A, p.B, out_ratio, out_dscale)

    samples: list[ConditionSample] = []
    for i in range(len(us)):
        u = complex(us[i])
        z = f.w + u
        if out_dscale[i] < DERIV_TOL:
            samples.append(ConditionSample(z=z, ratio=math.nan, passed=False,
                                           error="derivative vanishes"))
        else:
            r = float(out_ratio[i])
            samples.append(ConditionSample(z=z, ratio=r,
                                           passed=r <= 1.0 + RATIO_PASS_TOL))
    return samples


def summarize_grid(samples: list[ConditionSample]) -> GridSummary:
    """Failure count and worst finite ratio over a sample list.

    worst_z is the first point attaining the worst ratio in grid order;
    with no finite ratios at all, worst_ratio is NaN and worst_z 0.
    """
    failures = 0
    worst = -math.inf
    worst_z = 0.0 + 0.0j
    seen = False
    for s in samples:
        if not s.passed:
            failures += 1
        if s.error is None and math.isfinite(s.ratio) and s.ratio > worst:
            worst = s.ratio
            worst_z = s.z
            seen = True
    if not seen:
        worst = math.nan
    return GridSummary(failures=failures, worst_ratio=worst,
                       worst_z=worst_z, samples=len(samples))
