"""Extreme points and convex-hull structure of M_w(A, B, m).

The class is the closed convex hull of the generators

    f_0(z) = 1/(z-w)
    f_n(z) = 1/(z-w) + (1+A-B) / (n^(m+1) [n(B+1)+A+2]) (z-w)^n,  n >= k,

each f_n saturating the coefficient functional exactly. A member f
decomposes barycentrically as f = C_0 f_0 + sum C_n f_n with

    C_n = n^(m+1) [n(B+1)+A+2] a_n / (1+A-B),   C_0 = 1 - sum C_n,

and recomposition inverts this; the weights for indices 1..k-1 are
structurally zero and never stored. Convex combinations of members are
again members (the functional is linear in the coefficients), which
convex_combine_members also re-verifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .config import max_trunc
from .errors import (
    IndexBetween1AndKminus1,
    InputNotMember,
    NotAMember,
    TruncationLimitExceeded,
    WeightsNotConvex,
)
from .membership import ClassParams, MembershipReport, is_member, weight_at
from .series import WEIGHT_SUM_TOL, FpSeries, linear_combine, make_series

C0_CLAMP_TOL = 1e-12

__all__ = [
    "HullWeights",
    "make_weights",
    "extreme_point",
    "decompose",
    "recompose",
    "convex_combine_members",
]


@dataclass(frozen=True)
class HullWeights:
    """Barycentric weights c0 on f_0 and cn[n] on f_n, n >= k.

    Invariants (enforced by make_weights): all weights >= 0 and
    c0 + sum cn = 1 within 1e-12.
    """

    c0: float
    cn: Mapping[int, float] = field(default_factory=dict)

    def sorted_items(self) -> list[tuple[int, float]]:
        return sorted(self.cn.items())


def make_weights(c0: float, cn: Mapping[int, float] | None = None) -> HullWeights:
    """Validate and build HullWeights."""
    c0 = float(c0)
    if not math.isfinite(c0) or c0 < 0.0:
        raise WeightsNotConvex(f"c0 must be a finite real >= 0, got {c0!r}")
    clean: dict[int, float] = {}
    total = c0
    for n, c in (cn or {}).items():
        if int(n) != n or n < 1:
            raise WeightsNotConvex(f"weight index must be an integer >= 1, got {n!r}")
        c = float(c)
        if not math.isfinite(c) or c < 0.0:
            raise WeightsNotConvex(f"weight at index {n} must be >= 0, got {c!r}")
        clean[int(n)] = c
        total += c
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise WeightsNotConvex(
            f"weights sum to {total!r}, need 1 within {WEIGHT_SUM_TOL}"
        )
    return HullWeights(c0=c0, cn=clean)


def extreme_coefficient(n: int, p: ClassParams) -> float:
    """Saturating coefficient (1+A-B) / (n^(m+1) [n(B+1)+A+2]) at index n."""
    return p.bound / weight_at(n, p)


def extreme_point(n: int, p: ClassParams, w: complex = 0.0, k: int = 1) -> FpSeries:
    """Generator f_n; n = 0 gives f_0 = 1/(z-w), otherwise n >= k.

    Indices 1..k-1 are excluded: their hull weights are structurally
    zero, so no generator exists there.
    """
    if int(n) != n:
        raise IndexBetween1AndKminus1(f"index must be an integer, got {n!r}")
    n = int(n)
    if n == 0:
        return make_series(w, k, {})
    if n < k:
        raise IndexBetween1AndKminus1(
            f"no generator at index {n}: need n = 0 or n >= k = {k}"
        )
    if n > max_trunc():
        raise TruncationLimitExceeded(
            f"index {n} exceeds the truncation cap {max_trunc()}"
        )
    return make_series(w, k, {n: extreme_coefficient(n, p)})


def decompose(f: FpSeries, p: ClassParams) -> HullWeights:
    """Barycentric weights of a member over the generators.

    C_n = weight(n) a_n / (1+A-B) for each stored index, and
    C_0 = 1 - sum C_n = margin / bound. C_0 within -1e-12 of zero is
    clamped to 0 (members at exact saturation); below that the input is
    not a member and NotAMember is raised.
    """
    bound = p.bound
    cn: dict[int, float] = {}
    total = 0.0
    for n, a in f.sorted_items():
        c = weight_at(n, p) * a / bound
        cn[n] = c
        total += c
    c0 = 1.0 - total
    if c0 < -C0_CLAMP_TOL:
        raise NotAMember(
            f"functional exceeds the bound (c0 = {c0:.3e}); decomposition "
            "exists only for members"
        )
    if c0 < 0.0:
        c0 = 0.0
    return HullWeights(c0=c0, cn=cn)


def recompose(ws: HullWeights, p: ClassParams, w: complex = 0.0,
              k: int = 1) -> FpSeries:
    """Member c0 f_0 + sum cn[n] f_n built through linear_combine.

    Weight indices must respect the structural zeros (no index in
    1..k-1) and the truncation cap.
    """
    ws = make_weights(ws.c0, ws.cn)
    for n in ws.cn:
        if n < k:
            raise IndexBetween1AndKminus1(
                f"weight at index {n} violates the structural zeros below k = {k}"
            )
    terms: list[tuple[float, FpSeries]] = [(ws.c0, extreme_point(0, p, w, k))]
    for n, c in ws.sorted_items():
        terms.append((c, extreme_point(n, p, w, k)))
    return linear_combine(terms)


def convex_combine_members(fs: list[FpSeries], ds: list[float],
                           p: ClassParams) -> tuple[FpSeries, MembershipReport]:
    """Convex combination of members, re-verified: returns (F, report).

    Every input must already be a member; the combination then stays in
    the class because phi is linear: phi(F) = sum d_j phi(f_j) <= bound.
    """
    if len(fs) != len(ds):
        raise WeightsNotConvex(
            f"got {len(fs)} series but {len(ds)} weights"
        )
    for i, f in enumerate(fs):
        rep = is_member(f, p)
        if not rep.member:
            raise InputNotMember(
                f"input {i} has phi = {rep.phi!r} > bound = {rep.bound!r}"
            )
    combined = linear_combine(list(zip([float(d) for d in ds], fs)))
    return combined, is_member(combined, p)
