"""Truncated fixed-point Laurent series.

The central object is the truncated series

    f(z) = 1/(z - w) + sum_{n=k}^{N} a_n (z - w)^n,    a_n >= 0,  |w| < 1,

with a simple pole at the fixed point w and no tail coefficients below
the first live index k. FpSeries stores exactly that shape (the
principal-part coefficient is implicit and always 1). GeneralSeries is
the closure of FpSeries under differentiation: complex coefficients,
explicit principal part, powers down to -(2+d) after d derivatives.

All types are immutable values; every operation returns a new object.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .config import max_trunc
from .errors import (
    EvalAtPole,
    FixedPointOutsideDisk,
    IndexBelowK,
    MixedFixedPoints,
    NegativeCoefficient,
    OutsideDomain,
    TruncationLimitExceeded,
    WeightsNotConvex,
)

POLE_TOL = 1e-14
WEIGHT_SUM_TOL = 1e-12

__all__ = [
    "FpSeries",
    "GeneralSeries",
    "make_series",
    "to_general",
    "differentiate",
    "evaluate",
    "linear_combine",
    "POLE_TOL",
    "WEIGHT_SUM_TOL",
]


@dataclass(frozen=True)
class FpSeries:
    """Validated truncated series 1/(z-w) + sum_{n=k}^{trunc} a_n (z-w)^n.

    coeffs maps live indices to nonnegative reals; absent indices read as
    exact zero. Construct through make_series, which enforces the
    invariants; the dataclass itself performs no checks.
    """

    w: complex
    k: int
    trunc: int
    coeffs: Mapping[int, float] = field(default_factory=dict)

    def sorted_items(self) -> list[tuple[int, float]]:
        """Tail (index, coefficient) pairs in ascending index order."""
        return sorted(self.coeffs.items())

    def coeff(self, n: int) -> float:
        return self.coeffs.get(n, 0.0)

    def is_close(self, other: "FpSeries", tol: float = 1e-12) -> bool:
        """Coefficient-wise comparison: identical w and k, |da_n| <= tol."""
        if self.w != other.w or self.k != other.k:
            return False
        for n in set(self.coeffs) | set(other.coeffs):
            if abs(self.coeff(n) - other.coeff(n)) > tol:
                return False
        return True


@dataclass(frozen=True)
class GeneralSeries:
    """Finite Laurent polynomial sum c_p (z-w)^p with complex c_p.

    Plumbing type closing FpSeries under d/dz; the principal coefficient
    is stored explicitly at power -1 and differentiation pushes powers
    down to -2, -3, ... Not valid as class input.
    """

    w: complex
    terms: Mapping[int, complex] = field(default_factory=dict)

    def sorted_items(self) -> list[tuple[int, complex]]:
        return sorted(self.terms.items())


def make_series(w: complex, k: int, coeffs: Mapping[int, float] | None = None,
                trunc: int | None = None) -> FpSeries:
    """Validate and build an FpSeries.

    Requires |w| < 1, integer k >= 1, all indices in [k, trunc] and all
    coefficients finite and >= 0. trunc defaults to the highest stored
    index (or k for an empty tail); an explicit trunc may exceed it,
    the indices between simply carry coefficient zero. The active cap
    from config.max_trunc() bounds trunc.
    """
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise FixedPointOutsideDisk("fixed point w must be finite")
    if abs(w) >= 1.0:
        raise FixedPointOutsideDisk(f"fixed point needs |w| < 1, got |w| = {abs(w)}")
    if int(k) != k or int(k) < 1:
        raise IndexBelowK(f"first live index k must be an integer >= 1, got {k!r}")
    k = int(k)

    cap = max_trunc()
    clean: dict[int, float] = {}
    for n, a in (coeffs or {}).items():
        if int(n) != n:
            raise IndexBelowK(f"coefficient index must be an integer, got {n!r}")
        n = int(n)
        if n < k:
            raise IndexBelowK(f"index {n} is below the first live index k = {k}")
        if n > cap:
            raise TruncationLimitExceeded(
                f"index {n} exceeds the truncation cap {cap}"
            )
        a = float(a)
        if not math.isfinite(a) or a < 0.0:
            raise NegativeCoefficient(
                f"coefficient a_{n} must be a finite real >= 0, got {a!r}"
            )
        clean[n] = a

    top = max(clean) if clean else k
    if trunc is None:
        trunc = top
    else:
        if int(trunc) != trunc:
            raise TruncationLimitExceeded(f"trunc must be an integer, got {trunc!r}")
        trunc = int(trunc)
        if trunc < top or trunc < k:
            raise TruncationLimitExceeded(
                f"trunc = {trunc} is below the highest live index {max(top, k)}"
            )
        if trunc > cap:
            raise TruncationLimitExceeded(
                f"trunc = {trunc} exceeds the truncation cap {cap}"
            )
    return FpSeries(w=w, k=k, trunc=trunc, coeffs=clean)


def to_general(f: FpSeries) -> GeneralSeries:
    """FpSeries as a GeneralSeries: power -1 carries the explicit 1."""
    terms: dict[int, complex] = {-1: complex(1.0, 0.0)}
    for n, a in f.coeffs.items():
        terms[n] = complex(a, 0.0)
    return GeneralSeries(w=f.w, terms=terms)


def differentiate(s: GeneralSeries | FpSeries) -> GeneralSeries:
    """Term-by-term derivative: c (z-w)^p -> c p (z-w)^(p-1).

    The principal term 1/(z-w) maps to -1/(z-w)^2; constants vanish.
    """
    if isinstance(s, FpSeries):
        s = to_general(s)
    terms: dict[int, complex] = {}
    for p, c in s.terms.items():
        if p == 0:
            continue
        terms[p - 1] = c * p
    return GeneralSeries(w=s.w, terms=terms)


def _check_point(u: complex) -> None:
    if abs(u) < POLE_TOL:
        raise EvalAtPole(f"evaluation point within {POLE_TOL} of the pole z = w")
    if abs(u) >= 1.0:
        raise OutsideDomain(f"evaluation needs |z - w| < 1, got {abs(u)}")


def evaluate(s: GeneralSeries | FpSeries, z: complex) -> complex:
    """Evaluate at z with 0 < |z - w| < 1.

    Negative powers are summed directly in ascending power order; the
    polynomial part runs through Horner's scheme in u = z - w.
    """
    if isinstance(s, FpSeries):
        s = to_general(s)
    u = complex(z) - s.w
    _check_point(u)

    neg = 0.0 + 0.0j
    top = -1
    for p, _ in s.sorted_items():
        if p > top:
            top = p
    dense = [0.0 + 0.0j] * (top + 1 if top >= 0 else 0)
    for p, c in s.sorted_items():
        if p < 0:
            neg += c * u ** p
        else:
            dense[p] = c
    acc = 0.0 + 0.0j
    for p in range(len(dense) - 1, -1, -1):
        acc = acc * u + dense[p]
    return neg + acc


def linear_combine(terms: list[tuple[float, FpSeries]]) -> FpSeries:
    """Convex combination sum_j d_j f_j of series sharing one fixed point.

    Weights must be >= 0 and sum to 1 within 1e-12; the principal part
    is then preserved because sum d_j / (z-w) = 1 / (z-w). The result
    keeps k = min k_j and trunc = max trunc_j, with tail
    s_n = sum_j d_j a_{n,j} accumulated in input order.
    """
    if not terms:
        raise WeightsNotConvex("need at least one (weight, series) term")
    total = 0.0
    for d, _ in terms:
        d = float(d)
        if not math.isfinite(d) or d < 0.0:
            raise WeightsNotConvex(f"weight {d!r} is not a finite real >= 0")
        total += d
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise WeightsNotConvex(f"weights sum to {total!r}, need 1 within {WEIGHT_SUM_TOL}")

    w = terms[0][1].w
    for _, f in terms:
        if f.w != w:
            raise MixedFixedPoints(
                f"cannot combine series with fixed points {w!r} and {f.w!r}"
            )
    k = min(f.k for _, f in terms)
    trunc = max(f.trunc for _, f in terms)
    combined: dict[int, float] = {}
    for d, f in terms:
        d = float(d)
        for n, a in f.sorted_items():
            combined[n] = combined.get(n, 0.0) + d * a
    return FpSeries(w=w, k=k, trunc=trunc, coeffs=combined)
