"""Operators on fixed-point series: I^m, H1, H2.

I^m is the iterated map g -> (z-w) g' + 2/(z-w), which acts diagonally
on tail coefficients as a_n -> n^m a_n and fixes the principal part.
Both the closed form and the literal m-fold recurrence are provided;
they must agree and tests enforce it.

H1 and H2 are integral transforms defined for gamma > 1 and C >= 1 by

    H1(z) = (gamma-1)/(z-w)^gamma * integral_w^z (t-w)^(gamma-1) f(t) dt
    H2(z) = C * integral_0^1 nu^C f(nu (z-w) + w) dnu.

Term-by-term integration gives the diagonal coefficient actions

    H1: a_n -> (gamma-1)/(gamma+n) * a_n
    H2: a_n -> C/(C+n+1) * a_n

and each transform also has an independent adaptive-quadrature oracle
evaluating the defining integral directly, used to cross-check the
factors. An alternative documented factor 1/(gamma+n) for H1 circulates
in the literature; it equals the derived one only at gamma = 2, and the
oracle arbitrates (see alt_factor flags). Both factors are < 1 for
n >= 1, so either way the transforms contract the membership functional.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import MAX_ORDER
from .errors import (
    COutOfRange,
    EvalAtPole,
    GammaOutOfRange,
    OrderOutOfRange,
    OutsideDomain,
    OverflowGuard,
)
from .kernels import pow_int
from .quadrature import ABS_TOL, MAX_INTERVALS, adaptive_quadrature
from .series import POLE_TOL, FpSeries, GeneralSeries, differentiate, to_general

FACTOR_OVERFLOW = 1e300

__all__ = [
    "ImOrder",
    "H1Param",
    "H2Param",
    "apply_Im_closed",
    "apply_Im_recurrence",
    "apply_H1_transform",
    "apply_H2_transform",
    "quadrature_oracle_H1",
    "quadrature_oracle_H2",
    "h1_factor",
    "h2_factor",
]


@dataclass(frozen=True)
class ImOrder:
    """Order of the iterated operator I^m; 0 <= m <= MAX_ORDER."""

    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 0:
            raise OrderOutOfRange(f"order m must be an integer >= 0, got {self.m!r}")
        if self.m > MAX_ORDER:
            raise OrderOutOfRange(
                f"order m = {self.m} exceeds the overflow-safe cap {MAX_ORDER}"
            )
        object.__setattr__(self, "m", int(self.m))


@dataclass(frozen=True)
class H1Param:
    """Exponent gamma > 1 of the H1 transform."""

    gamma: float

    def __post_init__(self):
        g = float(self.gamma)
        if not math.isfinite(g) or g <= 1.0:
            raise GammaOutOfRange(f"gamma must be a finite real > 1, got {self.gamma!r}")
        object.__setattr__(self, "gamma", g)


@dataclass(frozen=True)
class H2Param:
    """Parameter C >= 1 of the H2 transform."""

    c: float

    def __post_init__(self):
        c = float(self.c)
        if not math.isfinite(c) or c < 1.0:
            raise COutOfRange(f"C must be a finite real >= 1, got {self.c!r}")
        object.__setattr__(self, "c", c)


def _as_order(m: ImOrder | int) -> ImOrder:
    return m if isinstance(m, ImOrder) else ImOrder(m)


def apply_Im_closed(f: FpSeries, m: ImOrder | int) -> FpSeries:
    """Closed-form I^m: tail a_n -> n^m a_n, principal part unchanged.

    I^0 is the identity and returns f itself (values are immutable).
    """
    order = _as_order(m).m
    if order == 0:
        return f
    coeffs: dict[int, float] = {}
    for n, a in f.coeffs.items():
        factor = pow_int(float(n), order)
        if factor > FACTOR_OVERFLOW:
            raise OverflowGuard(f"n^m = {n}^{order} exceeds {FACTOR_OVERFLOW:.0e}")
        coeffs[n] = factor * a
    return FpSeries(w=f.w, k=f.k, trunc=f.trunc, coeffs=coeffs)


def _recurrence_step(g: GeneralSeries) -> GeneralSeries:
    # (z-w) g' + 2/(z-w). Multiplying the derivative by (z-w) moves every
    # power back up one, so the net effect is c (z-w)^p -> p c (z-w)^p;
    # the added 2/(z-w) restores the principal coefficient
    # (-1)*c_{-1} + 2 = 1 whenever c_{-1} = 1.
    out = {p + 1: c for p, c in differentiate(g).terms.items()}
    out[-1] = out.get(-1, 0.0 + 0.0j) + 2.0
    return GeneralSeries(w=g.w, terms=out)


def apply_Im_recurrence(f: FpSeries, m: ImOrder | int) -> FpSeries:
    """I^m by literally iterating g -> (z-w) g' + 2/(z-w) m times.

    Structurally equal to apply_Im_closed: same w, k, trunc and index
    support; coefficient values agree to relative 1e-12 (the recurrence
    multiplies by n once per step instead of using n^m directly).
    """
    order = _as_order(m).m
    if order == 0:
        return f
    g = to_general(f)
    for _ in range(order):
        g = _recurrence_step(g)
        for c in g.terms.values():
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise OverflowGuard("recurrence coefficient left the double range")
    coeffs: dict[int, float] = {}
    for p, c in g.terms.items():
        if p == -1:
            continue
        coeffs[p] = c.real
    return FpSeries(w=f.w, k=f.k, trunc=f.trunc, coeffs=coeffs)


def h1_factor(n: int, p: H1Param, alt_factor: bool = False) -> float:
    """Coefficient factor of H1 at index n.

    Derived factor (gamma-1)/(gamma+n); with alt_factor=True the
    alternative documented 1/(gamma+n) is returned for comparison runs.
    """
    if alt_factor:
        return 1.0 / (p.gamma + n)
    return (p.gamma - 1.0) / (p.gamma + n)


def h2_factor(n: int, p: H2Param) -> float:
    """Coefficient factor C/(C+n+1) of H2 at index n."""
    return p.c / (p.c + (n + 1.0))


def apply_H1_transform(f: FpSeries, p: H1Param,
                       alt_factor: bool = False) -> FpSeries:
    """Diagonal H1 action a_n -> (gamma-1)/(gamma+n) a_n."""
    if not isinstance(p, H1Param):
        p = H1Param(p)
    coeffs = {n: h1_factor(n, p, alt_factor) * a for n, a in f.coeffs.items()}
    return FpSeries(w=f.w, k=f.k, trunc=f.trunc, coeffs=coeffs)


def apply_H2_transform(f: FpSeries, p: H2Param) -> FpSeries:
    """Diagonal H2 action a_n -> C/(C+n+1) a_n."""
    if not isinstance(p, H2Param):
        p = H2Param(p)
    coeffs = {n: h2_factor(n, p) * a for n, a in f.coeffs.items()}
    return FpSeries(w=f.w, k=f.k, trunc=f.trunc, coeffs=coeffs)


def _check_oracle_point(dz: complex) -> None:
    if abs(dz) < POLE_TOL:
        raise EvalAtPole("oracle point z coincides with the pole z = w")
    if abs(dz) >= 1.0:
        raise OutsideDomain(f"oracle needs 0 < |z - w| < 1, got {abs(dz)}")


def _tail_integral(f: FpSeries, dz: complex, e: float, tol: float,
                   max_intervals: int) -> complex:
    # integral_0^1 [ 1/dz + sum_n a_n dz^n u^(e(n+1)) ] du.
    #
    # This is the H1/H2 defining integral after the substitution
    # u = s^(1/e) that absorbs the endpoint singularity: the integrand
    # started as s^(1/e) f(w + s^(1/e) dz) with s^(1/e)'s pole factor
    # cancelled analytically against the principal part (their product
    # is the constant 1/dz), leaving bounded tail powers u^(e(n+1)).
    items = f.sorted_items()
    exps = np.array([e * (n + 1.0) for n, _ in items])
    camps = np.array([a * dz ** n for n, a in items], dtype=np.complex128)
    base = 1.0 / dz

    def integrand(u: np.ndarray) -> np.ndarray:
        out = np.full(u.shape, base, dtype=np.complex128)
        for j in range(len(items)):
            out += camps[j] * np.power(u, exps[j])
        return out

    return adaptive_quadrature(integrand, 0.0, 1.0, tol=tol,
                               max_intervals=max_intervals)


def quadrature_oracle_H1(f: FpSeries, p: H1Param, z: complex,
                         tol: float = ABS_TOL,
                         max_intervals: int = MAX_INTERVALS) -> complex:
    """H1(z) by adaptive quadrature of the defining integral.

    The path integral along the segment from w to z reduces, with
    t = w + s (z-w) and then u = s^(gamma-1), to

        H1(z) = integral_0^1 u^e f(w + u^e (z-w)) du,   e = 1/(gamma-1),

    where the principal-branch power (s (z-w))^(gamma-1) splits exactly
    as s^(gamma-1) (z-w)^(gamma-1) because s > 0, so the (z-w)^gamma
    prefactor cancels and no complex powers remain. Independent of the
    coefficient transform; absolute tolerance tol.
    """
    if not isinstance(p, H1Param):
        p = H1Param(p)
    dz = complex(z) - f.w
    _check_oracle_point(dz)
    e = 1.0 / (p.gamma - 1.0)
    return _tail_integral(f, dz, e, tol, max_intervals)


def quadrature_oracle_H2(f: FpSeries, p: H2Param, z: complex,
                         tol: float = ABS_TOL,
                         max_intervals: int = MAX_INTERVALS) -> complex:
    """H2(z) by adaptive quadrature of the defining integral.

    With u = nu^C the integral C integral_0^1 nu^C f(w + nu (z-w)) dnu
    becomes integral_0^1 u^e f(w + u^e (z-w)) du with e = 1/C, the same
    bounded form used for H1.
    """
    if not isinstance(p, H2Param):
        p = H2Param(p)
    dz = complex(z) - f.w
    _check_oracle_point(dz)
    e = 1.0 / p.c
    return _tail_integral(f, dz, e, tol, max_intervals)
