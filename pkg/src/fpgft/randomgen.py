"""Seeded random series generation.

Tails are drawn with uniformly chosen sparse-to-dense support on [k, nmax]
and exponential magnitudes, then rescaled so the membership functional
phi hits an exact target fraction of the bound 1 + A - B. Fractions
<= 1 produce members, > 1 produce controlled violators. All draws come
from an explicit numpy Generator; no implicit entropy anywhere.
"""

from __future__ import annotations

import numpy as np

from .membership import ClassParams, phi_functional
from .series import FpSeries, make_series

__all__ = ["rng_from_seed", "random_series", "random_admissible_params"]


def rng_from_seed(seed: int) -> np.random.Generator:
    """PCG64 generator from an explicit integer seed."""
    return np.random.Generator(np.random.PCG64(int(seed)))


def random_series(rng: np.random.Generator, p: ClassParams, w: complex,
                  k: int, nmax: int, target_frac: float) -> FpSeries:
    """Random tail on [k, nmax] rescaled to phi = target_frac * bound.

    Support size is uniform on 1..(nmax-k+1), support indices are a
    uniform subset, magnitudes are Exp(1) draws. target_frac = 0 returns
    the empty tail f_0.
    """
    if nmax < k:
        raise ValueError(f"nmax = {nmax} must be >= k = {k}")
    target = float(target_frac) * p.bound
    if target == 0.0:
        return make_series(w, k, {}, trunc=nmax)
    span = nmax - k + 1
    size = int(rng.integers(1, span + 1))
    support = rng.choice(np.arange(k, nmax + 1), size=size, replace=False)
    support = np.sort(support)
    mags = rng.exponential(1.0, size=size)
    # guard against an all-zero draw, then rescale exactly onto the target
    if not np.any(mags > 0.0):
        mags = np.ones(size)
    raw = make_series(w, k, {int(n): float(a) for n, a in zip(support, mags)},
                      trunc=nmax)
    scale = target / phi_functional(raw, p)
    coeffs = {n: a * scale for n, a in raw.coeffs.items()}
    return make_series(w, k, coeffs, trunc=nmax)


def random_admissible_params(rng: np.random.Generator, m_max: int = 6,
                             b_min: float = -1.0) -> ClassParams:
    """Random (A, B, m) with -1 <= b_min <= B < A < 1, A >= 0.

    A is uniform on (0, 1), B uniform on [max(b_min, -1), A), m uniform
    on 0..m_max. Draws are rejected until the strict inequalities hold.
    """
    while True:
        A = float(rng.uniform(0.0, 1.0))
        lo = max(float(b_min), -1.0)
        B = float(rng.uniform(lo, A))
        if 0.0 < A < 1.0 and lo <= B < A:
            break
    m = int(rng.integers(0, m_max + 1))
    return ClassParams(A=A, B=B, m=m)
