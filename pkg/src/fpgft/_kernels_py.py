"""Pure Python numerical kernels.

Fallback twin of the compiled extension ``fpgft._kernels_cy``. The two
backends implement the same operations with the same floating-point
operation order, so results agree bit for bit; tests assert this. Any
change here must be mirrored in the .pyx file and vice versa.

Kernel surface:

- pow_int / cpow_int: integer powers by binary exponentiation
- coeff_weight: n^(m+1) * (n(B+1) + A+2), the functional weight at index n
- phi_sum: compensated sum of coeff_weight(n) * a_n in ascending n
- ratio_at / grid_ratios: the analytic condition ratio |Q+1| / |BQ+A+1|
  in cleared-denominator form (no division by g')

Inputs are coerced to builtin float/complex on entry so the arithmetic
uses CPython semantics regardless of what array scalars are passed in.
"""

from __future__ import annotations

import math

__all__ = [
    "pow_int",
    "cpow_int",
    "coeff_weight",
    "phi_sum",
    "ratio_at",
    "grid_ratios",
]


def pow_int(x: float, n: int) -> float:
    """x**n for integer n >= 0 by binary exponentiation."""
    x = float(x)
    n = int(n)
    if n < 0:
        raise ValueError("pow_int: exponent must be >= 0")
    r = 1.0
    b = x
    while True:
        if n & 1:
            r = r * b
        n >>= 1
        if not n:
            break
        b = b * b
    return r


def cpow_int(u: complex, n: int) -> complex:
    """u**n for integer n >= 0 by binary exponentiation."""
    u = complex(u)
    n = int(n)
    if n < 0:
        raise ValueError("cpow_int: exponent must be >= 0")
    r = complex(1.0, 0.0)
    b = u
    while True:
        if n & 1:
            r = r * b
        n >>= 1
        if not n:
            break
        b = b * b
    return r


def coeff_weight(nf: float, A: float, B: float, m: int) -> float:
    """Weight n^(m+1) * (n(B+1) + A+2) multiplying a_n in the functional."""
    nf = float(nf)
    return pow_int(nf, int(m) + 1) * (nf * (float(B) + 1.0) + (float(A) + 2.0))


def phi_sum(ns, coeffs, A: float, B: float, m: int) -> float:
    """Sum of coeff_weight(n, A, B, m) * a_n over the tail, ascending n.

    Kahan compensated summation; callers pass indices already sorted
    ascending so both backends accumulate in the same order.
    """
    A = float(A)
    B = float(B)
    m = int(m)
    s = 0.0
    c = 0.0
    for i in range(len(ns)):
        term = coeff_weight(float(ns[i]), A, B, m) * float(coeffs[i])
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


def _ratio_core(u, nsl, bsl, A, B):
    # g(z) = 1/u + sum b_n u^n with u = z - w. With
    #   s1 = sum n b_n u^(n-1)   (tail of g')
    #   s2 = sum n(n-1) b_n u^(n-2)   (tail of g'')
    # the condition ratio |Q+1| / |BQ+A+1|, Q = 1 + u g''/g', clears to
    #   num = 2 s1 + u s2              (principal parts cancel exactly)
    #   den = (B-A-1)/u^2 + (A+B+1) s1 + B u s2
    # and dscale = |u^2 g'| = |u^2 s1 - 1| measures how far g' is from 0
    # relative to its principal term.
    s1 = complex(0.0, 0.0)
    s2 = complex(0.0, 0.0)
    for i in range(len(nsl)):
        nf = nsl[i]
        b = bsl[i]
        if nf == 1.0:
            s1 = s1 + b
        else:
            ni = int(nf)
            p = cpow_int(u, ni - 2)
            pu = p * u
            s1 = s1 + (nf * b) * pu
            s2 = s2 + ((nf * (nf - 1.0)) * b) * p
    u2 = u * u
    num = 2.0 * s1 + u * s2
    den = (B - A - 1.0) / u2 + (A + B + 1.0) * s1 + (B * u) * s2
    dfac = u2 * s1 - 1.0
    dscale = abs(dfac)
    nabs = abs(num)
    dabs = abs(den)
    if dabs == 0.0:
        ratio = math.inf if nabs > 0.0 else math.nan
    else:
        ratio = nabs / dabs
    return ratio, dscale


def ratio_at(u: complex, ns, bs, A: float, B: float):
    """Condition ratio and derivative scale at a single point u = z - w.

    ns, bs are the tail indices and coefficients of g = I^m f (already
    transformed, b_n = n^m a_n). Returns (ratio, dscale); dscale below
    the caller's threshold means g'(z) is numerically zero.
    """
    nsl = [float(x) for x in ns]
    bsl = [float(x) for x in bs]
    return _ratio_core(complex(u), nsl, bsl, float(A), float(B))


def grid_ratios(us, ns, bs, A: float, B: float, out_ratio, out_dscale) -> None:
    """ratio_at over an array of points, filling the two output arrays."""
    nsl = [float(x) for x in ns]
    bsl = [float(x) for x in bs]
    A = float(A)
    B = float(B)
    for j in range(len(us)):
        r, d = _ratio_core(complex(us[j]), nsl, bsl, A, B)
        out_ratio[j] = r
        out_dscale[j] = d
