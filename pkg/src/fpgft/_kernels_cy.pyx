# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled numerical kernels.

Twin of fpgft._kernels_py with identical floating-point operation order;
the build uses -ffp-contract=off so results agree bit for bit with the
pure Python backend. Any change here must be mirrored there.
"""

from libc.math cimport INFINITY, NAN

cdef extern from "complex.h" nogil:
    double cabs(double complex)


cdef inline double _pow_int(double x, long n):
    cdef double r = 1.0
    cdef double b = x
    while True:
        if n & 1:
            r = r * b
        n >>= 1
        if not n:
            break
        b = b * b
    return r


cdef inline double complex _cpow_int(double complex u, long n):
    cdef double complex r = 1.0
    cdef double complex b = u
    while True:
        if n & 1:
            r = r * b
        n >>= 1
        if not n:
            break
        b = b * b
    return r


def pow_int(double x, long n):
    """x**n for integer n >= 0 by binary exponentiation."""
    if n < 0:
        raise ValueError("pow_int: exponent must be >= 0")
    return _pow_int(x, n)


def cpow_int(double complex u, long n):
    """u**n for integer n >= 0 by binary exponentiation."""
    if n < 0:
        raise ValueError("cpow_int: exponent must be >= 0")
    return _cpow_int(u, n)


cdef inline double _weight(double nf, double A, double B, long m):
    return _pow_int(nf, m + 1) * (nf * (B + 1.0) + (A + 2.0))


def coeff_weight(double nf, double A, double B, long m):
    """Weight n^(m+1) * (n(B+1) + A+2) multiplying a_n in the functional."""
    return _weight(nf, A, B, m)


def phi_sum(double[::1] ns, double[::1] coeffs, double A, double B, long m):
    """Kahan compensated sum of coeff_weight(n) * a_n, ascending n."""
    cdef Py_ssize_t i
    cdef Py_ssize_t count = ns.shape[0]
    cdef double s = 0.0
    cdef double c = 0.0
    cdef double term, y, t
    for i in range(count):
        term = _weight(ns[i], A, B, m) * coeffs[i]
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    return s


cdef inline void _ratio_core(double complex u, double[::1] ns, double[::1] bs,
                             double A, double B,
                             double* out_ratio, double* out_dscale):
    # Cleared-denominator form of |Q+1| / |BQ+A+1|; see _kernels_py.
    cdef Py_ssize_t i
    cdef Py_ssize_t count = ns.shape[0]
    cdef double complex s1 = 0.0
    cdef double complex s2 = 0.0
    cdef double complex p, pu, u2, num, den, dfac
    cdef double nf, b, nabs, dabs
    cdef long ni
    for i in range(count):
        nf = ns[i]
        b = bs[i]
        if nf == 1.0:
            s1 = s1 + b
        else:
            ni = <long>nf
            p = _cpow_int(u, ni - 2)
            pu = p * u
            s1 = s1 + (nf * b) * pu
            s2 = s2 + ((nf * (nf - 1.0)) * b) * p
    u2 = u * u
    num = 2.0 * s1 + u * s2
    den = (B - A - 1.0) / u2 + (A + B + 1.0) * s1 + (B * u) * s2
    dfac = u2 * s1 - 1.0
    out_dscale[0] = cabs(dfac)
    nabs = cabs(num)
    dabs = cabs(den)
    if dabs == 0.0:
        out_ratio[0] = INFINITY if nabs > 0.0 else NAN
    else:
        out_ratio[0] = nabs / dabs


def ratio_at(double complex u, double[::1] ns, double[::1] bs,
             double A, double B):
    """Condition ratio and derivative scale at a single point u = z - w."""
    cdef double r, d
    _ratio_core(u, ns, bs, A, B, &r, &d)
    return r, d


def grid_ratios(double complex[::1] us, double[::1] ns, double[::1] bs,
                double A, double B,
                double[::1] out_ratio, double[::1] out_dscale):
    """ratio_at over an array of points, filling the two output arrays."""
    cdef Py_ssize_t j
    cdef Py_ssize_t npts = us.shape[0]
    cdef double r, d
    for j in range(npts):
        _ratio_core(us[j], ns, bs, A, B, &r, &d)
        out_ratio[j] = r
        out_dscale[j] = d
