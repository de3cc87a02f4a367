"""Kernel backend selection.

Prefers the compiled extension (fpgft._kernels_cy) and falls back to the
pure Python twin when the extension is unavailable or when the
FPGFT_PURE_PYTHON environment variable is set to a non-empty value other
than "0". The two backends produce bit-identical results; BACKEND names
the one in use.
"""

from __future__ import annotations

import os

from . import _kernels_py
from .config import ENV_PURE_PYTHON

__all__ = [
    "BACKEND",
    "pow_int",
    "cpow_int",
    "coeff_weight",
    "phi_sum",
    "ratio_at",
    "grid_ratios",
]


def _load():
    forced = os.environ.get(ENV_PURE_PYTHON, "").strip()
    if forced and forced != "0":
        return _kernels_py, "python"
    try:
        from . import _kernels_cy
    except ImportError:
        return _kernels_py, "python"
    return _kernels_cy, "cython"


_impl, BACKEND = _load()

pow_int = _impl.pow_int
cpow_int = _impl.cpow_int
coeff_weight = _impl.coeff_weight
phi_sum = _impl.phi_sum
ratio_at = _impl.ratio_at
grid_ratios = _impl.grid_ratios
