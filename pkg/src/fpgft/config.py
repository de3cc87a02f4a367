"""Runtime configuration knobs.

The truncation cap bounds how many tail coefficients a series may carry.
It defaults to DEFAULT_MAX_TRUNC and can be raised (or lowered) per process
through the FPGFT_MAX_TRUNC environment variable, up to HARD_MAX_TRUNC.
The variable is read at each call so tests can tweak it without reimports.
"""

from __future__ import annotations

import os

DEFAULT_MAX_TRUNC = 64
HARD_MAX_TRUNC = 256

# m caps at 12: n^(m+1) with n <= 256 and m = 12 stays near 1e31, far
# below double overflow, while m much larger makes bounds meaninglessly tiny.
MAX_ORDER = 12

ENV_MAX_TRUNC = "FPGFT_MAX_TRUNC"
ENV_PURE_PYTHON = "FPGFT_PURE_PYTHON"


def max_trunc() -> int:
    """Return the active truncation cap.

    Reads FPGFT_MAX_TRUNC from the environment. Unset or empty means
    DEFAULT_MAX_TRUNC. Values outside 1..HARD_MAX_TRUNC or non-integers
    raise ValueError rather than being silently clamped.
    """
    raw = os.environ.get(ENV_MAX_TRUNC, "").strip()
    if not raw:
        return DEFAULT_MAX_TRUNC
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{ENV_MAX_TRUNC} must be an integer, got {raw!r}"
        ) from None
    if not 1 <= value <= HARD_MAX_TRUNC:
        raise ValueError(
            f"{ENV_MAX_TRUNC} must lie in 1..{HARD_MAX_TRUNC}, got {value}"
        )
    return value
