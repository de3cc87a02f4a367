"""Shared test helpers: CLI runner and random input samplers."""

from __future__ import annotations

import os
import subprocess
import sys

import numpy as np

from fpgft.membership import ClassParams
from fpgft.randomgen import random_admissible_params, random_series, rng_from_seed


def run_cli(args: list[str], env_extra: dict[str, str] | None = None,
            cwd: str | None = None) -> subprocess.CompletedProcess:
    """Run the CLI in a subprocess, capturing raw bytes."""
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "fpgft", *args],
        capture_output=True,
        env=env,
        cwd=cwd,
    )


def draw_params(rng: np.random.Generator, b_min: float = -1.0,
                m_max: int = 6) -> ClassParams:
    return random_admissible_params(rng, m_max=m_max, b_min=b_min)


def draw_series(rng: np.random.Generator, p: ClassParams, w: complex = 0.0,
                k: int | None = None, nmax: int = 40,
                frac: float | None = None):
    """Random series with random k and phi fraction unless pinned."""
    if k is None:
        k = int(rng.integers(1, 6))
    if frac is None:
        frac = float(rng.uniform(0.0, 1.0))
    return random_series(rng, p, w=w, k=k, nmax=max(nmax, k), target_frac=frac)


def seeded(seed: int) -> np.random.Generator:
    return rng_from_seed(seed)
