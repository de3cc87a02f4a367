"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot paths (phi accumulation, single-point condition
ratio, vectorized grid sweep) on synthetic workloads and reports the
speedup plus the maximum disagreement between backends. The backends
are written to be bit-identical, so the disagreement column should read
0 exactly.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--sizes 16,64,256] [--repeats 200]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from fpgft import _kernels_py

try:
    from fpgft import _kernels_cy
except ImportError:
    _kernels_cy = None


def make_workload(size: int, seed: int):
    rng = np.random.Generator(np.random.PCG64(seed))
    ns = np.arange(1, size + 1, dtype=np.float64)
    amps = rng.exponential(1.0, size=size) / (ns ** 4 * size)
    bs = ns * amps
    radii = (0.5, 0.9, 0.99, 0.999)
    us = np.array([r * complex(math.cos(t), math.sin(t))
                   for r in radii
                   for t in np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)],
                  dtype=np.complex128)
    return ns, amps, bs, us


def time_call(fun, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fun()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(mod, ns, amps, bs, us, repeats: int):
    a_par, b_par, m_par = 0.5, 0.0, 2

    phi_t = time_call(lambda: mod.phi_sum(ns, amps, a_par, b_par, m_par),
                      repeats)
    phi_v = mod.phi_sum(ns, amps, a_par, b_par, m_par)

    z = 0.7 * complex(math.cos(0.4), math.sin(0.4))
    ratio_t = time_call(lambda: mod.ratio_at(z, ns, bs, a_par, b_par),
                        repeats)
    ratio_v = mod.ratio_at(z, ns, bs, a_par, b_par)

    out_r = np.empty(len(us))
    out_d = np.empty(len(us))
    grid_t = time_call(
        lambda: mod.grid_ratios(us, ns, bs, a_par, b_par, out_r, out_d),
        max(1, repeats // 10))
    mod.grid_ratios(us, ns, bs, a_par, b_par, out_r, out_d)

    return {"phi": (phi_t, phi_v),
            "ratio": (ratio_t, ratio_v),
            "grid": (grid_t, (out_r.copy(), out_d.copy()))}


def max_disagreement(py_res, cy_res) -> float:
    worst = 0.0
    for key in ("phi", "ratio"):
        pv, cv = py_res[key][1], cy_res[key][1]
        if key == "ratio":
            pv, cv = pv[0], cv[0]
        worst = max(worst, abs(pv - cv))
    pr, pd = py_res["grid"][1]
    cr, cd = cy_res["grid"][1]
    finite = np.isfinite(pr) & np.isfinite(cr)
    worst = max(worst, float(np.max(np.abs(pr[finite] - cr[finite]), initial=0.0)))
    worst = max(worst, float(np.max(np.abs(pd - cd), initial=0.0)))
    return worst


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="16,64,256",
                    help="comma-separated tail lengths")
    ap.add_argument("--repeats", type=int, default=200)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels_cy is None:
        print("compiled backend not built; timing pure Python only")

    header = f"{'size':>6} {'path':>6} {'python':>12} {'cython':>12} " \
             f"{'speedup':>8} {'max |diff|':>11}"
    print(header)
    print("-" * len(header))
    for size in sizes:
        ns, amps, bs, us = make_workload(size, seed=1234 + size)
        py_res = bench_backend(_kernels_py, ns, amps, bs, us, args.repeats)
        if _kernels_cy is None:
            for key in ("phi", "ratio", "grid"):
                t = py_res[key][0]
                print(f"{size:>6} {key:>6} {t * 1e6:>10.2f}us {'-':>12} "
                      f"{'-':>8} {'-':>11}")
            continue
        cy_res = bench_backend(_kernels_cy, ns, amps, bs, us, args.repeats)
        diff = max_disagreement(py_res, cy_res)
        for key in ("phi", "ratio", "grid"):
            pt, ct = py_res[key][0], cy_res[key][0]
            print(f"{size:>6} {key:>6} {pt * 1e6:>10.2f}us {ct * 1e6:>10.2f}us "
                  f"{pt / ct:>7.1f}x {diff:>11.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
