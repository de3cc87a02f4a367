"""Command-line interface.

Subcommands: membership, apply, extreme, decompose, recompose, combine,
sweep, gen-random. Every command reads/writes the JSON function format
(see fileio), validates through the library invariants before computing,
and emits byte-deterministic output: all text is rendered first and
written once, so failures never leave partial files behind.

Exit codes: 0 ok/member, 1 non-member, 2 usage or input error,
3 numerical failure (quadrature non-convergence, overflow, vanishing
derivative).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import fileio, hull, membership, operators, randomgen, series
from .errors import FunctionClassError

ORACLE_TOL = 1e-8

EXIT_OK = 0
EXIT_NONMEMBER = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def _pair(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected RE,IM with two comma-separated reals, got {text!r}"
        )
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a numeric RE,IM pair: {text!r}")


def _radii(text: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("need at least one radius")
    return values


def _weights_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _add_class_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--A", type=float, required=True, help="class parameter A")
    p.add_argument("--B", type=float, required=True, help="class parameter B")
    p.add_argument("--m", type=int, required=True, help="operator order m")


def _params(args) -> membership.ClassParams:
    return membership.ClassParams(A=args.A, B=args.B, m=args.m)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpgft",
        description="Fixed-point function classes M_w(A,B,m): membership, "
                    "operators, extreme points, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("membership", help="coefficient-criterion membership report")
    p.add_argument("file", help="function file (JSON)")
    _add_class_params(p)
    p.add_argument("--grid", action="store_true",
                   help="also sample the analytic condition on a polar grid")
    p.add_argument("--radii", type=_radii,
                   default=list(membership.DEFAULT_RADII),
                   help="comma-separated grid radii in (0,1)")
    p.add_argument("--angles", type=int, default=membership.DEFAULT_ANGLES,
                   help="number of grid angles")

    p = sub.add_parser("apply", help="apply an operator to a function file")
    p.add_argument("file", help="function file (JSON)")
    p.add_argument("--op", choices=("Im", "H1", "H2"), required=True)
    p.add_argument("--param", type=float, required=True,
                   help="m for Im, gamma for H1, C for H2")
    p.add_argument("--alt-coeff", action="store_true",
                   help="H1 only: use the alternative documented factor "
                        "1/(gamma+n) instead of the derived (gamma-1)/(gamma+n)")
    p.add_argument("--oracle-check", type=_pair, metavar="RE,IM", default=None,
                   help="H1/H2 only: compare against the quadrature oracle "
                        "at z = RE+IM*i and append an agreement report")
    p.add_argument("--out", default=None, help="write the function here")

    p = sub.add_parser("extreme", help="emit a generator f_n")
    p.add_argument("--n", type=int, required=True, help="index (0 or >= k)")
    _add_class_params(p)
    p.add_argument("--k", type=int, default=1, help="first live index")
    p.add_argument("--w", type=_pair, default=complex(0.0, 0.0), metavar="RE,IM")
    p.add_argument("--out", default=None)

    p = sub.add_parser("decompose", help="barycentric weights of a member")
    p.add_argument("file")
    _add_class_params(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("recompose", help="rebuild a member from weights")
    p.add_argument("file", help="weights file (JSON)")
    _add_class_params(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--w", type=_pair, default=complex(0.0, 0.0), metavar="RE,IM")
    p.add_argument("--out", default=None)

    p = sub.add_parser("combine", help="convex combination of member files")
    p.add_argument("files", nargs="+", help="function files (JSON)")
    p.add_argument("--weights", type=_weights_list, required=True,
                   metavar="D1,D2,...", help="convex weights, one per file")
    _add_class_params(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sweep", help="CSV sweep over (A,B,m) cells")
    p.add_argument("spec", help="sweep file (JSON)")
    p.add_argument("--out", default=None)

    p = sub.add_parser("gen-random", help="seeded random series file")
    p.add_argument("--seed", type=int, required=True,
                   help="explicit RNG seed (no implicit entropy)")
    _add_class_params(p)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--nmax", type=int, required=True, help="highest tail index")
    p.add_argument("--target-frac", type=float, default=None,
                   help="phi target as a fraction of the bound; "
                        "default draws it uniformly from [0,1]")
    p.add_argument("--w", type=_pair, default=complex(0.0, 0.0), metavar="RE,IM")
    p.add_argument("--out", default=None)

    return parser


def _emit(text: str, out_path: str | None, stdout) -> None:
    if out_path is None:
        stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load_series_file(path: str) -> series.FpSeries:
    return fileio.series_from_obj(fileio.load_json_file(path, "function file"))


def _cmd_membership(args, stdout) -> int:
    f = _load_series_file(args.file)
    p = _params(args)
    rep = membership.is_member(f, p)
    grid = None
    if args.grid:
        samples = membership.verify_on_grid(f, p, radii=args.radii,
                                            angles=args.angles)
        grid = membership.summarize_grid(samples)
    stdout.write(fileio.dumps_json(fileio.report_to_obj(rep, grid)))
    return EXIT_OK if rep.member else EXIT_NONMEMBER


def _cmd_apply(args, stdout) -> int:
    f = _load_series_file(args.file)
    if args.alt_coeff and args.op != "H1":
        raise fileio.FileFormatError("--alt-coeff applies to --op H1 only")
    if args.oracle_check is not None and args.op == "Im":
        raise fileio.FileFormatError("--oracle-check applies to H1/H2 only")

    if args.op == "Im":
        if args.param != int(args.param):
            raise fileio.FileFormatError(
                f"Im order must be an integer, got {args.param!r}"
            )
        out = operators.apply_Im_closed(f, operators.ImOrder(int(args.param)))
    elif args.op == "H1":
        out = operators.apply_H1_transform(f, operators.H1Param(args.param),
                                           alt_factor=args.alt_coeff)
    else:
        out = operators.apply_H2_transform(f, operators.H2Param(args.param))

    text = fileio.dumps_series(out)
    check_text = None
    if args.oracle_check is not None:
        z = args.oracle_check
        if args.op == "H1":
            oracle = operators.quadrature_oracle_H1(
                f, operators.H1Param(args.param), z)
        else:
            oracle = operators.quadrature_oracle_H2(
                f, operators.H2Param(args.param), z)
        approx = series.evaluate(out, z)
        diff = abs(oracle - approx)
        check_text = fileio.dumps_json({
            "z": [z.real, z.imag],
            "oracle": [oracle.real, oracle.imag],
            "transform_value": [approx.real, approx.imag],
            "abs_diff": diff,
            "tol": ORACLE_TOL,
            "agree": diff <= ORACLE_TOL,
        })
    _emit(text, args.out, stdout)
    if check_text is not None:
        stdout.write(check_text)
    return EXIT_OK


def _cmd_extreme(args, stdout) -> int:
    f = hull.extreme_point(args.n, _params(args), w=args.w, k=args.k)
    _emit(fileio.dumps_series(f), args.out, stdout)
    return EXIT_OK


def _cmd_decompose(args, stdout) -> int:
    f = _load_series_file(args.file)
    ws = hull.decompose(f, _params(args))
    _emit(fileio.dumps_weights(ws), args.out, stdout)
    return EXIT_OK


def _cmd_recompose(args, stdout) -> int:
    ws = fileio.weights_from_obj(fileio.load_json_file(args.file, "weights file"))
    f = hull.recompose(ws, _params(args), w=args.w, k=args.k)
    _emit(fileio.dumps_series(f), args.out, stdout)
    return EXIT_OK


def _cmd_combine(args, stdout) -> int:
    fs = [_load_series_file(path) for path in args.files]
    combined, rep = hull.convex_combine_members(fs, args.weights, _params(args))
    obj = {
        "function": fileio.series_to_obj(combined),
        "report": fileio.report_to_obj(rep),
    }
    _emit(fileio.dumps_json(obj), args.out, stdout)
    return EXIT_OK if rep.member else EXIT_NONMEMBER


def _axis_values(spec, what: str) -> list[float]:
    if not isinstance(spec, dict):
        raise fileio.FileFormatError(f"sweep {what} must be an object")
    try:
        start = float(spec["start"])
        stop = float(spec["stop"])
        steps = int(spec["steps"])
    except (KeyError, TypeError, ValueError):
        raise fileio.FileFormatError(
            f"sweep {what} needs numeric start/stop and integer steps"
        ) from None
    if steps < 1:
        raise fileio.FileFormatError(f"sweep {what}: steps must be >= 1")
    if steps == 1:
        return [start]
    return [start + i * (stop - start) / (steps - 1) for i in range(steps)]


def _sweep_source(spec, base_dir: str):
    """Returns (fixed FpSeries or None, per-cell factory or None)."""
    import os

    src = spec.get("source")
    if not isinstance(src, dict) or "kind" not in src:
        raise fileio.FileFormatError('sweep file needs "source" with a "kind"')
    kind = src["kind"]
    k = spec.get("k", 1)
    if kind == "file":
        path = src.get("path")
        if not isinstance(path, str):
            raise fileio.FileFormatError('source kind "file" needs a "path"')
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        return _load_series_file(path), None
    if kind == "series":
        return fileio.series_from_obj(src.get("series")), None
    if kind == "extreme":
        n = src.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise fileio.FileFormatError('source kind "extreme" needs integer "n"')
        w = _as_source_w(src)
        def factory(params: membership.ClassParams) -> series.FpSeries:
            return hull.extreme_point(n, params, w=w, k=k)
        return None, factory
    raise fileio.FileFormatError(f"unknown sweep source kind {kind!r}")


def _as_source_w(src) -> complex:
    w = src.get("w", [0.0, 0.0])
    if (not isinstance(w, (list, tuple)) or len(w) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                       for x in w)):
        raise fileio.FileFormatError('source "w" must be a [re, im] pair')
    return complex(float(w[0]), float(w[1]))


def _cmd_sweep(args, stdout) -> int:
    import os

    spec = fileio.load_json_file(args.spec, "sweep file")
    if not isinstance(spec, dict):
        raise fileio.FileFormatError("sweep file must be a JSON object")
    a_values = _axis_values(spec.get("A"), "A")
    b_values = _axis_values(spec.get("B"), "B")
    m_values = spec.get("m", [0])
    if (not isinstance(m_values, list) or not m_values
            or not all(isinstance(m, int) and not isinstance(m, bool)
                       for m in m_values)):
        raise fileio.FileFormatError('sweep "m" must be a non-empty integer list')
    grid_spec = spec.get("grid", {})
    if not isinstance(grid_spec, dict):
        raise fileio.FileFormatError('sweep "grid" must be an object')
    radii = [float(r) for r in grid_spec.get("radii", membership.DEFAULT_RADII)]
    angles = int(grid_spec.get("angles", membership.DEFAULT_ANGLES))

    fixed, factory = _sweep_source(spec, os.path.dirname(os.path.abspath(args.spec)))

    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=",", lineterminator="\n")
    writer.writerow(["A", "B", "m", "status", "reason", "phi", "bound",
                     "margin", "member", "grid_pass", "grid_fail",
                     "grid_worst_ratio"])
    for a in a_values:
        for b in b_values:
            for m in m_values:
                row = _sweep_cell(a, b, m, fixed, factory, radii, angles)
                writer.writerow(row)
    _emit(buf.getvalue(), args.out, stdout)
    return EXIT_OK


def _sweep_cell(a: float, b: float, m: int, fixed, factory,
                radii, angles) -> list[str]:
    try:
        params = membership.ClassParams(A=a, B=b, m=m)
    except (FunctionClassError, ValueError) as exc:
        return [repr(a), repr(b), repr(m), "skipped", str(exc),
                "", "", "", "", "", "", ""]
    try:
        f = fixed if fixed is not None else factory(params)
        rep = membership.is_member(f, params)
        samples = membership.verify_on_grid(f, params, radii=radii, angles=angles)
        summary = membership.summarize_grid(samples)
    except (FunctionClassError, ValueError) as exc:
        return [repr(a), repr(b), repr(m), "skipped", str(exc),
                "", "", "", "", "", "", ""]
    return [
        repr(a), repr(b), repr(m), "ok", "",
        repr(rep.phi), repr(rep.bound), repr(rep.margin),
        "true" if rep.member else "false",
        repr(summary.samples - summary.failures), repr(summary.failures),
        repr(summary.worst_ratio),
    ]


def _cmd_gen_random(args, stdout) -> int:
    p = _params(args)
    rng = randomgen.rng_from_seed(args.seed)
    frac = args.target_frac
    if frac is None:
        frac = float(rng.uniform(0.0, 1.0))
    f = randomgen.random_series(rng, p, w=args.w, k=args.k,
                                nmax=args.nmax, target_frac=frac)
    _emit(fileio.dumps_series(f), args.out, stdout)
    return EXIT_OK


_HANDLERS = {
    "membership": _cmd_membership,
    "apply": _cmd_apply,
    "extreme": _cmd_extreme,
    "decompose": _cmd_decompose,
    "recompose": _cmd_recompose,
    "combine": _cmd_combine,
    "sweep": _cmd_sweep,
    "gen-random": _cmd_gen_random,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stdout = sys.stdout
    try:
        return _HANDLERS[args.command](args, stdout)
    except FunctionClassError as exc:
        code = EXIT_NUMERICAL if isinstance(exc, ArithmeticError) else EXIT_INPUT
        print(f"error: {exc}", file=sys.stderr)
        return code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
