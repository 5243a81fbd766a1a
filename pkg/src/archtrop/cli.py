"""Command line front end.

::

    archtrop analyze "1 + x1^3 + x2^2 - 10*x1*x2" --plotdata
    archtrop member "1 + x1^3 + x2^2 - 10*x1*x2" --point 1,1/10
    archtrop bounds "x1^2 - x1 - 1"
    archtrop amoeba "x1^4 + 4*x1^3 + 6*x1^2 + 4*x1 + 1 + x2" --grid -12:-10:21:8 --format csv
    archtrop hausdorff "x1^2 - x1 - 1"
    archtrop isolate f1.txt f2.txt f3.txt

Polynomials are inline text, ``@path`` or the path of an existing file.
Exit status is 0 on success, 1 on bad input and 2 when exact arithmetic ran
out of precision; errors are also printed to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import bounds as _bounds
from .exceptions import ArchTropError, ConvergenceFailure, PrecisionExhausted
from .geometry import arch_newton, lower_hull, newt_vertices
from .logvalue import DEFAULT_PRECISION, MAX_PRECISION, MIN_PRECISION, working_precision
from .oracle import (
    FiberGrid,
    amoeba_1d,
    directed_hausdorff,
    hausdorff,
    roots_1d,
    sample_amoeba_2d,
)
from .parser import format_laurent, parse_laurent
from .report import DEFAULT_WINDOW, build_report, dumps, emit_plotdata, plotdata_csv
from .systems import isolation_report
from .tropical import LogPoint, archtrop, archtrop_1d, member, sample_points

COMMANDS = ("analyze", "member", "bounds", "amoeba", "hausdorff", "isolate")
ENV_PRECISION = "ARCHTROP_PRECISION_BITS"


class InputError(ValueError):
    """Bad command line usage detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# ----------------------------------------------------------- arguments


def _precision_bits(text):
    try:
        bits = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not MIN_PRECISION <= bits <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}]")
    return bits


def _window(text):
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from None
    if len(vals) != 4 or not all(map(math.isfinite, vals)) or vals[0] >= vals[1] or vals[2] >= vals[3]:
        raise argparse.ArgumentTypeError("window is xmin,xmax,ymin,ymax with xmin < xmax and ymin < ymax")
    return tuple(vals)


def parse_grid(text):
    """``lo:hi:count[:phases[:free]]`` or ``auto``; returns a :class:`FiberGrid` or ``None``."""
    if text in (None, "auto"):
        return None
    parts = text.split(":")
    if not 3 <= len(parts) <= 5:
        raise argparse.ArgumentTypeError("grid is lo:hi:count[:phases[:free]]")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        ints = [int(p) for p in parts[2:]]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None
    count = ints[0]
    phases = ints[1] if len(ints) > 1 else 8
    free = ints[2] if len(ints) > 2 else 0
    if count < 1 or phases < 1 or free not in (0, 1) or not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise argparse.ArgumentTypeError("grid needs lo <= hi, positive counts and free in {0, 1}")
    moduli = [float(x) for x in np.linspace(lo, hi, count)] if count > 1 else [lo]
    return FiberGrid(tuple(moduli), phases, free)


def _grid(text):
    try:
        return parse_grid(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=_precision_bits, default=None,
                        help=f"starting interval precision (default {DEFAULT_PRECISION}, env {ENV_PRECISION})")
    common.add_argument("--exact", action="store_true", help="skip interval filters; compare exactly")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    common.add_argument("--nvars", type=int, default=None, help="number of variables (default: inferred)")

    p = _Parser(prog="archtrop", description="Archimedean tropical varieties and amoebae.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="lower hull and tropical variety")
    a.add_argument("poly")
    a.add_argument("--plotdata", action="store_true", help="add window-clipped plot data (two variables)")
    a.add_argument("--window", type=_window, default=DEFAULT_WINDOW)

    m = sub.add_parser("member", parents=[common], help="exact membership of Log|v|")
    m.add_argument("poly")
    g = m.add_mutually_exclusive_group(required=True)
    g.add_argument("--point", help="comma separated positive rationals v_i")
    g.add_argument("--log-point", help="comma separated rationals u_i with v_i = exp(u_i)")

    b = sub.add_parser("bounds", parents=[common], help="root-norm and Hausdorff bounds")
    b.add_argument("poly")

    am = sub.add_parser("amoeba", parents=[common], help="numerical amoeba points")
    am.add_argument("poly")
    am.add_argument("--grid", type=_grid, default=None, help="lo:hi:count[:phases[:free]] or auto")
    am.add_argument("--plotdata", action="store_true")
    am.add_argument("--window", type=_window, default=DEFAULT_WINDOW)

    h = sub.add_parser("hausdorff", parents=[common], help="distances between amoeba and ArchTrop")
    h.add_argument("poly")
    h.add_argument("--grid", type=_grid, default=None)
    h.add_argument("--samples", type=int, default=200, help="points sampled on a tropical curve")
    h.add_argument("--window", type=_window, default=DEFAULT_WINDOW)

    i = sub.add_parser("isolate", parents=[common], help="isolate root log-norms of a square system")
    i.add_argument("polys", nargs="+")
    return p


# -------------------------------------------------------------- inputs


def read_polynomial_text(arg):
    """Inline text, ``@path``, or an existing file path."""
    if arg.startswith("@"):
        path = arg[1:]
    elif os.path.isfile(arg):
        path = arg
    else:
        return arg.strip()
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    text = " ".join(ln for ln in lines if ln)
    if not text:
        raise InputError(f"{path} holds no polynomial")
    return text


def _point(text):
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad point {text!r}") from None


# ------------------------------------------------------------ commands


def _faces_json(faces):
    return [
        {"terms": list(F.vertex_indices), "dim": F.dim,
         "normal": [{"float": float(c), "exact": str(c)} for c in F.normal]}
        for F in faces
    ]


def _newton_json(f):
    nv = newt_vertices(f)
    return {"dim": nv.dim, "vertices": [list(v) for v in nv.vertices], "vertex_support": nv.vertex_support}


def cmd_analyze(args, f, warnings):
    faces = lower_hull(arch_newton(f))
    res = {"nvars": f.n, "terms": f.t, "newton": _newton_json(f), "lower_faces": _faces_json(faces)}
    if f.n <= 2 and f.t >= 2:
        res["archtrop"] = archtrop(f).to_json()
    elif f.n > 2:
        warnings.append("tropical cells are only listed for one or two variables; see lower_faces")
    if args.plotdata:
        res["plotdata"] = emit_plotdata({"results": res}, args.window)
    return res


def cmd_member(args, f, warnings):
    q = LogPoint(_point(args.log_point)) if args.log_point else _point(args.point)
    v = member(f, q, exact=args.exact)
    return {"status": v.status, "dominating": sorted(v.dominating)}


def cmd_bounds(args, f, warnings):
    res = {"hausdorff": [b.to_json() for b in _bounds.hausdorff_upper_for(f)]}
    if f.n != 1:
        warnings.append("annulus and gap bounds apply to univariate input only")
        return res
    if f.t < 2:
        warnings.append("a monomial has no nonzero roots")
        return res
    res["archtrop"] = archtrop_1d(f).to_json()
    res["cauchy"] = _bounds.cauchy_annulus(f).to_json()
    res["smallest_root"] = _bounds.smallest_root_bracket(f).to_json()
    jensen = _bounds.annulus_certificate(f)
    res["jensen"] = jensen.to_json() if jensen is not None else {"applicable": False}
    res["gap_counts"] = _bounds.gap_counts(f).to_json()
    return res


def _cloud(args, f, warnings):
    cloud = sample_amoeba_2d(f, args.grid)
    if cloud.skipped:
        warnings.append(f"{cloud.skipped} degenerate fibers skipped")
    return cloud


def cmd_amoeba(args, f, warnings):
    if f.n == 1:
        rs = roots_1d(f)
        if not rs.meets_target:
            warnings.append(f"root radii above target after {rs.bits} bits")
        pts = amoeba_1d(f)
        return {"nvars": 1, "roots": rs.to_json(),
                "points": [{"log_norm": p.log_norm, "multiplicity": p.multiplicity, "err": p.error_radius}
                           for p in pts]}
    if f.n != 2:
        raise InputError("amoeba sampling supports one or two variables")
    cloud = _cloud(args, f, warnings)
    res = {"nvars": 2, "cloud": cloud.to_json()}
    if args.plotdata:
        res["plotdata"] = emit_plotdata(archtrop(f), args.window, cloud)
    res["_cloud"] = cloud
    return res


def cmd_hausdorff(args, f, warnings):
    bounds = [b.to_json() for b in _bounds.hausdorff_upper_for(f)]
    if f.n == 1:
        T = archtrop_1d(f)
        pts = amoeba_1d(f)
        A = np.array([p.log_norm for p in pts])
        errs = np.array([p.error_radius for p in pts])
        ta = directed_hausdorff(T.floats(), A, np.array([s.error_radius for s in T.slopes]))
        at = directed_hausdorff(A, T, errs)
        sym = hausdorff(A, T, errs)
        return {"nvars": 1,
                "archtrop_to_amoeba": {"value": ta.value, "err": ta.err},
                "amoeba_to_archtrop": {"value": at.value, "err": at.err},
                "hausdorff": {"value": sym.value, "err": sym.err},
                "bounds": bounds}
    if f.n != 2:
        raise InputError("hausdorff supports one or two variables")
    cloud = _cloud(args, f, warnings)
    T = archtrop(f)
    at = directed_hausdorff(cloud.points, T, cloud.errors)
    w = args.window
    S = sample_points(T, args.samples, window=max(abs(x) for x in w), rng=0)
    S = S[(S[:, 0] >= w[0]) & (S[:, 0] <= w[1]) & (S[:, 1] >= w[2]) & (S[:, 1] <= w[3])]
    out = {"nvars": 2, "amoeba_to_archtrop": {"value": at.value, "err": at.err}}
    if len(S):
        ta = directed_hausdorff(S, cloud.points, sampled=True)
        out["archtrop_to_amoeba"] = {"value": ta.value, "err": ta.err, "caveat": ta.caveat}
        warnings.append("archtrop_to_amoeba uses finite samples on both sides")
    out["bounds"] = bounds
    return out


def cmd_isolate(args, F, warnings):
    rep = isolation_report(F)
    if rep["components"]:
        warnings.append("positive-dimensional tropical overlap: candidate list may be incomplete")
    return {
        "candidates": [c.to_json() for c in rep["candidates"]],
        "regions": [r.to_json() for r in rep["regions"]],
        "components": rep["components"],
        "complete": not rep["components"],
    }


HANDLERS = {
    "analyze": cmd_analyze,
    "member": cmd_member,
    "bounds": cmd_bounds,
    "amoeba": cmd_amoeba,
    "hausdorff": cmd_hausdorff,
    "isolate": cmd_isolate,
}


# --------------------------------------------------------------- driver


def _config(args, bits):
    cfg = {"precision_bits": bits, "exact": args.exact, "format": args.format}
    grid = getattr(args, "grid", None)
    if grid is not None:
        cfg["grid"] = grid.to_json()
    if hasattr(args, "window"):
        cfg["window"] = list(args.window)
    return cfg


def _default_bits():
    env = os.environ.get(ENV_PRECISION)
    if env is None:
        return DEFAULT_PRECISION
    try:
        return _precision_bits(env)
    except argparse.ArgumentTypeError as exc:
        raise InputError(f"{ENV_PRECISION}: {exc}") from None


class Outcome(NamedTuple):
    code: int
    payload: dict
    text: str = None
    output: str = None


def run(argv=None):
    """Run one command and return an :class:`Outcome` (nothing is printed)."""
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        bits = args.precision_bits or _default_bits()
        if args.command == "isolate":
            texts = [read_polynomial_text(a) for a in args.polys]
            polys = [parse_laurent(s, args.nvars) for s in texts]
            target, inputs = polys, {"polynomials": [format_laurent(p) for p in polys]}
        else:
            texts = [read_polynomial_text(args.poly)]
            target = parse_laurent(texts[0], args.nvars)
            inputs = {"polynomial": format_laurent(target)}
            if args.command == "member":
                inputs["point"] = args.point if args.point else args.log_point
        warnings = []
        with working_precision(bits):
            results = HANDLERS[args.command](args, target, warnings)
        cloud = results.pop("_cloud", None) if isinstance(results, dict) else None
        report = build_report(args.command, inputs, results, warnings, round(time.perf_counter() - t0, 6),
                              _config(args, bits))
        text = _render(args, report, cloud)
    except PrecisionExhausted as exc:
        return Outcome(2, _error(exc, 2))
    except (ArchTropError, InputError, ValueError, ConvergenceFailure) as exc:
        return Outcome(1, _error(exc, 1))
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            return Outcome(1, _error(exc, 1))
    return Outcome(0, report, text, args.output)


def _render(args, report, cloud):
    if args.format == "json":
        return dumps(report)
    res = report["results"]
    if args.command == "amoeba" and cloud is not None:
        if "plotdata" in res:
            return plotdata_csv(res["plotdata"])
        return cloud.to_csv()
    if args.command == "amoeba":
        rows = ["log_norm,multiplicity,err"] + [f"{p['log_norm']!r},{p['multiplicity']},{p['err']!r}"
                                                for p in res["points"]]
        return "\n".join(rows) + "\n"
    if args.command == "analyze" and "plotdata" in res:
        return plotdata_csv(res["plotdata"])
    if args.command == "member":
        return "status,dominating\n" + f"{res['status']},{' '.join(map(str, res['dominating']))}\n"
    raise InputError(f"csv output is not available for {args.command}; use --format json")


def _error(exc, code):
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": code}


def main(argv=None):
    out = run(argv)
    if out.code:
        sys.stderr.write(json.dumps(out.payload) + "\n")
    elif out.output is None:
        sys.stdout.write(out.text)
    return out.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
