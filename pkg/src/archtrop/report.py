"""Report assembly and plot data for the command line tool."""

from __future__ import annotations

import csv
import io
import json
import math

from .exceptions import NotPlanar
from .tropical import TropicalCurve

SCHEMA_VERSION = "1.0"
DEFAULT_WINDOW = (-7.0, 7.0, -7.0, 7.0)


def build_report(command, inputs, results, warnings=(), seconds=None, config=None):
    """Report dict with a fixed key order; ``timing`` is the only nondeterministic field."""
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config or {},
        "inputs": inputs,
        "results": results,
        "warnings": list(warnings),
        "timing": {"seconds": seconds if seconds is not None else 0.0},
    }
    return out


def dumps(report):
    return json.dumps(report, indent=2, allow_nan=False, default=_default) + "\n"


def _default(x):
    try:
        import numpy as np

        if isinstance(x, np.generic):
            return x.item()
        if isinstance(x, np.ndarray):
            return x.tolist()
    except ImportError:  # pragma: no cover
        pass
    raise TypeError(f"cannot serialize {type(x).__name__}")


def strip_timing(report):
    """Copy of a report without its timing field, for reproducibility checks."""
    return {k: v for k, v in report.items() if k != "timing"}


# ------------------------------------------------------------- clipping


def clip_parametric(p, d, t0, t1, window):
    """Liang-Barsky: clip ``p + t*d`` for ``t`` in ``[t0, t1]`` to an axis box.

    Returns the clipped parameter range or ``None``.
    """
    xmin, xmax, ymin, ymax = window
    for pk, qk in ((-d[0], p[0] - xmin), (d[0], xmax - p[0]), (-d[1], p[1] - ymin), (d[1], ymax - p[1])):
        if pk == 0:
            if qk < 0:
                return None
            continue
        r = qk / pk
        if pk < 0:
            t0 = max(t0, r)
        else:
            t1 = min(t1, r)
        if t0 > t1:
            return None
    return t0, t1


def _curve_cells(curve):
    """Float ``(kind, p, d, t0, t1, pair)`` tuples from curve JSON."""
    verts = [(v["x"]["float"], v["y"]["float"]) for v in curve["vertices"]]
    for s in curve["segments"]:
        a, b = (verts[i] for i in s["ends"])
        yield "segment", a, (b[0] - a[0], b[1] - a[1]), 0.0, 1.0, s["pair"]
    for r in curve["rays"]:
        yield "ray", verts[r["base"]], tuple(r["dir"]), 0.0, math.inf, r["pair"]
    for ln in curve.get("lines", []):
        p = tuple(c["float"] for c in ln["point"])
        yield "line", p, tuple(ln["dir"]), -math.inf, math.inf, ln["pair"]


def emit_plotdata(source, window=DEFAULT_WINDOW, cloud=None):
    """Window-clipped curve cells, vertices and amoeba points.

    ``source`` is a :class:`TropicalCurve`, its JSON, or an ``analyze``
    report.  Returns a dict with ``segments`` (``[x0, y0, x1, y1]`` plus cell
    kind and term pair), ``vertices``, ``points`` and SVG path strings.
    """
    if isinstance(source, TropicalCurve):
        curve = source.to_json()
    elif isinstance(source, dict) and "results" in source:
        curve = source["results"].get("archtrop")
        if source["results"].get("nvars") != 2 or curve is None or curve.get("kind") != "curve":
            raise NotPlanar("plot data needs a two-variable analysis")
    elif isinstance(source, dict) and source.get("kind") == "curve":
        curve = source
    else:
        raise NotPlanar("plot data needs a planar tropical curve")
    window = tuple(float(w) for w in window)
    segments = []
    for kind, p, d, t0, t1, pair in _curve_cells(curve):
        rng = clip_parametric(p, d, t0, t1, window)
        if rng is None:
            continue
        a, b = rng
        x0, y0 = p[0] + a * d[0], p[1] + a * d[1]
        x1, y1 = p[0] + b * d[0], p[1] + b * d[1]
        if (x0, y0) == (x1, y1) and kind != "segment":
            continue
        segments.append({"kind": kind, "pair": list(pair), "coords": [x0, y0, x1, y1]})
    xmin, xmax, ymin, ymax = window
    verts = [[v["x"]["float"], v["y"]["float"]] for v in curve["vertices"]]
    verts = [v for v in verts if xmin <= v[0] <= xmax and ymin <= v[1] <= ymax]
    points = []
    if cloud is not None:
        points = [[float(x), float(y)] for x, y in cloud.points
                  if xmin <= x <= xmax and ymin <= y <= ymax]
    # SVG y axis points down
    svg = [f"M {s['coords'][0]!r} {-s['coords'][1]!r} L {s['coords'][2]!r} {-s['coords'][3]!r}" for s in segments]
    return {"window": list(window), "segments": segments, "vertices": verts, "points": points, "svg_paths": svg}


def plotdata_csv(plot):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "x0", "y0", "x1", "y1", "pair"])
    for s in plot["segments"]:
        w.writerow([s["kind"]] + [repr(c) for c in s["coords"]] + [" ".join(map(str, s["pair"]))])
    for x, y in plot["points"]:
        w.writerow(["point", repr(x), repr(y), "", "", ""])
    return buf.getvalue()
