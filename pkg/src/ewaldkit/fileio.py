"""Polytope file format, analysis reports, and database ingestion.

Format (one polytope per file or stream):

    # comment lines start with '#'
    dim 2
    facets 4          # or: vertices k  (hull is taken, H-rep derived)
    name square       # optional
    1 0 1             # m rows of n+1 integers meaning  u . x <= c
    -1 0 1
    0 1 1
    0 -1 1

Rows are normalized to primitive normals (offset rescaled when divisible),
and redundant rows are dropped; both adjustments are reported as warnings.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .classify import classify
from .displace import DEFAULT_RADIUS, is_neat
from .ewald import ewald_set, fs_property, star_ewald, strong_ewald, weak_ewald
from .polytope import HPolytope, VPolytope, convex_hull, irredundant_rows

__all__ = [
    "ParsedPolytope",
    "parse_polytope",
    "serialize_polytope",
    "analyze_polytope",
    "ingest_database",
    "DatabaseStats",
    "MAX_DIM_DEFAULT",
]

MAX_DIM_DEFAULT = 12


@dataclass
class ParsedPolytope:
    polytope: HPolytope
    name: str | None
    warnings: tuple


def parse_polytope(text: str, allow_large: bool = False) -> ParsedPolytope:
    """Exact integer parse; redundant or non-primitive rows are normalized
    with a warning, malformed input raises ValueError."""
    dim = None
    count = None
    mode = None  # "facets" | "vertices"
    name = None
    rows = []
    warnings = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "dim":
            dim = int(parts[1])
        elif parts[0] in ("facets", "vertices"):
            mode = parts[0]
            count = int(parts[1])
        elif parts[0] == "name":
            name = line.split(None, 1)[1] if len(parts) > 1 else ""
        else:
            if dim is None or mode is None:
                raise ValueError("line %d: row before dim/facets header" % lineno)
            try:
                nums = [int(x) for x in parts]
            except ValueError:
                raise ValueError("line %d: non-integer entry" % lineno) from None
            want = dim + 1 if mode == "facets" else dim
            if len(nums) != want:
                raise ValueError(
                    "line %d: expected %d integers, got %d" % (lineno, want, len(nums))
                )
            rows.append(nums)
    if dim is None or count is None:
        raise ValueError("missing dim/facets header")
    if dim < 1:
        raise ValueError("dimension must be positive")
    if dim > MAX_DIM_DEFAULT and not allow_large:
        raise ValueError(
            "dimension %d exceeds the default cap %d (lattice scans grow like 3^n); "
            "pass --allow-large to override" % (dim, MAX_DIM_DEFAULT)
        )
    if len(rows) != count:
        raise ValueError("expected %d rows, found %d" % (count, len(rows)))
    if mode == "vertices":
        hull = convex_hull([tuple(r) for r in rows], dim)
        if len(hull.vertices()) != len({tuple(r) for r in rows}):
            warnings.append("vertex list contained non-extreme points; hull taken")
        return ParsedPolytope(hull, name, tuple(warnings))
    normals = []
    offsets = []
    for r in rows:
        u, c = r[:-1], r[-1]
        if not any(u):
            raise ValueError("zero normal row")
        g = 0
        for x in u:
            g = gcd(g, x)
        if g > 1:
            if c % g != 0:
                raise ValueError(
                    "row %r: normal gcd %d does not divide the offset" % (r, g)
                )
            u = [x // g for x in u]
            c //= g
            warnings.append("row %r normalized to primitive form" % (r,))
        normals.append(tuple(u))
        offsets.append(c)
    rn, ro, dropped = irredundant_rows(dim, tuple(normals), tuple(offsets))
    if dropped:
        warnings.append("dropped %d redundant row(s): %s" % (len(dropped), list(dropped)))
    p = HPolytope(dim, rn, ro).validate()
    return ParsedPolytope(p, name, tuple(warnings))


def serialize_polytope(p: HPolytope, name: str | None = None) -> str:
    if not all(isinstance(c, int) for c in p.offsets):
        raise ValueError("only integer offsets can be serialized")
    lines = ["dim %d" % p.dim, "facets %d" % p.nfacets]
    if name:
        lines.append("name %s" % name)
    for u, c in zip(p.normals, p.offsets):
        lines.append(" ".join(str(x) for x in u) + " " + str(c))
    return "\n".join(lines) + "\n"


def _jsonable(x):
    if isinstance(x, Fraction):
        return "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, (tuple, list, frozenset, set)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def analyze_polytope(
    p: HPolytope,
    name: str | None = None,
    radius: int = DEFAULT_RADIUS,
    run_neat: bool = True,
) -> dict:
    """Full analysis record: classification, |E(P)|, the Ewald condition
    flags with witnesses (origin-interior inputs only), and the bounded
    neatness verdict.  Timing lives under 'meta', outside the stable
    comparable payload under 'result'."""
    start = time.monotonic()
    rep = classify(p)
    result = {
        "name": name,
        "dim": p.dim,
        "facets": p.nfacets,
        "vertices": len(p.vertices()),
        "class": rep.as_dict(),
    }
    e = ewald_set(p)
    result["ewald_count"] = len(e)
    if p.origin_interior():
        okw, basis = weak_ewald(p)
        res = strong_ewald(p)
        oks, failing = star_ewald(p)
        result["weak_ewald"] = okw
        result["weak_ewald_basis"] = _jsonable(basis) if basis else None
        result["strong_ewald"] = res.ok
        result["strong_ewald_failing_facet"] = res.failing_facet
        result["star_ewald"] = oks
        result["star_ewald_failing_face"] = (
            list(failing.tight) if failing is not None else None
        )
        if rep.monotone:
            result["fs_property"] = fs_property(p)
    else:
        result["ewald_conditions"] = "skipped: origin not interior"
    if run_neat and rep.smooth and rep.lattice:
        verdict = is_neat(p, radius)
        result["neat"] = {
            "status": verdict.status,
            "radius": verdict.radius,
            "witness_b": _jsonable(verdict.witness_b),
        }
    return {
        "result": _jsonable(result),
        "meta": {"elapsed_s": round(time.monotonic() - start, 6)},
    }


@dataclass
class DatabaseStats:
    """Aggregates for a directory of polytope files."""

    reports: list = field(default_factory=list)
    excluded: list = field(default_factory=list)  # (name, reason)
    histograms: dict = field(default_factory=dict)  # dim -> {|E|: count}
    class_counts: dict = field(default_factory=dict)  # dim -> (monotone, ut_free, deeply)

    def as_dict(self):
        return {
            "reports": [r["result"] for r in self.reports],
            "excluded": self.excluded,
            "ewald_histograms": {
                str(d): {str(k): v for k, v in sorted(h.items())}
                for d, h in sorted(self.histograms.items())
            },
            "class_counts": {
                str(d): {"monotone": c[0], "ut_free": c[1], "deeply_monotone": c[2]}
                for d, c in sorted(self.class_counts.items())
            },
        }


def _analyze_file(path, radius, run_neat):
    fname = os.path.basename(path)
    with open(path) as fh:
        text = fh.read()
    try:
        parsed = parse_polytope(text)
    except ValueError as exc:
        return fname, None, "parse error: %s" % exc
    label = parsed.name or fname
    return fname, analyze_polytope(parsed.polytope, label, radius=radius, run_neat=run_neat), None


def ingest_database(
    directory: str,
    radius: int = DEFAULT_RADIUS,
    run_neat: bool = False,
    jobs: int = 1,
) -> DatabaseStats:
    """Load every polytope file in a directory, validate monotonicity, and
    aggregate Ewald histograms and class counts per dimension.  Non-monotone
    entries are reported but excluded from the monotone statistics.  Files
    are independent; jobs > 1 analyzes them in a process pool, and the
    aggregation below is order-insensitive (results are keyed by filename)."""
    stats = DatabaseStats()
    paths = sorted(
        os.path.join(directory, f)
        for f in os.listdir(directory)
        if not f.startswith(".") and os.path.isfile(os.path.join(directory, f))
    )
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_analyze_file, paths, [radius] * len(paths), [run_neat] * len(paths)))
        outcomes.sort(key=lambda t: t[0])
    else:
        outcomes = [_analyze_file(path, radius, run_neat) for path in paths]
    for fname, report, error in outcomes:
        if error is not None:
            stats.excluded.append((fname, error))
            continue
        stats.reports.append(report)
        cls = report["result"]["class"]
        if not (cls["smooth"] and cls["reflexive"]):
            stats.excluded.append((report["result"]["name"], "not monotone"))
            continue
        d = report["result"]["dim"]
        hist = stats.histograms.setdefault(d, {})
        count = report["result"]["ewald_count"]
        hist[count] = hist.get(count, 0) + 1
        mono, ut, deep = stats.class_counts.get(d, (0, 0, 0))
        stats.class_counts[d] = (
            mono + 1,
            ut + (1 if cls["ut_free"] else 0),
            deep + (1 if cls["deeply_monotone"] else 0),
        )
    return stats
