"""Census of geodesics on a cusped once-punctured torus via Fricke trace triples.

Simple closed geodesics correspond to rational slopes; the trace of the
slope-p/q geodesic is read off a tree of trace triples generated by Vieta
flips from a root triple satisfying the cusp relation x^2+y^2+z^2 = xyz.
Each simple geodesic of trace t carries two one-double-point geodesics of
trace 3t and a companion figure-eight of trace t^2+2.

For the modular torus (root (3,3,3)) all traces are integers and the
arithmetic below stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sl2 import trace_to_length

TOL = 1e-9

Slope = tuple[int, int]


class CensusError(ValueError):
    pass


def normalize_slope(p: int, q: int) -> Slope:
    if p == 0 and q == 0:
        raise CensusError("slope 0/0")
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    g = math.gcd(abs(p), abs(q))
    return (p // g, q // g)


def are_farey_neighbors(s1: Slope, s2: Slope) -> bool:
    return abs(s1[0] * s2[1] - s2[0] * s1[1]) == 1


@dataclass(frozen=True)
class TraceTriple:
    """Traces of three simple geodesics whose slopes form a Farey triangle."""

    x: float
    y: float
    z: float
    slopes: tuple[Slope, Slope, Slope] = ((0, 1), (1, 0), (1, 1))

    def __post_init__(self):
        coords = (self.x, self.y, self.z)
        if min(coords) < 3 - TOL:
            raise CensusError(f"trace triple {coords} has an entry below 3")
        lhs = self.x**2 + self.y**2 + self.z**2
        rhs = self.x * self.y * self.z
        if abs(lhs - rhs) > TOL * max(1.0, abs(rhs)):
            raise CensusError(f"cusp relation violated: {lhs} != {rhs}")
        for i in range(3):
            for j in range(i + 1, 3):
                if not are_farey_neighbors(self.slopes[i], self.slopes[j]):
                    raise CensusError(f"slopes {self.slopes} are not pairwise Farey neighbors")

    def coords(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


MODULAR_ROOT = TraceTriple(3, 3, 3)


def vieta_flip(t: TraceTriple, coordinate: int) -> TraceTriple:
    """Replace coordinate k by the other root of the cusp relation, xy - z.

    The slope label moves to the other Farey completion of the remaining
    edge, i.e. the reflection of the Farey triangle across that edge.
    """
    i, j = [k for k in range(3) if k != coordinate]
    coords = list(t.coords())
    coords[coordinate] = coords[i] * coords[j] - coords[coordinate]
    (p1, q1), (p2, q2) = t.slopes[i], t.slopes[j]
    candidates = {normalize_slope(p1 + p2, q1 + q2), normalize_slope(p1 - p2, q1 - q2)}
    candidates.discard(t.slopes[coordinate])
    if len(candidates) != 1:
        raise CensusError(f"ambiguous Farey completion at {t.slopes}")
    slopes = list(t.slopes)
    slopes[coordinate] = candidates.pop()
    return TraceTriple(*coords, tuple(slopes))


@dataclass(frozen=True)
class GeodesicRecord:
    trace: float
    length: float
    family: str  # "simple" | "paired-fig8" | "companion-fig8"
    slope: Slope

    def sort_key(self):
        return (self.trace, self.slope, self.family)


def _maybe_int(x: float):
    return int(x) if float(x).is_integer() else x


def enumerate_simple(root: TraceTriple, trace_cutoff: float) -> list[GeodesicRecord]:
    """All simple closed geodesics with trace <= cutoff, one record per slope.

    Walks the trivalent Vieta tree depth-first; each non-root step
    introduces exactly one new slope, so slope deduplication is structural.
    Output is sorted by (trace, slope).
    """
    if trace_cutoff < 3:
        raise CensusError("trace cutoff below the minimal trace 3")
    records = [
        GeodesicRecord(_maybe_int(tr), trace_to_length(tr), "simple", s)
        for tr, s in zip(root.coords(), root.slopes)
    ]
    stack = [(root, k) for k in range(3)]
    while stack:
        node, k = stack.pop()
        i, j = [t for t in range(3) if t != k]
        new_trace = node.coords()[i] * node.coords()[j] - node.coords()[k]
        if new_trace > trace_cutoff:
            continue
        child = vieta_flip(node, k)
        records.append(
            GeodesicRecord(_maybe_int(new_trace), trace_to_length(new_trace), "simple", child.slopes[k])
        )
        for k2 in range(3):
            if k2 != k:
                stack.append((child, k2))
    records.sort(key=GeodesicRecord.sort_key)
    return records


def one_intersection_census(
    root: TraceTriple, length_cutoff: float, mode: str = "paired"
) -> list[GeodesicRecord]:
    """Geodesics with a single double point, of length <= cutoff.

    "paired" emits the two trace-3t geodesics cut off each simple geodesic
    of trace t; "full" additionally emits the companion figure-eight of
    trace t^2 + 2 living in the same pair of pants.
    """
    if mode not in ("paired", "full"):
        raise CensusError(f"unknown census mode {mode!r}")
    trace_cutoff = 2.0 * math.cosh(length_cutoff / 2.0)
    simples = enumerate_simple(root, trace_cutoff / 3.0)
    records: list[GeodesicRecord] = []
    for rec in simples:
        t = 3 * rec.trace
        records.append(GeodesicRecord(t, trace_to_length(t), "paired-fig8", rec.slope))
        records.append(GeodesicRecord(t, trace_to_length(t), "paired-fig8", rec.slope))
    if mode == "full":
        companion_base = math.sqrt(max(trace_cutoff - 2.0, 0.0))
        for rec in enumerate_simple(root, companion_base):
            t = rec.trace**2 + 2
            if t <= trace_cutoff:
                records.append(GeodesicRecord(t, trace_to_length(t), "companion-fig8", rec.slope))
    records.sort(key=GeodesicRecord.sort_key)
    return records


def mcshane_term_trace(t: float) -> float:
    return 1.0 - math.sqrt(1.0 - (2.0 / t) ** 2)


def mcshane_sum(root: TraceTriple, trace_cutoff: float, form: str = "trace") -> float:
    """Partial McShane sum over simple geodesics of trace <= cutoff.

    The trace form converges to 1, the length form to 1/2; the two forms
    agree termwise via 1 - tanh(l/2) = 2/(1 + e^l).
    """
    if form not in ("trace", "length"):
        raise CensusError(f"unknown form {form!r}")
    total = 0.0
    for rec in enumerate_simple(root, trace_cutoff):
        if form == "trace":
            total += mcshane_term_trace(rec.trace)
        else:
            total += 1.0 / (math.exp(rec.length) + 1.0)
    return total


def mc2_sum(root: TraceTriple, trace_cutoff: float) -> float:
    """Partial sum of the one-double-point identity over the paired family.

    Termwise equal to twice the trace-form McShane sum at cutoff/3, and
    converges to 2.
    """
    if trace_cutoff < 9:
        raise CensusError("cutoff below the minimal paired trace 9")
    total = 0.0
    for rec in enumerate_simple(root, trace_cutoff / 3.0):
        t = 3.0 * rec.trace
        total += 2.0 * (1.0 - math.sqrt(1.0 - (6.0 / t) ** 2))
    return total


def count_census(root: TraceTriple, length_bound: float) -> tuple[int, int, int]:
    """(N0, N1_paired, N1_full) counts of geodesics with length <= L."""
    if length_bound <= 0:
        raise CensusError("length bound must be positive")
    trace_bound = 2.0 * math.cosh(length_bound / 2.0)
    if trace_bound < 3:
        return (0, 0, 0)
    simples = enumerate_simple(root, trace_bound)
    n0 = len(simples)
    n_paired = 2 * sum(1 for r in simples if 3 * r.trace <= trace_bound)
    n_companion = sum(1 for r in simples if r.trace**2 + 2 <= trace_bound)
    return (n0, n_paired, n_paired + n_companion)


def growth_exponent(samples: list[tuple[float, int]]) -> float:
    """Least-squares slope of log N against log L; needs >= 4 points with N >= 10."""
    pts = [(math.log(l), math.log(n)) for l, n in samples if n >= 10]
    if len(pts) < 4:
        raise CensusError("need at least 4 sample points with N >= 10")
    n = len(pts)
    mx = sum(x for x, _ in pts) / n
    my = sum(y for _, y in pts) / n
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    if sxx == 0:
        raise CensusError("degenerate sample: all L equal")
    return sum((x - mx) * (y - my) for x, y in pts) / sxx


def slope_str(s: Slope) -> str:
    return f"{s[0]}/{s[1]}"


def parse_slope(text: str) -> Slope:
    p, q = text.split("/")
    return normalize_slope(int(p), int(q))
