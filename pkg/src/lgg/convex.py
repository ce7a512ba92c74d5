"""Extremal constructions on convex point sets.

Each builder returns a ``Construction``: the point set, the edge set, the
achieved edge count, and the convex class of the points.  Every returned
graph passes the verifier; construction raises if it would not.

The real-coordinate builders (fan, cycle) place points on circles of a
large default radius so that all conflict margins dwarf the floating-point
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import ConvexClass, Point, PointSet, classify
from .graph import Graph, verify

DEFAULT_RADIUS = float(2**20)
DEFAULT_EPS = 1e-9


class ConstructionError(ValueError):
    """Input rejected or a built graph failed verification."""


@dataclass(frozen=True)
class Construction:
    name: str
    points: PointSet
    graph: Graph
    expected_edges: int
    claimed_class: ConvexClass


def _checked(name: str, ps: PointSet, edges, expected: int) -> Construction:
    graph = Graph(ps, tuple(edges))
    report = verify(graph)
    if not report.valid:
        raise ConstructionError(
            f"{name}: built graph has {len(report.violations)} conflicts"
        )
    return Construction(name, ps, graph, expected, classify(ps))


def monotonic_path(ps: PointSet) -> Construction:
    """Path through a strictly monotonic convex set; n - 1 edges.

    Both terminal vertices end up with degree 1, matching the upper bound
    that monotonic sets admit at most n - 1 edges.
    """
    cls = classify(ps)
    if not (cls.is_monotonic and cls.strict):
        raise ConstructionError(
            f"monotonic_path needs a strictly monotonic set, got {cls.kind.value}"
            f" (strict={cls.strict})"
        )
    edges = [(i, i + 1) for i in range(len(ps) - 1)]
    return _checked("monotonic_path", ps, edges, len(ps) - 1)


def half_convex_fan(n: int, radius: float = DEFAULT_RADIUS) -> Construction:
    """Quarter-circle star plus path on a right half convex set; 2n - 3 edges.

    Points 0..n-2 sit equally spaced on the first-quadrant arc of a circle
    centered at point n-1 (the origin).  Edges: the path along the arc and
    the full star from the center.
    """
    # n = 3 would place the center at a right angle to the two arc points,
    # a boundary conflict under the closed-disk convention
    if n < 4:
        raise ConstructionError("half_convex_fan needs n >= 4")
    if radius <= 0:
        raise ConstructionError("radius must be positive")
    step = (math.pi / 2) / (n - 2)
    pts = [
        Point(radius * math.cos(k * step), radius * math.sin(k * step), DEFAULT_EPS)
        for k in range(n - 1)
    ]
    pts.append(Point(0.0, 0.0, DEFAULT_EPS))
    center = n - 1
    edges = [(k, k + 1) for k in range(n - 2)]
    edges += [(center, k) for k in range(n - 1)]
    return _checked("half_convex_fan", PointSet(tuple(pts)), edges, 2 * n - 3)


def circle_cycle(n: int, radius: float = DEFAULT_RADIUS) -> Construction:
    """Cycle through n equally spaced points on a circle; n edges.

    Tight for points on a common circle: no vertex can hold more than one
    neighbor per half-disk, so n edges is the maximum.
    """
    if n < 3:
        raise ConstructionError("circle_cycle needs n >= 3")
    if radius <= 0:
        raise ConstructionError("radius must be positive")
    step = 2.0 * math.pi / n
    pts = PointSet(
        tuple(
            Point(radius * math.cos(k * step), radius * math.sin(k * step), DEFAULT_EPS)
            for k in range(n)
        )
    )
    edges = [(k, (k + 1) % n) for k in range(n)]
    return _checked("circle_cycle", pts, edges, n)


def centrally_symmetric_ladder(n: int) -> Construction:
    """Two-line centrally symmetric construction with at least 2n - 8 edges.

    Points (+-1, i) for -n/4 <= i < n/4.  Edge families: vertical step-2
    edges on each line, and the two diagonal families ((-1, i), (1, i + 1))
    and ((-1, i), (1, i - 1)), clamped to endpoints that exist.
    """
    if n < 12 or n % 4 != 0:
        raise ConstructionError("ladder needs n >= 12 with n divisible by 4")
    half = n // 4
    rows = range(-half, half)
    pts = [Point(-1, i) for i in rows] + [Point(1, i) for i in rows]
    left = {i: k for k, i in enumerate(rows)}
    right = {i: k + n // 2 for k, i in enumerate(rows)}
    edges = []
    for i in rows:
        if i + 2 < half:
            edges.append((left[i], left[i + 2]))
            edges.append((right[i], right[i + 2]))
        if i + 1 < half:
            edges.append((left[i], right[i + 1]))
        if i - 1 >= -half:
            edges.append((left[i], right[i - 1]))
    # The clamped diagonal families yield 2n - 6 edges, above the 2n - 8
    # the index ranges nominally promise; report the exact count.
    return _checked(
        "centrally_symmetric_ladder", PointSet(tuple(pts)), edges, len(edges)
    )
