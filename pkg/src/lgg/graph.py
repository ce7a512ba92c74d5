"""Geometric graphs, the locally-Gabriel verifier, and a random generator.

A graph is valid (locally Gabriel) when no edge's closed diametral disk
contains a neighbor of either endpoint.  ``verify`` checks the equivalent
per-vertex formulation (every pair of edges at a shared vertex is
conflict-free); ``verify_direct`` checks the per-edge disk definition
literally.  The two must agree on every input and tests hold them to that.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import BOUNDARY, INTERIOR, PointSet, conflict_kind

try:
    from numba import njit as _njit
except ImportError:  # pragma: no cover - numba is optional
    _njit = None


class GraphError(ValueError):
    """Structurally malformed graph (bad indices, duplicates, self-loops)."""


@dataclass(frozen=True)
class Graph:
    """A point set with an undirected edge list over point indices.

    Edges are canonicalized to ``i < j`` and sorted lexicographically, so
    equal graphs compare equal and serialized output is byte-stable.
    """

    points: PointSet
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.points)
        canon = []
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge {e} out of range for {n} points")
            canon.append((i, j) if i < j else (j, i))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in canon:
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @property
    def n(self) -> int:
        return len(self.points)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def without_edges(self, drop) -> "Graph":
        dropped = {(min(i, j), max(i, j)) for i, j in drop}
        return Graph(self.points, tuple(e for e in self.edges if e not in dropped))

    def induced(self, vertices) -> tuple["Graph", list[int]]:
        """Induced subgraph; returns it with the old-index list (new -> old)."""
        keep = sorted(set(vertices))
        remap = {old: new for new, old in enumerate(keep)}
        pts = PointSet(tuple(self.points[v] for v in keep))
        edges = tuple(
            (remap[i], remap[j]) for i, j in self.edges if i in remap and j in remap
        )
        return Graph(pts, edges), keep


@dataclass(frozen=True)
class Violation:
    """One conflicting edge pair: edges (u, v) and (u, w) share vertex u."""

    u: int
    v: int
    w: int
    kind: str  # "interior" or "boundary"


@dataclass(frozen=True)
class ConflictReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


def _violation(pts: PointSet, u: int, v: int, w: int) -> Violation | None:
    v, w = (v, w) if v < w else (w, v)
    kind = conflict_kind(pts[u], pts[v], pts[w])
    if kind is None:
        return None
    return Violation(u, v, w, kind)


def verify(g: Graph) -> ConflictReport:
    """All conflicting neighbor pairs, one record per (u, {v, w}).

    Cost is quadratic in vertex degrees.  Uses an inlined exact fast path
    for integer point sets.
    """
    pts = g.points
    out: list[Violation] = []
    if pts.is_exact:
        xs, ys = pts.xs(), pts.ys()
        for u, nbrs in enumerate(g.adjacency):
            ux, uy = xs[u], ys[u]
            m = len(nbrs)
            for a in range(m):
                v = nbrs[a]
                vx, vy = xs[v], ys[v]
                for b in range(a + 1, m):
                    w = nbrs[b]
                    wx, wy = xs[w], ys[w]
                    s1 = (ux - wx) * (vx - wx) + (uy - wy) * (vy - wy)
                    s2 = (ux - vx) * (wx - vx) + (uy - vy) * (wy - vy)
                    if s1 <= 0 or s2 <= 0:
                        kind = INTERIOR if (s1 < 0 or s2 < 0) else BOUNDARY
                        out.append(Violation(u, v, w, kind))
    else:
        for u, nbrs in enumerate(g.adjacency):
            m = len(nbrs)
            for a in range(m):
                for b in range(a + 1, m):
                    rec = _violation(pts, u, nbrs[a], nbrs[b])
                    if rec is not None:
                        out.append(rec)
    out.sort(key=lambda r: (r.u, r.v, r.w))
    return ConflictReport(tuple(out))


def verify_direct(g: Graph) -> ConflictReport:
    """Per-edge cross-check oracle for ``verify``.

    Iterates edges (u, v) and tests every neighbor of u and of v for
    membership in the closed disk with uv as diameter.
    """
    pts = g.points
    found: set[tuple[int, int, int]] = set()
    for u, v in g.edges:
        for w in g.adjacency[u]:
            # w in d_uv conflicts edges (u, v) and (u, w) at shared vertex u
            if w != v and _disk_hit(pts, u, v, w):
                found.add((u, min(v, w), max(v, w)))
        for w in g.adjacency[v]:
            if w != u and _disk_hit(pts, v, u, w):
                found.add((v, min(u, w), max(u, w)))
    out = []
    for u, v, w in sorted(found):
        rec = _violation(pts, u, v, w)
        assert rec is not None
        out.append(rec)
    return ConflictReport(tuple(out))


def _disk_hit(pts: PointSet, a: int, b: int, r: int) -> bool:
    from .geometry import in_closed_disk

    return in_closed_disk(pts[a], pts[b], pts[r])


# --- seeded random maximal LGGs -------------------------------------------

_SM_GAMMA = 0x9E3779B97F4A7C15
_SM_M1 = 0xBF58476D1CE4E5B9
_SM_M2 = 0x94D049BB133111EB
_U64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    z = (z + _SM_GAMMA) & _U64
    z = ((z ^ (z >> 30)) * _SM_M1) & _U64
    z = ((z ^ (z >> 27)) * _SM_M2) & _U64
    return z ^ (z >> 31)


def _candidate_keys(seed: int, count: int) -> np.ndarray:
    """splitmix64 key stream, key_i = mix(mix(seed) xor i), vectorized."""
    base = np.uint64(_splitmix64(seed & _U64))
    z = np.arange(count, dtype=np.uint64) ^ base
    with np.errstate(over="ignore"):
        z = (z + np.uint64(_SM_GAMMA)) & np.uint64(_U64)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_SM_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_SM_M2)
        z = z ^ (z >> np.uint64(31))
    return z


def candidate_edges(n: int) -> list[tuple[int, int]]:
    """All C(n, 2) index pairs in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _insert_loop(xs, ys, us, vs):
    """Greedy conflict-free insertion over permuted candidate endpoints.

    int64 arithmetic is exact here because callers guarantee coordinate
    magnitudes below 2**30, keeping each dot product well inside 63 bits.
    """
    n = xs.shape[0]
    total = us.shape[0]
    cap = 8
    nbr = np.empty((n, cap), dtype=np.int32)
    deg = np.zeros(n, dtype=np.int32)
    eu = np.empty(total, dtype=np.int32)
    ev = np.empty(total, dtype=np.int32)
    m = 0
    for t in range(total):
        u = us[t]
        v = vs[t]
        ux, uy = xs[u], ys[u]
        vx, vy = xs[v], ys[v]
        ok = True
        for a in range(deg[u]):
            w = nbr[u, a]
            wx, wy = xs[w], ys[w]
            if (ux - wx) * (vx - wx) + (uy - wy) * (vy - wy) <= 0 or (
                ux - vx
            ) * (wx - vx) + (uy - vy) * (wy - vy) <= 0:
                ok = False
                break
        if ok:
            for a in range(deg[v]):
                w = nbr[v, a]
                wx, wy = xs[w], ys[w]
                if (vx - wx) * (ux - wx) + (vy - wy) * (uy - wy) <= 0 or (
                    vx - ux
                ) * (wx - ux) + (vy - uy) * (wy - uy) <= 0:
                    ok = False
                    break
        if ok:
            if deg[u] == cap or deg[v] == cap:
                cap *= 2
                grown = np.empty((n, cap), dtype=np.int32)
                grown[:, : cap // 2] = nbr
                nbr = grown
            nbr[u, deg[u]] = v
            deg[u] += 1
            nbr[v, deg[v]] = u
            deg[v] += 1
            eu[m] = u
            ev[m] = v
            m += 1
    return eu[:m], ev[:m]


_insert_compiled = _njit(cache=True)(_insert_loop) if _njit is not None else None

# int64 dot products stay exact below this coordinate magnitude
_FAST_COORD_LIMIT = 1 << 30


def random_maximal_lgg(ps: PointSet, seed: int) -> Graph:
    """Deterministic seeded maximal locally Gabriel graph on ``ps``.

    The candidate order is a permutation of all C(n, 2) pairs obtained by
    sorting on 64-bit splitmix64 keys (key_i = mix(mix(seed) xor i), with
    the usual 0x9E3779B97F4A7C15 / 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB
    constants), ties broken by candidate index.  Each candidate is inserted
    iff it conflicts with no already-inserted edge sharing an endpoint, so
    the result is a valid LGG and no absent edge can be added.
    """
    n = len(ps)
    if n < 2:
        raise ValueError("need at least two points")
    keys = _candidate_keys(seed, n * (n - 1) // 2)
    order = np.argsort(keys, kind="stable")
    cand_i, cand_j = np.triu_indices(n, 1)
    us = cand_i[order]
    vs = cand_j[order]
    if (
        ps.is_exact
        and _insert_compiled is not None
        and max(max(abs(p.x), abs(p.y)) for p in ps) < _FAST_COORD_LIMIT
    ):
        xs_a = np.array(ps.xs(), dtype=np.int64)
        ys_a = np.array(ps.ys(), dtype=np.int64)
        eu, ev = _insert_compiled(
            xs_a, ys_a, us.astype(np.int32), vs.astype(np.int32)
        )
        return Graph(ps, tuple(zip(eu.tolist(), ev.tolist())))
    adj: list[list[int]] = [[] for _ in range(n)]
    edges: list[tuple[int, int]] = []
    if ps.is_exact:
        xs, ys = ps.xs(), ps.ys()
        for u, v in zip(us.tolist(), vs.tolist()):
            ux, uy = xs[u], ys[u]
            vx, vy = xs[v], ys[v]
            ok = True
            for w in adj[u]:
                wx, wy = xs[w], ys[w]
                if (ux - wx) * (vx - wx) + (uy - wy) * (vy - wy) <= 0 or (
                    ux - vx
                ) * (wx - vx) + (uy - vy) * (wy - vy) <= 0:
                    ok = False
                    break
            if ok:
                for w in adj[v]:
                    wx, wy = xs[w], ys[w]
                    if (vx - wx) * (ux - wx) + (vy - wy) * (uy - wy) <= 0 or (
                        vx - ux
                    ) * (wx - ux) + (vy - uy) * (wy - uy) <= 0:
                        ok = False
                        break
            if ok:
                adj[u].append(v)
                adj[v].append(u)
                edges.append((u, v))
    else:
        for u, v in zip(us.tolist(), vs.tolist()):
            ok = all(
                conflict_kind(ps[u], ps[v], ps[w]) is None for w in adj[u]
            ) and all(conflict_kind(ps[v], ps[u], ps[w]) is None for w in adj[v])
            if ok:
                adj[u].append(v)
                adj[v].append(u)
                edges.append((u, v))
    return Graph(ps, tuple(edges))
