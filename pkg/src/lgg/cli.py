"""Command-line front end.

Subcommands: ``construct grid|path|fan|cycle|ladder``, ``verify``,
``extremal``, ``indepset``, ``scaling``, ``emit-svg``.  Exit status 0 on
success, 1 on invariant violations (an invalid graph under ``verify``,
a failed construction), 2 on usage or parse errors.

The ``scaling`` command runs grid builds for several sides, possibly in
parallel (``LGG_THREADS`` bounds the worker count, 0 or unset means auto),
and emits a CSV with a trailing log-log fit line.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import convex, grid, io
from .extremal import max_lgg
from .graph import verify
from .independence import independent_set


@dataclass(frozen=True)
class ScalingSample:
    n: int
    edges: int

    @property
    def edges_per_n(self) -> float:
        return self.edges / self.n


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float


class FitError(ValueError):
    pass


def fit_exponent(samples: Sequence[ScalingSample]) -> FitResult:
    """Ordinary least squares of ln(edges) against ln(n)."""
    if len(samples) < 2:
        raise FitError("need at least two samples")
    if len({s.n for s in samples}) < 2:
        raise FitError("samples must have distinct n")
    if any(s.n <= 0 or s.edges <= 0 for s in samples):
        raise FitError("samples must have positive n and edges")
    xs = [math.log(s.n) for s in samples]
    ys = [math.log(s.edges) for s in samples]
    k = len(xs)
    mx, my = sum(xs) / k, sum(ys) / k
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - my) ** 2 for y in ys)
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return FitResult(slope, intercept, r2)


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "grid":
        params = grid.GridParams(
            g=args.side, theta0=args.theta0, c1=args.c1, mode=grid.Mode(args.mode)
        )
        g, stats = grid.build(params)
        meta = {
            "generator": "grid",
            "parameters": {
                "side": args.side,
                "mode": args.mode,
                "theta0": args.theta0,
                "c1": args.c1,
            },
        }
        _write_out(io.graph_to_json(g, meta), args.output)
        print(f"n={g.n} edges={stats.total_edges} conflicts={stats.conflicts}",
              file=sys.stderr)
        return 0
    if kind == "path":
        ps = io.load_points(args.points, args.epsilon)
        cons = convex.monotonic_path(ps)
    elif kind == "fan":
        cons = convex.half_convex_fan(args.n, args.radius)
    elif kind == "cycle":
        cons = convex.circle_cycle(args.n, args.radius)
    else:
        cons = convex.centrally_symmetric_ladder(args.n)
    meta = {"generator": cons.name, "parameters": {"n": len(cons.points)}}
    _write_out(io.graph_to_json(cons.graph, meta), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = io.load_graph(args.graph)
    report = verify(g)
    if report.valid:
        print(f"valid: {g.n} points, {len(g.edges)} edges, 0 violations")
        return 0
    for v in report.violations:
        print(f"violation: vertex {v.u}, neighbors {v.v} and {v.w} ({v.kind})")
    print(f"invalid: {len(report.violations)} violations")
    return 1


def _cmd_extremal(args: argparse.Namespace) -> int:
    ps = io.load_points(args.points, args.epsilon)
    result = max_lgg(ps)
    print(f"max_edges={result.max_edges}")
    print(f"nodes_explored={result.nodes_explored}")
    print("witness=" + " ".join(f"{i}-{j}" for i, j in result.witness.edges))
    return 0


def _cmd_indepset(args: argparse.Namespace) -> int:
    g = io.load_graph(args.graph)
    result = independent_set(g)
    print(
        f"size={len(result.vertices)} guarantee={result.guarantee} "
        f"method={result.method.value}"
    )
    print("vertices=" + " ".join(str(v) for v in sorted(result.vertices)))
    return 0


def _build_sample(side: int, mode: str, theta0: float, c1: float):
    params = grid.GridParams(g=side, theta0=theta0, c1=c1, mode=grid.Mode(mode))
    g, stats = grid.build(params)
    return side, ScalingSample(g.n, stats.total_edges)


def _cmd_scaling(args: argparse.Namespace) -> int:
    sides = sorted({int(s) for s in args.sides.split(",") if s.strip()})
    if len(sides) < 2:
        raise io.FormatError("scaling needs at least two grid sides")
    workers = int(os.environ.get("LGG_THREADS", "0")) or None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(
            pool.map(
                lambda s: _build_sample(s, args.mode, args.theta0, args.c1), sides
            )
        )
    rows.sort()
    fit = fit_exponent([sample for _, sample in rows])
    lines = ["g,n,edges,edges_per_n"]
    for side, s in rows:
        lines.append(f"{side},{s.n},{s.edges},{s.edges_per_n!r}")
    lines.append(
        f"# fit: slope={fit.slope!r} intercept={fit.intercept!r} "
        f"r_squared={fit.r_squared!r}"
    )
    _write_out("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_emit_svg(args: argparse.Namespace) -> int:
    g = io.load_graph(args.graph)
    disk = None
    if args.disk:
        try:
            i, j = (int(t) for t in args.disk.split(","))
        except ValueError as exc:
            raise io.FormatError(f"--disk expects 'i,j': {exc}") from exc
        disk = (i, j)
    _write_out(io.graph_to_svg(g, args.width, disk), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="lgg", description="locally Gabriel graph toolkit"
    )
    sub = top.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph")
    kinds = c.add_subparsers(dest="kind", required=True)

    cg = kinds.add_parser("grid", help="dense grid construction")
    cg.add_argument("--side", type=int, required=True, help="grid side g (n = g*g)")
    cg.add_argument("--mode", choices=["greedy", "analysis"], default="greedy")
    cg.add_argument("--theta0", type=float, default=1.74e-3)
    cg.add_argument("--c1", type=float, default=1.01)

    cp = kinds.add_parser("path", help="path on a strictly monotonic set")
    cp.add_argument("--points", required=True, help="points CSV file")
    cp.add_argument("--epsilon", type=float, default=io.DEFAULT_EPSILON)

    for name, hlp in (
        ("fan", "quarter-circle star plus path (2n-3 edges)"),
        ("cycle", "cycle on a circle (n edges)"),
        ("ladder", "centrally symmetric two-line construction"),
    ):
        k = kinds.add_parser(name, help=hlp)
        k.add_argument("--n", type=int, required=True)
        if name != "ladder":
            k.add_argument("--radius", type=float, default=convex.DEFAULT_RADIUS)
    for k in kinds.choices.values():
        k.add_argument("-o", "--output", default=None, help="output graph JSON")

    v = sub.add_parser("verify", help="check the locally Gabriel condition")
    v.add_argument("graph", help="graph JSON file")

    e = sub.add_parser("extremal", help="exact maximum LGG on a small point set")
    e.add_argument("--points", required=True)
    e.add_argument("--epsilon", type=float, default=io.DEFAULT_EPSILON)

    i = sub.add_parser("indepset", help="independent set of a valid LGG")
    i.add_argument("graph")

    s = sub.add_parser("scaling", help="edge counts and log-log fit over grid sizes")
    s.add_argument("--sides", required=True, help="comma-separated grid sides")
    s.add_argument("--mode", choices=["greedy", "analysis"], default="greedy")
    s.add_argument("--theta0", type=float, default=1.74e-3)
    s.add_argument("--c1", type=float, default=1.01)
    s.add_argument("-o", "--output", default=None)

    g = sub.add_parser("emit-svg", help="render a graph to static SVG")
    g.add_argument("graph")
    g.add_argument("--disk", default=None, help="i,j: draw that edge's disk")
    g.add_argument("--width", type=int, default=800)
    g.add_argument("-o", "--output", default=None)

    return top


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "extremal": _cmd_extremal,
    "indepset": _cmd_indepset,
    "scaling": _cmd_scaling,
    "emit-svg": _cmd_emit_svg,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (io.FormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (convex.ConstructionError, grid.GridConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
