"""Command-line front end.

Exit codes: 0 success, 2 validation error, 3 reproduction or sweep
mismatch, 4 result bracketed by the time budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import golden
from .constructions import ConstructionError, build_certificate, certificate_json
from .geometry import (
    CoordinateError,
    GeneralPositionError,
    GenerationError,
    PointSet,
    cacerola_points,
    gen_convex,
    gen_double_chain,
    gen_random_general_position,
    load_pointset,
)
from .graph import (
    INFINITY,
    build_disjointness_graph,
    diameter,
    is_connected,
    to_dot,
    to_json_dict,
)
from .solver import _witness_from_blockers, mu_exact, mu_report_json
from .svg import render_svg

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_BRACKETED = 4

DESK_SCALE_WARN = 45  # vertices; larger exact runs want a time budget


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_VALIDATION):
        super().__init__(message)
        self.code = code


def parse_gen_spec(spec: str, default_bound: int = 10000) -> PointSet:
    """Compact generator specs: convex:N, double-chain:P,Q,
    random:N:SEED[:BOUND], cacerola."""
    if spec == "cacerola":
        return cacerola_points()
    kind, _, rest = spec.partition(":")
    try:
        if kind == "convex":
            return gen_convex(int(rest))
        if kind == "double-chain":
            p, q = (int(t) for t in rest.split(","))
            return gen_double_chain(p, q)
        if kind == "random":
            parts = rest.split(":")
            n, seed = int(parts[0]), int(parts[1])
            bound = int(parts[2]) if len(parts) > 2 else default_bound
            return gen_random_general_position(n, seed, bound)
    except (ValueError, IndexError) as exc:
        raise CliError(f"malformed generator spec {spec!r}: {exc}") from exc
    raise CliError(f"unknown generator spec {spec!r}")


def resolve_pointset(args) -> PointSet:
    if args.points:
        if args.points == "cacerola":
            return cacerola_points()
        try:
            return load_pointset(args.points)
        except FileNotFoundError as exc:
            raise CliError(f"point file not found: {args.points}") from exc
        except (ValueError, CoordinateError, GeneralPositionError) as exc:
            raise CliError(f"invalid point file {args.points}: {exc}") from exc
    try:
        return parse_gen_spec(args.gen)
    except (GenerationError, GeneralPositionError, ValueError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(f"generator failed: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def cmd_build(args) -> int:
    ps = resolve_pointset(args)
    g = build_disjointness_graph(ps)
    d = diameter(g)
    if args.format == "dot":
        _emit(to_dot(g), args.out)
    elif args.format == "json":
        data = to_json_dict(g)
        data["diameter"] = None if d == INFINITY else int(d)
        data["connected"] = is_connected(g)
        _emit(_json_dumps(data), args.out)
    else:
        _emit(
            f"points: {ps.n}\nvertices: {g.n_vertices}\nedges: {g.n_edges}\n"
            f"connected: {is_connected(g)}\n"
            f"diameter: {'inf' if d == INFINITY else int(d)}\n",
            args.out,
        )
    return EXIT_OK


def cmd_certificate(args) -> int:
    ps = resolve_pointset(args)
    if ps.n < 5:
        raise CliError("certificates need n >= 5")
    g = build_disjointness_graph(ps)
    cert = build_certificate(ps, g)
    if args.format == "svg":
        _emit(render_svg(ps, cert.blockers), args.out)
    elif args.format == "text":
        case = f"({cert.case})" if cert.case is not None else ""
        _emit(
            f"strategy: {cert.strategy}{case}\nsize: {cert.size}\n"
            f"mu_lower_bound: {cert.mu_lower_bound}\nverified: {cert.verified}\n"
            f"S: {' '.join(f'{i}-{j}' for i, j in cert.blockers)}\n",
            args.out,
        )
    else:
        _emit(_json_dumps(certificate_json(cert)), args.out)
    return EXIT_OK


def cmd_mu(args) -> int:
    ps = resolve_pointset(args)
    if ps.n < 5:
        raise CliError("mu needs n >= 5 (the graph must be connected)")
    g = build_disjointness_graph(ps)
    if g.n_vertices > DESK_SCALE_WARN and not args.time_budget:
        print(
            f"warning: {g.n_vertices} vertices is beyond desk scale; "
            "consider --time-budget",
            file=sys.stderr,
        )
    cert = build_certificate(ps, g)
    witness = _witness_from_blockers(g, cert.blockers)
    res = mu_exact(
        g,
        witness_hint=witness,
        threads=args.threads,
        time_budget_s=args.time_budget,
    )
    data = mu_report_json(res, g)
    data["certificate"] = certificate_json(cert)
    _emit(_json_dumps(data), args.out)
    return EXIT_OK if res.mu is not None else EXIT_BRACKETED


def cmd_reproduce(args) -> int:
    rows = golden.run_golden_suite(threads=args.threads)
    all_pass = all(r["pass"] for r in rows)
    if args.format == "json" or args.out:
        _emit(_json_dumps({"rows": rows, "all_pass": all_pass}), args.out)
    if args.format != "json":
        width = max(len(r["name"]) for r in rows)
        table = []
        for r in rows:
            mark = "PASS" if r["pass"] else "FAIL"
            table.append(f"{r['name']:<{width}}  {mark}  expected={r['expected']!r} computed={r['computed']!r}")
        table.append("all rows pass" if all_pass else "MISMATCH")
        sys.stdout.write("\n".join(table) + "\n")
    return EXIT_OK if all_pass else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    from .graph import diameter as graph_diameter

    diam_range = {5: (2, 4), 6: (2, 3), 7: (2, 3), 8: (2, 3)}
    stats = {
        "instances": 0,
        "diameter_violations": [],
        "strategy_counts": {},
        "fallback_invocations": 0,
        "fallbacks": [],
        "unverified": [],
    }
    for n in range(args.n_min, args.n_max + 1):
        for k in range(args.count):
            seed = args.seed + 1000 * n + k
            ps = gen_random_general_position(n, seed=seed, bound=args.bound)
            g = build_disjointness_graph(ps)
            stats["instances"] += 1
            d = graph_diameter(g)
            lo, hi = diam_range.get(n, (2, 2))
            if not (lo <= d <= hi):
                stats["diameter_violations"].append(
                    {"n": n, "seed": seed, "diameter": d, "points": ps.coords()}
                )
            try:
                cert = build_certificate(ps, g)
            except ConstructionError as exc:
                stats["unverified"].append(
                    {"n": n, "seed": seed, "error": str(exc), "points": ps.coords()}
                )
                continue
            key = cert.strategy + (f"({cert.case})" if cert.case is not None else "")
            stats["strategy_counts"][key] = stats["strategy_counts"].get(key, 0) + 1
            if cert.strategy == "FallbackSearch":
                stats["fallback_invocations"] += 1
                stats["fallbacks"].append(
                    {"n": n, "seed": seed, "points": ps.coords()}
                )
            if not cert.verified or cert.size > 9:
                stats["unverified"].append(
                    {"n": n, "seed": seed, "points": ps.coords()}
                )
    clean = (
        not stats["diameter_violations"]
        and not stats["unverified"]
        and stats["fallback_invocations"] == 0
    )
    stats["clean"] = clean
    _emit(_json_dumps(stats), args.out)
    return EXIT_OK if clean else EXIT_MISMATCH


def _add_input_opts(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--points", help="point-set file (.json/.csv) or 'cacerola'")
    grp.add_argument("--gen", help="generator spec: convex:N | double-chain:P,Q | random:N:SEED[:BOUND] | cacerola")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segvis",
        description="Disjointness graphs of planar segments: diameters, "
        "mutual-visibility numbers, blocker-set certificates.",
    )
    default_threads = int(os.environ.get("SEGVIS_THREADS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the graph and report its metrics")
    _add_input_opts(p)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("certificate", help="construct a verified blocker set")
    _add_input_opts(p)
    p.add_argument("--format", choices=["json", "svg", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("mu", help="exact mutual-visibility number")
    _add_input_opts(p)
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("reproduce", help="run the golden reproduction table")
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("sweep", help="random-instance diameter/certificate sweep")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=10000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GeneralPositionError, CoordinateError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
