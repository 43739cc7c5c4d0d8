"""Command-line interface.

Exit codes: 0 success with a verified coloring, 1 precondition failure or
infeasible/unverified result, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import generators
from .coloring import EdgeColoring
from .errors import (
    ColoringError,
    GraphError,
    InternalStructureViolation,
    MinDegreeTooLow,
    ParseError,
    PreconditionError,
    Timeout,
)
from .euler2 import balanced_2coloring, balanced_2coloring_pinned
from .io import EdgeListFile, build_report, dump_report, load_colors, read_graph, serialize
from .majority3 import majority3
from .properedge import alpha_majority_k2, majority4
from .randomized import ResampleConfig, resample_until_valid
from .verify import has_majority_coloring, parse_alpha, verify_alpha, verify_majority

EXIT_OK, EXIT_FAIL, EXIT_IO = 0, 1, 2
COMMANDS = ("color2", "color2-pinned", "color4", "color3", "alpha", "random", "verify", "oracle", "gen", "bench")


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majcolor", description="Majority edge-colorings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, needs_input=True):
        if needs_input:
            p.add_argument("--input", "-i", required=True, help="edge-list file")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    common(sub.add_parser("color2", help="balanced 2-coloring via Euler tour"))
    p = common(sub.add_parser("color2-pinned", help="exact 2-coloring of an Eulerian graph with odd size"))
    p.add_argument("--pin", type=int, required=True, help="vertex receiving the surplus (input numbering)")
    common(sub.add_parser("color4", help="majority 4-coloring (min degree >= 2)"))
    common(sub.add_parser("color3", help="majority 3-coloring (min degree >= 4)"))
    p = common(sub.add_parser("alpha", help="1/k-majority (k+2)-coloring (min degree >= k(k-1))"))
    p.add_argument("--k", type=int, required=True)
    p = common(sub.add_parser("random", help="1/k-majority (k+1)-coloring by resampling"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=None)
    p = common(sub.add_parser("verify", help="check a coloring"))
    p.add_argument("--coloring", required=True, help="JSON report, JSON list, or whitespace-separated colors")
    p.add_argument("--k", type=int, help="number of colors (default: largest color used)")
    p.add_argument("--alpha", help="check the p/q-majority condition instead of 1/2")
    p = common(sub.add_parser("oracle", help="exhaustive minimum number of colors"))
    p.add_argument("--k", type=int, default=4, help="largest number of colors to try")
    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--output", "-o")
    p.add_argument("--zero-based", action="store_true", help="omit the header and use 0-based ids")
    p = common(sub.add_parser("bench", help="time every algorithm on a generated suite"), needs_input=False)
    p.add_argument("--count", type=int, default=20, help="instances per algorithm")
    p.add_argument("--n", type=int, default=40, help="vertices per instance")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _load(args) -> EdgeListFile:
    try:
        return read_graph(args.input)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {args.input}: {exc.strerror or exc}") from None
    except (ParseError, GraphError) as exc:
        raise _Fail(EXIT_IO, f"{args.input}: {exc}") from None


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot write {args.output}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)


def _timed(fn, *a):
    t0 = time.perf_counter()
    out = fn(*a)
    return out, (time.perf_counter() - t0) * 1000


def _finish(args, report: dict) -> int:
    _emit(args, dump_report(report, args.format))
    return EXIT_OK if report["verified"] else EXIT_FAIL


def _cmd_color(args) -> int:
    f = _load(args)
    g, off = f.graph, f.offset
    crit, extra = "majority", {}
    if args.command == "color2":
        c, ms = _timed(balanced_2coloring, g)
        crit = "balanced2"
    elif args.command == "color2-pinned":
        pin = args.pin - off
        if not 0 <= pin < g.n:
            raise _Fail(EXIT_FAIL, f"pin vertex {args.pin} does not exist")
        c, ms = _timed(balanced_2coloring_pinned, g, pin)
        crit, extra = "balanced2", {"pin": pin}
    elif args.command == "color4":
        c, ms = _timed(majority4, g)
    elif args.command == "color3":
        c, ms = _timed(majority3, g)
    elif args.command == "alpha":
        c, ms = _timed(alpha_majority_k2, g, args.k)
        crit, extra = "alpha", {"alpha": Fraction(1, args.k)}
    else:
        cfg = ResampleConfig(args.k, args.max_rounds, args.seed)
        c, ms = _timed(resample_until_valid, g, cfg)
        crit, extra = "alpha", {"alpha": Fraction(1, args.k), "seed": args.seed}
    report = build_report(g, c, args.command, crit, offset=off, millis=ms, **extra)
    return _finish(args, report)


def _cmd_verify(args) -> int:
    f = _load(args)
    try:
        colors = load_colors(args.coloring)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {args.coloring}: {exc.strerror or exc}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise _Fail(EXIT_IO, f"{args.coloring}: not a coloring ({exc})") from None
    k = args.k or max(colors, default=1)
    c = EdgeColoring(tuple(colors), k)
    try:
        if args.alpha:
            report = build_report(f.graph, c, "verify", "alpha", offset=f.offset, alpha=parse_alpha(args.alpha))
        else:
            report = build_report(f.graph, c, "verify", "majority", offset=f.offset)
    except ColoringError as exc:
        raise _Fail(EXIT_FAIL, str(exc)) from None
    return _finish(args, report)


def _cmd_oracle(args) -> int:
    f = _load(args)
    g = f.graph
    t0 = time.perf_counter()
    witness = None
    for k in range(1, args.k + 1):
        witness = has_majority_coloring(g, k)
        if witness is not None:
            break
    ms = (time.perf_counter() - t0) * 1000
    if witness is None:
        report = {"algorithm": "oracle", "k_max": args.k, "minimum": None, "verified": False,
                  "millis": round(ms, 3)}
        if args.format == "json":
            _emit(args, json.dumps(report, indent=2) + "\n")
        else:
            _emit(args, f"no majority k-edge-coloring for any k <= {args.k}\n")
        return EXIT_FAIL
    report = build_report(g, witness, "oracle", offset=f.offset, millis=ms)
    report["minimum"] = witness.k
    report["k_max"] = args.k
    if args.format == "text":
        _emit(args, f"minimum : {witness.k}\n" + dump_report(report, "text"))
        return EXIT_OK if report["verified"] else EXIT_FAIL
    return _finish(args, report)


def _cmd_gen(args) -> int:
    try:
        g = generators.generate(args.family, *args.params)
    except (ValueError, RuntimeError) as exc:
        raise _Fail(EXIT_FAIL, str(exc)) from None
    comment = f"{args.family} {' '.join(args.params)}".strip()
    _emit(args, serialize(g, one_based=not args.zero_based, comment=comment))
    return EXIT_OK


def _bench_suite(n: int, count: int, seed: int):
    delta_for = {"color2": 2, "color4": 2, "color3": 4, "alpha": 6, "random": 8}
    for name, delta in delta_for.items():
        for i in range(count):
            yield name, n, delta, seed + i


def _bench_one(job) -> tuple[str, float, bool]:
    name, n, delta, seed = job
    g = generators.random_mindeg(n, delta, seed)
    t0 = time.perf_counter()
    if name == "color2":
        c = balanced_2coloring(g) if g.m % 2 == 0 or any(d % 2 for d in g.degrees()) else None
        ok = c is not None
    elif name == "color4":
        ok = not verify_majority(g, majority4(g))
    elif name == "color3":
        ok = not verify_majority(g, majority3(g))
    elif name == "alpha":
        ok = not verify_alpha(g, alpha_majority_k2(g, 3), "1/3")
    else:
        try:
            ok = not verify_alpha(g, resample_until_valid(g, ResampleConfig(2, rng_seed=seed)), "1/2")
        except Timeout:
            ok = False
    return name, (time.perf_counter() - t0) * 1000, ok


def _p90(xs: list[float]) -> float:
    if len(xs) < 2:
        return xs[0]
    return statistics.quantiles(xs, n=10, method="inclusive")[8]


def _cmd_bench(args) -> int:
    jobs = list(_bench_suite(args.n, args.count, args.seed))
    workers = max(1, int(os.environ.get("MAJCOLOR_THREADS", "1") or 1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_bench_one, jobs))
    else:
        results = [_bench_one(j) for j in jobs]
    summary = {}
    for name in dict.fromkeys(r[0] for r in results):
        times = [t for nm, t, _ in results if nm == name]
        summary[name] = {
            "instances": len(times),
            "ok": sum(1 for nm, _, ok in results if nm == name and ok),
            "p50_ms": round(statistics.median(times), 3),
            "p90_ms": round(_p90(times), 3),
            "max_ms": round(max(times), 3),
        }
    if args.format == "json":
        _emit(args, json.dumps({"n": args.n, "workers": workers, "results": summary}, indent=2) + "\n")
    else:
        lines = [f"{'algorithm':<10} {'ok':>7} {'p50 ms':>10} {'p90 ms':>10} {'max ms':>10}"]
        for name, s in summary.items():
            lines.append(
                f"{name:<10} {s['ok']:>3}/{s['instances']:<3} {s['p50_ms']:>10} {s['p90_ms']:>10} {s['max_ms']:>10}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if all(s["ok"] == s["instances"] for s in summary.values()) else EXIT_FAIL


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"verify": _cmd_verify, "oracle": _cmd_oracle, "gen": _cmd_gen, "bench": _cmd_bench}
    handler = handlers.get(args.command, _cmd_color)
    try:
        return handler(args)
    except _Fail as exc:
        print(f"majcolor: {exc}", file=sys.stderr)
        return exc.code
    except MinDegreeTooLow as exc:
        offset = read_graph(args.input).offset if getattr(args, "input", None) else 0
        print(
            f"majcolor: minimum degree {exc.degree} < {exc.required} (vertex {exc.vertex + offset})",
            file=sys.stderr,
        )
        return EXIT_FAIL
    except (PreconditionError, Timeout, ValueError) as exc:
        print(f"majcolor: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InternalStructureViolation as exc:
        print(f"majcolor: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
