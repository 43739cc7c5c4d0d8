"""Edge-list files and coloring reports.

File format (DIMACS-flavored)::

    c comment
    p edge <n> <m>      optional; when present ids are 1-based
    1 2                 one edge per line, an optional leading "e" is accepted

Without a ``p`` line ids are 0-based and ``n`` is the largest id plus one.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Any

from .coloring import EdgeColoring
from .errors import DuplicateEdge, GraphError, ParseError, SelfLoop
from .graph import Graph
from .verify import verify_alpha, verify_balanced2, verify_majority


@dataclass(frozen=True)
class EdgeListFile:
    graph: Graph
    one_based: bool = False

    @property
    def offset(self) -> int:
        return 1 if self.one_based else 0


def parse_text(text: str) -> EdgeListFile:
    header: tuple[int, int, int] | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if header is not None or pairs:
                raise ParseError(lineno, "header must come once, before any edge")
            if len(tokens) != 4 or tokens[1] not in ("edge", "edges", "col"):
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            try:
                header = (int(tokens[2]), int(tokens[3]), lineno)
            except ValueError:
                raise ParseError(lineno, "non-integer vertex or edge count") from None
            continue
        if tokens[0] == "e":
            tokens = tokens[1:]
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected two vertex ids, got {raw.strip()!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex id in {raw.strip()!r}") from None
        pairs.append((u, v, lineno))

    one_based = header is not None
    offset = 1 if one_based else 0
    if header is not None:
        n, m, hline = header
        if m != len(pairs):
            raise ParseError(hline, f"header declares {m} edges, found {len(pairs)}")
    else:
        n = max((max(u, v) for u, v, _ in pairs), default=-1) + 1
    edges = []
    seen: set[tuple[int, int]] = set()
    for u, v, lineno in pairs:
        for w in (u, v):
            if not offset <= w < n + offset:
                raise ParseError(lineno, f"vertex id {w} out of range")
        if u == v:
            raise _at_line(SelfLoop(u), lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise _at_line(DuplicateEdge(u, v), lineno)
        seen.add(key)
        edges.append((u - offset, v - offset))
    return EdgeListFile(Graph(n, edges), one_based)


def _at_line(exc: GraphError, lineno: int) -> GraphError:
    exc.line = lineno
    exc.args = (f"line {lineno}: {exc}",)
    return exc


def read_graph(path: str | os.PathLike) -> EdgeListFile:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def parse(source: str | os.PathLike | IO[str]) -> Graph:
    """Graph from a path or an open text file."""
    if hasattr(source, "read"):
        return parse_text(source.read()).graph
    return read_graph(source).graph


def serialize(g: Graph, one_based: bool = True, comment: str | None = None) -> str:
    """Edge-list text. Only the 1-based form (with header) keeps trailing isolated vertices."""
    lines = []
    if comment:
        lines += [f"c {line}" for line in comment.splitlines()]
    off = 1 if one_based else 0
    if one_based:
        lines.append(f"p edge {g.n} {g.m}")
    lines += [f"{u + off} {v + off}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def criterion_check(g: Graph, c: EdgeColoring, criterion: str, alpha=None, pin: int | None = None):
    if criterion == "majority":
        return verify_majority(g, c)
    if criterion == "alpha":
        return verify_alpha(g, c, alpha)
    if criterion == "balanced2":
        return verify_balanced2(g, c, pin)
    raise ValueError(f"unknown criterion {criterion!r}")


def build_report(
    g: Graph,
    c: EdgeColoring,
    algorithm: str,
    criterion: str = "majority",
    *,
    offset: int = 0,
    alpha: Fraction | str | None = None,
    seed: int | None = None,
    pin: int | None = None,
    millis: float = 0.0,
) -> dict[str, Any]:
    """Report dictionary; the verdict is always recomputed from ``c``.

    Vertex ids in tallies and violations are shifted by ``offset`` so they
    match the input file.
    """
    violations = criterion_check(g, c, criterion, alpha=alpha, pin=pin)
    tallies = c.tallies(g)
    report: dict[str, Any] = {
        "algorithm": algorithm,
        "k": c.k,
        "criterion": criterion,
        "colors": list(c.colors),
        "tallies": {str(u + offset): row for u, row in enumerate(tallies)},
        "verified": not violations,
        "violations": [
            dict(v.as_dict(), vertex=v.vertex + offset) for v in violations
        ],
        "millis": round(millis, 3),
    }
    if alpha is not None:
        report["alpha"] = str(Fraction(alpha))
    if seed is not None:
        report["seed"] = seed
    if pin is not None:
        report["pin"] = pin + offset
    return report


def report_to_text(report: dict[str, Any]) -> str:
    lines = [
        f"algorithm : {report['algorithm']}",
        f"colors    : {report['k']}",
        f"criterion : {report['criterion']}" + (f" ({report['alpha']})" if "alpha" in report else ""),
        f"verified  : {'yes' if report['verified'] else 'NO'}",
        f"time      : {report['millis']} ms",
        "",
        "vertex  " + " ".join(f"c{i + 1:<3}" for i in range(report["k"])),
    ]
    for v, row in report["tallies"].items():
        lines.append(f"{v:<7} " + " ".join(f"{x:<4}" for x in row))
    if report["violations"]:
        lines.append("")
        for viol in report["violations"]:
            lines.append(
                f"violation: vertex {viol['vertex']} color {viol['color']} "
                f"count {viol['count']} degree {viol['degree']}"
            )
    return "\n".join(lines) + "\n"


def dump_report(report: dict[str, Any], fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return report_to_text(report)


def load_colors(path: str | os.PathLike) -> list[int]:
    """Colors from a JSON report (``colors`` key), a JSON list, or whitespace-separated ints."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return [int(tok) for tok in text.split()]
    if isinstance(data, dict):
        data = data["colors"]
    return [int(x) for x in data]
