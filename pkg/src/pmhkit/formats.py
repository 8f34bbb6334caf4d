"""Text and JSON formats for graphs, matchings and reports.

Edge list::

    p <n> <m>
    c label C6xC3
    c grid 6 3 cycle cycle
    0 1
    ...

Lines starting with ``c`` are comments; the ``label`` and ``grid`` comments
are optional and restore the graph's metadata when read back.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Optional

from .errors import FormatError
from .graph import Graph, GridShape
from .matchings import Matching


def _grid_words(shape: GridShape) -> str:
    kind = lambda c: "cycle" if c else "path"
    return f"{shape.p} {shape.q} {kind(shape.p_cyclic)} {kind(shape.q_cyclic)}"


def graph_to_edgelist(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    if g.label:
        lines.append(f"c label {g.label}")
    if g.grid is not None:
        lines.append(f"c grid {_grid_words(g.grid)}")
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _parse_grid(words: List[str], lineno: int) -> GridShape:
    try:
        p, q = int(words[0]), int(words[1])
        kinds = [w == "cycle" for w in words[2:4]]
        if len(kinds) != 2 or any(w not in ("cycle", "path") for w in words[2:4]):
            raise ValueError
    except (ValueError, IndexError):
        raise FormatError(f"line {lineno}: bad grid comment {' '.join(words)!r}")
    return GridShape(p, q, kinds[0], kinds[1])


def parse_edgelist(text: str) -> Graph:
    n = m = None
    label, grid = "", None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "c":
            if len(words) >= 3 and words[1] == "label":
                label = " ".join(words[2:])
            elif len(words) >= 2 and words[1] == "grid":
                grid = _parse_grid(words[2:], lineno)
            continue
        if words[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: second header line")
            try:
                n, m = int(words[-2]), int(words[-1])
            except (ValueError, IndexError):
                raise FormatError(f"line {lineno}: header must be 'p <n> <m>', got {line!r}")
            continue
        if n is None:
            raise FormatError(f"line {lineno}: edge before the 'p <n> <m>' header")
        if words[0] == "e":
            words = words[1:]
        if len(words) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(words[0]), int(words[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {line!r}")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"line {lineno}: bad edge ({u}, {v}) for n={n}")
        edges.append((u, v))
    if n is None:
        raise FormatError("missing 'p <n> <m>' header")
    g = Graph(n, edges, label=label, grid=grid)
    if g.m != m:
        raise FormatError(f"header announces {m} edges, found {g.m} distinct edges")
    return g


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "label": g.label}
    if g.grid is not None:
        out["grid"] = {"p": g.grid.p, "q": g.grid.q,
                       "p_cyclic": g.grid.p_cyclic, "q_cyclic": g.grid.q_cyclic}
    return out


def graph_from_json(data) -> Graph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON at line {exc.lineno}: {exc.msg}")
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError("graph JSON needs fields 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise FormatError(f"field 'n' must be a non-negative integer, got {n!r}")
    edges = []
    for i, e in enumerate(data["edges"]):
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(x, int) for x in e)):
            raise FormatError(f"field 'edges[{i}]' must be a pair of integers, got {e!r}")
        if not (0 <= e[0] < n and 0 <= e[1] < n) or e[0] == e[1]:
            raise FormatError(f"field 'edges[{i}]' = {e!r} is not an edge on {n} vertices")
        edges.append(tuple(e))
    grid = None
    if data.get("grid"):
        gd = data["grid"]
        try:
            grid = GridShape(int(gd["p"]), int(gd["q"]), bool(gd["p_cyclic"]),
                             bool(gd["q_cyclic"]))
        except (KeyError, TypeError, ValueError):
            raise FormatError("field 'grid' must have p, q, p_cyclic, q_cyclic")
    return Graph(n, edges, label=str(data.get("label") or ""), grid=grid)


def matching_to_json(m: Matching) -> dict:
    return {"n": m.n, "pairs": [list(e) for e in m.sorted_pairs()]}


def matching_from_json(data) -> Matching:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON at line {exc.lineno}: {exc.msg}")
    if not isinstance(data, dict) or "n" not in data or "pairs" not in data:
        raise FormatError("matching JSON needs fields 'n' and 'pairs'")
    pairs = []
    for i, e in enumerate(data["pairs"]):
        if (not isinstance(e, (list, tuple)) or len(e) != 2
                or not all(isinstance(x, int) for x in e)):
            raise FormatError(f"field 'pairs[{i}]' must be a pair of integers, got {e!r}")
        pairs.append(tuple(e))
    return Matching(pairs, data["n"])


def matching_to_compact(m: Matching) -> str:
    return " ".join(f"{u}-{v}" for u, v in m.sorted_pairs())


def matching_from_compact(text: str, n: int) -> Matching:
    pairs = []
    for tok in text.split():
        parts = tok.split("-")
        if len(parts) != 2:
            raise FormatError(f"token {tok!r}: expected 'u-v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"token {tok!r}: non-integer vertex")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"token {tok!r}: vertex out of range for n={n}")
        pairs.append((u, v))
    return Matching(pairs, n)


def dumps(obj) -> str:
    """Stable JSON encoding used for every report line."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def reports_to_jsonl(reports: Iterable[dict], config: Optional[dict] = None) -> str:
    lines = [dumps({"config": config})] if config is not None else []
    lines += [dumps(r) for r in reports]
    return "\n".join(lines) + "\n"


def reports_to_csv(reports: Iterable[dict], config: Optional[dict] = None) -> str:
    """Summary rows ``graph, property, verdict, count, seconds``."""
    buf = io.StringIO()
    if config is not None:
        buf.write(f"# config {dumps(config)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph", "property", "verdict", "count", "seconds"])
    for r in reports:
        writer.writerow([r.get("graph"), r.get("property"), r.get("verdict"),
                         r.get("total_checked"), r.get("elapsed", "")])
    return buf.getvalue()
