"""Reading and writing graph files.

The native format is a header line ``n m`` followed by m lines ``u v`` with
0-based vertex ids; lines starting with ``#`` are comments. Files whose first
meaningful line after any ``c`` comments starts with ``p`` are read as DIMACS
(``p edge n m`` and 1-based ``e u v`` lines).
"""

from __future__ import annotations

from pathlib import Path

from .graph import MAX_VERTICES, Graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line))
    # DIMACS files usually open with 'c' comment lines before the 'p' header
    first = next((line for _, line in rows if not line.startswith("c")), "")
    if first.startswith("p"):
        return _parse_dimacs(text)
    if not rows:
        raise ParseError("missing header line 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = _ints(parts, lineno)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the limit of {MAX_VERTICES}", lineno)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header promises {m} edges, found {len(body)}", last)
    return Graph.from_edges(n, _collect_edges(body, n, offset=0, prefix=None))


def _collect_edges(body, n: int, offset: int, prefix: str | None) -> list[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in body:
        parts = line.split()
        if prefix is not None:
            if parts[0] != prefix:
                raise ParseError(f"expected an '{prefix}' line", lineno)
            parts = parts[1:]
        if len(parts) != 2:
            raise ParseError("edge line must have two vertex ids", lineno)
        u, v = (i - offset for i in _ints(parts, lineno))
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in edge {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u + offset}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {line!r}", lineno)
        seen.add(key)
        edges.append(key)
    return edges


def _parse_dimacs(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("c") and not line.startswith("#"):
            rows.append((lineno, line))
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 4 or parts[1] not in ("edge", "col"):
        raise ParseError("DIMACS header must be 'p edge n m'", lineno)
    n, m = _ints(parts[2:], lineno)
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the limit of {MAX_VERTICES}", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}", lineno)
    return Graph.from_edges(n, _collect_edges(body, n, offset=1, prefix="e"))


def render_graph(g: Graph) -> str:
    """Native format; vertices are renumbered 0..n-1 in ascending order."""
    index = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{g.n} {g.m}"]
    lines += [f"{index[a]} {index[b]}" for a, b in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(render_graph(g))
