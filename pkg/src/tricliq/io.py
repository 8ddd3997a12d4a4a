"""Reading and writing graphs as edge-list text and DIMACS clique files."""

from __future__ import annotations

import os

from .graph import Graph, GraphError


class FormatError(GraphError):
    """Malformed graph file; ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_edge_list(text: str) -> Graph:
    """Parse the plain format: first line ``n m``, then m lines ``u v``."""
    lines = text.splitlines()
    rows = [
        (i + 1, ln.split())
        for i, ln in enumerate(lines)
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not rows:
        raise FormatError("empty input", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise FormatError("expected header 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError("expected integer header 'n m'", lineno) from None
    pairs = []
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise FormatError("expected 'u v'", lineno)
        try:
            pairs.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise FormatError("expected integer endpoints", lineno) from None
    if len(pairs) != m:
        raise FormatError(f"header declares {m} edges, found {len(pairs)}",
                          rows[0][0])
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc), rows[0][0]) from exc


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS ascii clique format (``p edge n m`` / ``e u v``)."""
    n = None
    declared_m = None
    pairs = []
    for i, raw in enumerate(text.splitlines(), start=1):
        ln = raw.strip()
        if not ln or ln.startswith("c"):
            continue
        tok = ln.split()
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise FormatError("expected 'p edge n m'", i)
            try:
                n, declared_m = int(tok[2]), int(tok[3])
            except ValueError:
                raise FormatError("expected integers in problem line", i) from None
        elif tok[0] == "e":
            if n is None:
                raise FormatError("edge before problem line", i)
            if len(tok) != 3:
                raise FormatError("expected 'e u v'", i)
            try:
                pairs.append((int(tok[1]), int(tok[2])))
            except ValueError:
                raise FormatError("expected integer endpoints", i) from None
        else:
            raise FormatError(f"unknown record {tok[0]!r}", i)
    if n is None:
        raise FormatError("missing problem line", 1)
    if declared_m != len(pairs):
        raise FormatError(
            f"problem line declares {declared_m} edges, found {len(pairs)}", 1)
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc), 1) from exc


def format_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def loads(text: str) -> Graph:
    """Parse either supported format, sniffing on the first data line."""
    for ln in text.splitlines():
        s = ln.strip()
        if not s:
            continue
        if s.startswith(("c", "p", "e")):
            return parse_dimacs(text)
        if not s.startswith("#"):
            return parse_edge_list(text)
    raise FormatError("empty input", 1)


def load_graph(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump_graph(path: str | os.PathLike, g: Graph, fmt: str = "edges") -> None:
    text = format_dimacs(g) if fmt == "dimacs" else format_edge_list(g)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
