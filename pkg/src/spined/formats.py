"""Reading and writing graphs and hypergraphs.

Graph formats:

``edgelist``
    first line the vertex count, then one ``u v`` pair per line, 0-based.
``dimacs``
    ``p edge n m`` header and ``e u v`` lines, 1-based; ``c`` lines are comments.
``json``
    ``{"vertices": n, "edges": [[u, v], ...]}``

Hypergraph formats are ``hypertext`` (vertex count, then one space-separated
hyperedge per line) and ``json`` with a ``hyperedges`` key.  Blank lines and
``#`` comments are ignored in the line-oriented formats.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError, RangeError
from .graph import SimpleGraph
from .hypergraph import Hypergraph

GRAPH_FORMATS = ("edgelist", "dimacs", "json")
HYPERGRAPH_FORMATS = ("hypertext", "hyperjson")

_EXTENSIONS = {
    ".txt": "edgelist",
    ".el": "edgelist",
    ".edges": "edgelist",
    ".col": "dimacs",
    ".dimacs": "dimacs",
    ".json": "json",
    ".hg": "hypertext",
    ".hgr": "hypertext",
}


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, raw, line


def _int(token: str, lineno: int, raw: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno, raw.find(token) + 1) from None


def _header(text: str, what: str):
    lines = _lines(text)
    try:
        lineno, raw, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing {what}", 1, 1) from None
    tokens = line.split()
    if len(tokens) != 1:
        raise ParseError("first line must hold only the vertex count", lineno, 1)
    n = _int(tokens[0], lineno, raw)
    if n < 0:
        raise ParseError("vertex count must be non-negative", lineno, 1)
    return n, lines


def _edge_list(text: str) -> SimpleGraph:
    n, lines = _header(text, "vertex count")
    edges = []
    for lineno, raw, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line.strip()!r}", lineno, 1)
        u, v = (_int(t, lineno, raw) for t in tokens)
        edges.append(_checked_edge(u, v, n, lineno))
    return SimpleGraph(n, edges)


def _checked_edge(u: int, v: int, n: int, lineno: int) -> tuple[int, int]:
    if not (0 <= u < n and 0 <= v < n):
        raise RangeError(f"line {lineno}: edge ({u}, {v}) out of range for {n} vertices")
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", lineno, 1)
    return u, v


def _dimacs(text: str) -> SimpleGraph:
    n = None
    edges = []
    for lineno, raw, line in _lines(text):
        tokens = line.split()
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno, 1)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge n m'", lineno, 1)
            n = _int(tokens[2], lineno, raw)
            _int(tokens[3], lineno, raw)
        elif kind == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno, 1)
            if len(tokens) != 3:
                raise ParseError("expected 'e u v'", lineno, 1)
            u, v = (_int(t, lineno, raw) - 1 for t in tokens[1:])
            edges.append(_checked_edge(u, v, n, lineno))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno, raw.find(kind) + 1)
    if n is None:
        raise ParseError("missing problem line", 1, 1)
    return SimpleGraph(n, edges)


def _json_doc(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), int):
        raise ParseError("expected an object with an integer 'vertices' field", 1, 1)
    return doc


def _json_graph(text: str) -> SimpleGraph:
    doc = _json_doc(text)
    n = doc["vertices"]
    edges = []
    for pair in doc.get("edges", []):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise ParseError(f"bad edge {pair!r}", 1, 1)
        edges.append(_checked_edge(pair[0], pair[1], n, 1))
    return SimpleGraph(n, edges)


def parse_graph(text: str, fmt: str = "edgelist") -> SimpleGraph:
    if fmt == "edgelist":
        return _edge_list(text)
    if fmt == "dimacs":
        return _dimacs(text)
    if fmt == "json":
        return _json_graph(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_graph(G: SimpleGraph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return "".join([f"{G.vertex_count}\n"] + [f"{u} {v}\n" for u, v in G.edges])
    if fmt == "dimacs":
        head = f"p edge {G.vertex_count} {G.edge_count}\n"
        return head + "".join(f"e {u + 1} {v + 1}\n" for u, v in G.edges)
    if fmt == "json":
        return json.dumps({"vertices": G.vertex_count, "edges": [list(e) for e in G.edges]}) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")


def parse_hypergraph(text: str, fmt: str = "hypertext") -> Hypergraph:
    if fmt == "hypertext":
        n, lines = _header(text, "vertex count")
        edges = []
        for lineno, raw, line in lines:
            edge = [_int(t, lineno, raw) for t in line.split()]
            for v in edge:
                if not 0 <= v < n:
                    raise RangeError(f"line {lineno}: vertex {v} out of range for {n} vertices")
            edges.append(edge)
        return Hypergraph(n, edges)
    if fmt in ("hyperjson", "json"):
        doc = _json_doc(text)
        n = doc["vertices"]
        edges = doc.get("hyperedges", [])
        for edge in edges:
            if not isinstance(edge, list) or not all(isinstance(v, int) for v in edge):
                raise ParseError(f"bad hyperedge {edge!r}", 1, 1)
            for v in edge:
                if not 0 <= v < n:
                    raise RangeError(f"vertex {v} out of range for {n} vertices")
        return Hypergraph(n, edges)
    raise ValueError(f"unknown hypergraph format {fmt!r}")


def emit_hypergraph(H: Hypergraph, fmt: str = "hypertext") -> str:
    if fmt == "hypertext":
        body = "".join(" ".join(map(str, e)) + "\n" for e in H.hyperedges)
        return f"{H.vertex_count}\n" + body
    if fmt in ("hyperjson", "json"):
        doc = {"vertices": H.vertex_count, "hyperedges": [list(e) for e in H.hyperedges]}
        return json.dumps(doc) + "\n"
    raise ValueError(f"unknown hypergraph format {fmt!r}")


def detect_format(path: str | Path, text: str | None = None) -> str:
    """Guess the format from the file extension; JSON is split on its keys."""
    suffix = Path(path).suffix.lower()
    fmt = _EXTENSIONS.get(suffix, "edgelist")
    if fmt == "json" and text is not None:
        try:
            if "hyperedges" in json.loads(text):
                return "hyperjson"
        except (json.JSONDecodeError, TypeError):
            pass
    return fmt


def load(path: str | Path, fmt: str | None = None) -> SimpleGraph | Hypergraph:
    """Read a graph or hypergraph file, detecting the format unless given."""
    text = Path(path).read_text(encoding="utf-8")
    fmt = fmt or detect_format(path, text)
    if fmt in HYPERGRAPH_FORMATS:
        return parse_hypergraph(text, fmt)
    return parse_graph(text, fmt)
