"""DIMACS-style text format for graphs and disjoint instances.

::

    c optional comments
    p pvc4 <n> <m>
    e <u> <v>        (1-based ids, m lines)
    v1 <u>           (optional forbidden-set membership)

Ids are 1-based in files and 0-based in memory; the translation happens
here and nowhere else. Rendering is canonical (sorted edge and v1 lines, no
comments), so parse(render(x)) == x.
"""

from __future__ import annotations

from typing import Union

from .errors import GraphFormatError
from .graph import Graph
from .instance import Instance


def parse(text: str) -> Union[Graph, Instance]:
    """Parse file text; instances (with v1 lines) get budget |V2|."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    v1: list[int] = []
    has_v1 = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem header", lineno)
            if len(fields) != 4 or fields[1] != "pvc4":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError(f"malformed header {line!r}", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            u, v = _ids(fields[1:], 2, n, lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u + 1}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise GraphFormatError(f"duplicate edge {u + 1} {v + 1}", lineno)
            seen_edges.add(key)
            edges.append(key)
        elif fields[0] == "v1":
            if n is None:
                raise GraphFormatError("v1 line before header", lineno)
            (u,) = _ids(fields[1:], 1, n, lineno)
            has_v1 = True
            if u not in v1:
                v1.append(u)
        else:
            raise GraphFormatError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem header", 1)
    if len(edges) != m:
        raise GraphFormatError(f"header announced {m} edges, found {len(edges)}", 1)
    g = Graph(vertices=range(n), edges=edges)
    if has_v1:
        return Instance(g, v1, g.num_vertices - len(v1))
    return g


def _ids(fields: list[str], count: int, n: int, lineno: int) -> list[int]:
    if len(fields) != count:
        raise GraphFormatError(f"expected {count} vertex ids", lineno)
    out = []
    for f in fields:
        try:
            v = int(f)
        except ValueError:
            raise GraphFormatError(f"bad vertex id {f!r}", lineno) from None
        if not 1 <= v <= n:
            raise GraphFormatError(f"vertex id {v} out of range 1..{n}", lineno)
        out.append(v - 1)
    return out


def render(obj: Union[Graph, Instance], comments: tuple[str, ...] = ()) -> str:
    """Canonical text form. Vertex ids must be dense (0..n-1)."""
    if isinstance(obj, Instance):
        graph, v1 = obj.graph, sorted(obj.v1)
    else:
        graph, v1 = obj, []
    verts = graph.vertices()
    n = len(verts)
    if verts and verts[-1] != n - 1:
        raise ValueError("cannot render a graph with non-dense vertex ids")
    lines = [f"c {c}" for c in comments]
    lines.append(f"p pvc4 {n} {graph.num_edges}")
    lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges()]
    lines += [f"v1 {u + 1}" for u in v1]
    return "\n".join(lines) + "\n"
