"""Line-oriented text format for oriented graphs.

::

    # optional comments
    n 4
    0 1
    2 1

The first non-comment line declares the vertex count; every later line is an
arc ``u v`` meaning ``u -> v`` with 0-based ids.
"""

from __future__ import annotations

from .graph import (
    ArcError,
    DuplicateArcError,
    LoopError,
    OrientedGraph,
    TwoCycleError,
    VertexRangeError,
)

__all__ = [
    "GraphFormatError",
    "MalformedHeaderError",
    "MalformedLineError",
    "VertexRangeError",
    "DuplicateArcError",
    "TwoCycleError",
    "LoopError",
    "read_graph",
    "write_graph",
    "load_graph",
    "save_graph",
]


class GraphFormatError(ArcError):
    """Text that does not parse as a graph file."""


class MalformedHeaderError(GraphFormatError):
    pass


class MalformedLineError(GraphFormatError):
    pass


def read_graph(text: str) -> OrientedGraph:
    n = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise MalformedHeaderError(f"line {lineno}: expected 'n <N>', got {raw!r}")
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise MalformedLineError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLineError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        arcs.append((u, v))
    if n is None:
        raise MalformedHeaderError("missing 'n <N>' header")
    # from_arcs raises the specific loop / duplicate / 2-cycle / range errors
    return OrientedGraph.from_arcs(n, arcs)


def write_graph(g: OrientedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def load_graph(path) -> OrientedGraph:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def save_graph(g: OrientedGraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g, comment))
