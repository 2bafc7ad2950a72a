"""Plain-text signed graph files.

::

    c comment
    p sg <n> <m>
    e <u> <v> <s>      (m lines, 1-based vertices, s one of +1 -1 1 + -)

Vertices are 1-based on disk and 0-based in memory.
"""

from __future__ import annotations

import sys
from typing import Iterable, TextIO

from .core import GraphError, SignedGraph, ValidationError, validate

_SIGNS = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}


class GraphFileError(GraphError):
    pass


def parse(text: str) -> SignedGraph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphFileError(f"line {lineno}: second problem line")
            if len(tokens) != 4 or tokens[1] != "sg":
                raise GraphFileError(f"line {lineno}: expected 'p sg <n> <m>'")
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphFileError(f"line {lineno}: vertex and edge counts must be integers") from None
            if n < 1 or m < 0:
                raise GraphFileError(f"line {lineno}: bad counts n={n} m={m}")
        elif kind == "e":
            if n is None:
                raise GraphFileError(f"line {lineno}: edge line before the problem line")
            if len(tokens) != 4:
                raise GraphFileError(f"line {lineno}: expected 'e <u> <v> <s>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFileError(f"line {lineno}: vertices must be integers") from None
            if tokens[3] not in _SIGNS:
                raise GraphFileError(f"line {lineno}: sign must be +1 or -1, got {tokens[3]!r}")
            edges.append((u - 1, v - 1, _SIGNS[tokens[3]]))
        else:
            raise GraphFileError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise GraphFileError("missing problem line 'p sg <n> <m>'")
    if len(edges) != m:
        raise GraphFileError(f"problem line announces {m} edges, found {len(edges)}")
    try:
        return validate(edges, n)
    except ValidationError as exc:
        raise GraphFileError(str(exc)) from None


def serialize(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p sg {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1} {'+1' if s > 0 else '-1'}" for u, v, s in g.edges)
    return "\n".join(lines) + "\n"


def read(path: str) -> SignedGraph:
    """Read a graph file; ``-`` means standard input."""
    if path == "-":
        return parse(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc.strerror}") from None


def write(g: SignedGraph, out: TextIO, comments: Iterable[str] = ()) -> None:
    out.write(serialize(g, comments))


def graph_json(g: SignedGraph) -> dict:
    return {"n": g.n, "edges": [[u + 1, v + 1, s] for u, v, s in g.edges]}
