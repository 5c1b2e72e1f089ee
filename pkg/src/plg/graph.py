"""Undirected multigraphs with self-loops, plus a deterministic edge-list text format.

Degree convention: a self-loop contributes 2 to its vertex's degree per
multiplicity unit.  A vertex carrying a self-loop is adjacent to itself and
therefore never belongs to an independent set; multi-edges are equivalent to
single edges for independence.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import InputError, ParseError


class MultiGraph:
    """Undirected multigraph on vertices 0..n-1 with positive edge multiplicities.

    Treated as immutable after construction: all mutation happens through the
    edge dict handed to ``__init__``.  Labels are optional per-vertex text tags
    used by the embedders to record provenance ("embedded", "residual-G1", ...).
    """

    __slots__ = ("vertex_count", "_edges", "labels", "_degrees")

    def __init__(
        self,
        vertex_count: int,
        edges: dict[tuple[int, int], int] | Iterable[tuple[int, int]] | None = None,
        labels: dict[int, str] | None = None,
    ):
        if vertex_count < 0:
            raise InputError("vertex_count must be non-negative")
        self.vertex_count = int(vertex_count)
        normalized: dict[tuple[int, int], int] = {}
        if edges:
            items = edges.items() if isinstance(edges, dict) else ((e, 1) for e in edges)
            for (u, v), mult in items:
                if u > v:
                    u, v = v, u
                if not (0 <= u and v < self.vertex_count):
                    raise InputError(f"edge ({u},{v}) out of range for n={vertex_count}")
                if mult <= 0:
                    raise InputError(f"edge ({u},{v}) has non-positive multiplicity {mult}")
                normalized[(u, v)] = normalized.get((u, v), 0) + int(mult)
        self._edges = normalized
        self.labels = dict(labels) if labels else {}
        for v in self.labels:
            if not (0 <= v < self.vertex_count):
                raise InputError(f"label on unknown vertex {v}")
        self._degrees: np.ndarray | None = None

    # -- queries ------------------------------------------------------------

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, multiplicity) with u <= v, in sorted order."""
        for (u, v) in sorted(self._edges):
            yield u, v, self._edges[(u, v)]

    def edge_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._edges)

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._edges.get((u, v), 0)

    def distinct_edge_count(self) -> int:
        return len(self._edges)

    def total_multiplicity(self) -> int:
        return sum(self._edges.values())

    def degrees(self) -> np.ndarray:
        """Per-vertex degrees; self-loops count 2 per multiplicity unit."""
        if self._degrees is None:
            deg = np.zeros(self.vertex_count, dtype=np.int64)
            for (u, v), m in self._edges.items():
                if u == v:
                    deg[u] += 2 * m
                else:
                    deg[u] += m
                    deg[v] += m
            self._degrees = deg
        return self._degrees

    def degree(self, v: int) -> int:
        return int(self.degrees()[v])

    def has_loop(self, v: int) -> bool:
        return (v, v) in self._edges

    def adjacency_sets(self) -> list[set[int]]:
        """Distinct neighbours per vertex, self excluded."""
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for (u, v) in self._edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def is_simple(self) -> bool:
        return all(u != v and m == 1 for (u, v), m in self._edges.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self._edges == other._edges
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.vertex_count, frozenset(self._edges.items())))

    def __repr__(self):
        return f"MultiGraph(n={self.vertex_count}, edges={len(self._edges)})"


def degree_sequence(g: MultiGraph) -> list[int]:
    """Degrees sorted non-decreasing. Sum equals twice the total multiplicity."""
    return sorted(int(d) for d in g.degrees())


def is_independent(g: MultiGraph, members: Iterable[int]) -> bool:
    """True iff no edge joins two distinct members and no member has a self-loop.

    Raises InputError on out-of-range vertex ids.
    """
    s = set(members)
    for v in s:
        if not (0 <= v < g.vertex_count):
            raise InputError(f"vertex {v} out of range")
        if g.has_loop(v):
            return False
    if len(s) < 2:
        return True
    # Scan whichever side is smaller: member pairs or the edge dict.
    if len(s) * (len(s) - 1) // 2 <= g.distinct_edge_count():
        mem = sorted(s)
        ed = g._edges
        for i, u in enumerate(mem):
            for v in mem[i + 1 :]:
                if (u, v) in ed:
                    return False
        return True
    for (u, v) in g._edges:
        if u != v and u in s and v in s:
            return False
    return True


# -- text format ------------------------------------------------------------
#
# Header:   p plg <vertex_count> <distinct_edge_count>
# Edges:    e <u> <v> <multiplicity>       (u <= v, zero-based, one line per
#                                           distinct edge, sorted)
# Labels:   l <v> <tag>                    (optional, sorted by v)


def write_graph(g: MultiGraph) -> str:
    lines = [f"p plg {g.vertex_count} {g.distinct_edge_count()}"]
    for u, v, m in g.edges():
        lines.append(f"e {u} {v} {m}")
    for v in sorted(g.labels):
        lines.append(f"l {v} {g.labels[v]}")
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> MultiGraph:
    n = None
    declared_edges = None
    edges: dict[tuple[int, int], int] = {}
    labels: dict[int, str] = {}
    saw_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if not saw_header:
            if kind != "p":
                raise ParseError("expected header 'p plg <n> <edges>'", line_no)
            if len(parts) != 4 or parts[1] != "plg":
                raise ParseError("malformed header", line_no)
            try:
                n, declared_edges = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer header fields", line_no) from None
            if n < 0 or declared_edges < 0:
                raise ParseError("negative header fields", line_no)
            saw_header = True
            continue
        if kind == "e":
            if len(parts) != 4:
                raise ParseError("edge line needs 'e u v multiplicity'", line_no)
            try:
                u, v, m = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer edge fields", line_no) from None
            if u > v:
                raise ParseError(f"edge endpoints out of order: {u} > {v}", line_no)
            if not (0 <= u and v < n):
                raise ParseError(f"endpoint out of range: ({u},{v})", line_no)
            if m <= 0:
                raise ParseError(f"non-positive multiplicity {m}", line_no)
            if (u, v) in edges:
                raise ParseError(f"duplicate edge ({u},{v})", line_no)
            edges[(u, v)] = m
        elif kind == "l":
            if len(parts) != 3:
                raise ParseError("label line needs 'l v tag'", line_no)
            try:
                v = int(parts[1])
            except ValueError:
                raise ParseError("non-integer label vertex", line_no) from None
            if not (0 <= v < n):
                raise ParseError(f"label vertex {v} out of range", line_no)
            if v in labels:
                raise ParseError(f"duplicate label for vertex {v}", line_no)
            labels[v] = parts[2]
        elif kind == "p":
            raise ParseError("duplicate header", line_no)
        else:
            raise ParseError(f"unknown line type {kind!r}", line_no)
    if not saw_header:
        raise ParseError("empty input: missing header", 1)
    if len(edges) != declared_edges:
        raise ParseError(
            f"header declares {declared_edges} edges, found {len(edges)}", 1
        )
    return MultiGraph(n, edges, labels)
