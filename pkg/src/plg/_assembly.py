"""Shared internals for assembling a full power-law graph around an embedded core.

Both embedders follow the same plan: double the input so every vertex sits in
a 2-clique with a matching edge, hand each pair two consecutive degree slots
from the top interval [ceil(x*delta), delta], blow up the matching edge to hit
the smaller slot, route the odd surplus half-edge (when the pair straddles a
degree boundary) to a fill vertex, and realize the remaining degree classes
with the interval realizer.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError, InternalError
from .graph import MultiGraph
from .model import PowerLawParams
from .realizer import CliqueCoverCertificate, interval_counts, realize


def double_with_pairs(g: MultiGraph, loops: str = "reject") -> MultiGraph:
    """The pair-clique doubling: v_i becomes adjacent v_{i,1}=2i, v_{i,2}=2i+1.

    Cross edges copy g's adjacency between all four copy pairs, so copies have
    degree 2*deg(v)+1 and the matching {2i, 2i+1} supports multi-edge fill.

    ``loops``: "reject" raises on self-loops (the public doubling contract);
    "to_matching" converts each loop unit into 4 extra units on the pair's
    matching edge, which keeps both copies at 2*deg+1 without putting
    self-loops on embedded vertices.
    """
    edges: dict[tuple[int, int], int] = {}
    for i in range(g.vertex_count):
        edges[(2 * i, 2 * i + 1)] = 1
    for (u, v), m in g.edge_dict().items():
        if u == v:
            if loops != "to_matching":
                raise InputError("doubling is defined for simple graphs (self-loop found)")
            edges[(2 * u, 2 * u + 1)] += 4 * m
            continue
        if m != 1:
            raise InputError("doubling is defined for simple graphs (multi-edge found)")
        for a in (2 * u, 2 * u + 1):
            for b in (2 * v, 2 * v + 1):
                key = (a, b) if a < b else (b, a)
                edges[key] = 1
    return MultiGraph(2 * g.vertex_count, edges)


def top_interval_slots(p: PowerLawParams, a_x: int) -> np.ndarray:
    """Degree slots of the interval [a_x, delta], ascending with multiplicity."""
    counts = interval_counts(p, a_x, p.delta)
    return np.repeat(np.arange(a_x, p.delta + 1, dtype=np.int64), counts)


def assign_pair_slots(
    slots: np.ndarray, pair_degrees: list[int]
) -> tuple[list[tuple[int, int]], np.ndarray] | None:
    """Give each pair two consecutive feasible slots, smallest degrees first.

    ``pair_degrees`` must be ascending.  Returns (per-pair slot targets,
    leftover slot degrees) or None when the slots cannot accommodate the
    pairs (callers then raise alpha and retry).
    """
    taken = np.zeros(len(slots), dtype=bool)
    targets: list[tuple[int, int]] = []
    ptr = 0
    for need in pair_degrees:
        while ptr < len(slots) and slots[ptr] < need:
            ptr += 1
        if ptr + 1 >= len(slots):
            return None
        targets.append((int(slots[ptr]), int(slots[ptr + 1])))
        taken[ptr] = taken[ptr + 1] = True
        ptr += 2
    return targets, slots[~taken]


class AssembledPart:
    """One realized residual part, positioned inside the final graph."""

    def __init__(self, name: str, label: str, targets: np.ndarray):
        self.name = name
        self.label = label
        self.targets = targets
        self.offset = 0
        self.certificate: CliqueCoverCertificate | None = None


def assemble(
    p: PowerLawParams,
    doubled: MultiGraph,
    pair_targets: list[tuple[int, int]],
    parts: list[AssembledPart],
    surplus_part: str,
) -> tuple[MultiGraph, dict[str, CliqueCoverCertificate], list[tuple[int, int]]]:
    """Assemble the power-law graph: embedded pairs first, then each part.

    Pair fill: the matching edge of pair i gets multiplicity raised by
    t1 - deg, putting both members at the lower slot t1; when t2 = t1 + 1 the
    second member's surplus half-edge is routed to a vertex of
    ``surplus_part`` whose realize target was lowered by 1 to receive it.
    Returns (graph, per-part certificates, parity deficits as
    (vertex, target) pairs).
    """
    n_embed = doubled.vertex_count
    edges = dict(doubled.edge_dict())
    deg = doubled.degrees()

    surplus_count = 0
    for i, (t1, t2) in enumerate(pair_targets):
        d1 = int(deg[2 * i])
        if int(deg[2 * i + 1]) != d1:
            raise AssertionError("pair members must have equal doubled degree")
        if t1 < d1:
            raise AssertionError("slot below doubled degree; feasibility broken")
        if t2 - t1 not in (0, 1):
            raise AssertionError("pair slots must be equal or adjacent degrees")
        if t1 > d1:
            key = (2 * i, 2 * i + 1)
            edges[key] = edges.get(key, 0) + (t1 - d1)
        surplus_count += t2 - t1

    # Route surpluses into the designated part: lower its largest targets by
    # one unit each (round-robin when there are more surpluses than vertices).
    recv = next(part for part in parts if part.name == surplus_part)
    recv_targets = recv.targets.astype(np.int64).copy()
    recv_units: dict[int, int] = {}
    if surplus_count:
        if len(recv_targets) == 0:
            raise InternalError("no fill vertices available to take surplus half-edges")
        order = np.argsort(recv_targets, kind="stable")[::-1]
        receivers = []
        k = 0
        for _ in range(surplus_count):
            v = int(order[k % len(order)])
            if recv_targets[v] <= 1:
                raise InternalError("surplus routing would drop a fill target below 1")
            recv_targets[v] -= 1
            recv_units[v] = recv_units.get(v, 0) + 1
            receivers.append(v)
            k += 1
        recv.targets = recv_targets
    else:
        receivers = []

    # Realize each part on its own index space, then shift into place.
    offset = n_embed
    certs: dict[str, CliqueCoverCertificate] = {}
    deficits: list[tuple[int, int]] = []
    labels = {v: "embedded" for v in range(n_embed)}
    part_position: dict[str, np.ndarray] = {}
    for part in parts:
        part.offset = offset
        if len(part.targets) == 0:
            part.certificate = None
            part_position[part.name] = np.zeros(0, dtype=np.int64)
            continue
        srt = np.argsort(part.targets, kind="stable")
        sorted_targets = part.targets[srt]
        graph_part, cert = realize(sorted_targets)
        # position[j] = final vertex id of the part's j-th pre-sort entry
        position = np.empty(len(srt), dtype=np.int64)
        position[srt] = np.arange(len(srt)) + offset
        part_position[part.name] = position
        for (u, v), m in graph_part.edge_dict().items():
            edges[(u + offset, v + offset)] = m
        cert = cert.shifted(offset)
        part.certificate = cert
        certs[part.name] = cert
        if cert.parity_deficit:
            local = cert.parity_deficit_vertex - offset
            intended = int(cert.target_degrees[local])
            if part.name == surplus_part:
                # A receiver's realize target was pre-lowered; the routed edge
                # restores it, so the deficit is against the original class.
                intended += recv_units.get(int(srt[local]), 0)
            deficits.append((cert.parity_deficit_vertex, intended))
        for v in range(offset, offset + len(sorted_targets)):
            labels[v] = part.label
        offset += len(sorted_targets)

    # Now add the routed surplus edges from pair seconds to their receivers.
    surplus_edges: list[tuple[int, int]] = []
    ptr = 0
    for i, (t1, t2) in enumerate(pair_targets):
        if t2 == t1:
            continue
        v = 2 * i + 1
        w = int(part_position[surplus_part][receivers[ptr]])
        ptr += 1
        key = (v, w) if v < w else (w, v)
        edges[key] = edges.get(key, 0) + 1
        surplus_edges.append((v, w))

    graph = MultiGraph(offset, edges, labels)
    return graph, certs, deficits
