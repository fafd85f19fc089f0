"""Exact planar-graph face tracing over the lattice."""
from __future__ import annotations

from .golden import CycloPoint, angle_key
from .prototiles import shoelace_area


def trace_faces(edges) -> "list[list[CycloPoint]]":
    """Bounded faces (counterclockwise cycles) of an embedded lattice graph.

    `edges` is an iterable of point pairs.  Each directed half-edge is
    visited once; successor at v after arriving from u is the neighbor
    clockwise-next from u in the exact angular order around v, which
    traces every face with its interior on the left.  Faces with
    non-positive area (the outer face) are dropped.
    """
    nbrs: dict = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    for v, ns in nbrs.items():
        ns.sort(key=lambda w: angle_key(w - v))
    index: dict = {
        v: {w: i for i, w in enumerate(ns)} for v, ns in nbrs.items()
    }
    faces = []
    seen = set()
    for a, ns in nbrs.items():
        for b in ns:
            if (a, b) in seen:
                continue
            cycle = []
            u, v = a, b
            while (u, v) not in seen:
                seen.add((u, v))
                cycle.append(u)
                ring = nbrs[v]
                i = index[v][u]
                w = ring[(i - 1) % len(ring)]
                u, v = v, w
            if (u, v) == (a, b) and len(cycle) >= 3:
                if shoelace_area(cycle).sign() > 0:
                    faces.append(cycle)
    return faces
