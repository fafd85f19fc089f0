"""Matching-rule legality checks."""
from __future__ import annotations

from typing import NamedTuple

from .golden import CycloPoint
from .patch import Patch, Tile
from .prototiles import GEM, HBS, P1, P2, P3, STAR


class Violation(NamedTuple):
    rule: str
    where: tuple
    detail: str


def _edge_endpoints(patch: Patch, tile: Tile, slot: int):
    verts = patch.tiles[tile]
    return verts[slot], verts[(slot + 1) % len(verts)]


def _arrow_point(patch: Patch, tile: Tile, slot: int):
    mark = patch.proto(tile).edges[slot]
    if mark.arrow_end is None:
        return None
    a, b = _edge_endpoints(patch, tile, slot)
    return b if mark.arrow_end else a


def check_matching(patch: Patch) -> "list[Violation]":
    """Empty list iff every shared edge and corner satisfies the tileset's rule."""
    out = []
    for key, slots in patch.edge_index.items():
        if len(slots) != 2:
            continue
        (t1, s1), (t2, s2) = slots
        m1 = patch.proto(t1).edges[s1]
        m2 = patch.proto(t2).edges[s2]
        if m1.style != m2.style:
            out.append(Violation("edge-style", key, f"{m1.style} against {m2.style}"))
            continue
        p1 = _arrow_point(patch, t1, s1)
        p2 = _arrow_point(patch, t2, s2)
        if p1 is not None and p1 != p2:
            out.append(Violation("edge-arrow", key, f"{m1.style} arrows do not superimpose"))
    out.extend(_corner_checks(patch))
    return out


def _corner_checks(patch: Patch) -> "list[Violation]":
    out = []
    if patch.tileset == P2:
        for v, incid in patch.vertex_index().items():
            colors = {patch.proto(t).corner_colors[i] for t, i in incid}
            if len(colors) > 1:
                out.append(Violation("corner-color", (v,), "mixed disk colors"))
    elif patch.tileset in (STAR, GEM):
        for v, incid in patch.vertex_index().items():
            labels = {patch.proto(t).vertex_labels[i] for t, i in incid}
            if len(labels) > 1:
                out.append(Violation("vertex-label", (v,), f"mixed labels {sorted(labels)}"))
    return out
