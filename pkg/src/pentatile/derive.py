"""Local mappings between tilesets (mutual local derivability).

Boundary policy everywhere: emit only tiles whose determining source
neighborhood is completely present; omitted-tile counts are reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .golden import CycloPoint, GoldenRational, Isometry
from .patch import Patch, Tile, pose_from_triple
from .prototiles import (
    GEM,
    HALF_DART,
    HALF_FAT,
    HALF_KITE,
    HALF_THIN,
    HBS,
    P2,
    P3,
    STAR,
    canonical_prototile,
)


class DerivationResult(NamedTuple):
    patch: Patch
    omitted: int


@dataclass(frozen=True)
class DerivationMap:
    source: str
    target: str
    locality_radius: GoldenRational  # units of source edge length
    fn: Callable


def derive_p3_to_p2(patch: Patch) -> Patch:
    """Decompose a P3 patch into kites and darts at the same scale.

    Each fat rhomb contains one kite half and one dart half per triangle
    half; each thin half is itself a kite half.  Kite axes land exactly on
    the single-arrow rhomb edges.
    """
    _expect(patch, P3)
    out = Patch(P2, patch.scale_exponent)
    for tile in patch.tiles:
        verts = patch.tiles[tile]
        if tile.kind == HALF_THIN:
            a, b, c = verts
            _emit(out, P2, HALF_KITE, (a, c, b))  # apex, wing, tail
        else:
            n, e, s = verts
            y = n + (s - n).mul_inv_phi()  # on the long diagonal, distance 1 from N
            _emit(out, P2, HALF_KITE, (n, y, e))
            _emit(out, P2, HALF_DART, (s, e, y))
    return out


def derive_p2_to_p3(patch: Patch) -> DerivationResult:
    """Regroup a P2 patch into rhombs at the same scale.

    Every dart half joins the kite half across its short edge into a fat
    half; kite halves not used that way become thin halves.  Kite halves
    whose dart partner is missing near the boundary are omitted.
    """
    _expect(patch, P2)
    out = Patch(P3, patch.scale_exponent)
    used = set()
    omitted = 0
    for tile in patch.tiles:
        if tile.kind != HALF_DART:
            continue
        w0, w1, w2 = patch.tiles[tile]  # apex, wing, notch
        key = patch.edge_key(w1, w2)  # the dart's short edge
        partner = None
        for other, _ in patch.edge_index.get(key, []):
            if other != tile and other.kind == HALF_KITE:
                partner = other
        if partner is None:
            omitted += 1
            continue
        # The fat half (N, E, S) holds kite half (N, Y, E) plus dart half
        # (S, E, Y); invert Y = N + phi^-1 (S - N) for N.
        n = w2.mul_phi().mul_phi() - w0.mul_phi()
        if patch.tiles[partner][0] != n:
            raise ValueError("dart's kite partner is not aligned with it")
        used.add(partner)
        _emit(out, P3, HALF_FAT, (n, w1, w0))
    for tile in patch.tiles:
        if tile.kind != HALF_KITE or tile in used:
            continue
        v0, v1, v2 = patch.tiles[tile]
        _emit(out, P3, HALF_THIN, (v0, v2, v1))  # A=apex, B=tail, C=wing
    return DerivationResult(out, omitted)


def _emit(out: Patch, tileset: str, kind: str, world: tuple):
    proto = canonical_prototile(tileset, kind)
    out.add_tile(Tile(kind, pose_from_triple(proto, world)))


def _expect(patch: Patch, tileset: str):
    if patch.tileset != tileset:
        raise ValueError(f"expected a {tileset} patch, got {patch.tileset}")


# ---------------------------------------------------------------------------
# P3 -> HBS: remove all double-arrow edges and the vertices they point to.
# Those vertices are exactly the ones whose every incident corner is the
# double-tip corner (boundary slot 2 of both P3 half tiles); the tiles
# around each such sink merge into one hexagon, boat or star.

_SINK_KINDS = {
    (2, 4): "hexagon",  # one fat + two thins
    (6, 2): "boat",  # three fats + one thin
    (10, 0): "star",  # five fats
}


def p3_sink_groups(patch: Patch):
    """(sink vertex, incident tiles) for interior all-double-tip vertices, plus
    the number of boundary vertices that look like incomplete sinks."""
    groups = []
    incomplete = 0
    for v, incid in patch.vertex_index().items():
        if any(slot != 2 for _, slot in incid):
            continue
        total = sum(patch.corner_angle(t, s) for t, s in incid)
        if total == 10:
            groups.append((v, [t for t, _ in incid]))
        else:
            incomplete += 1
    return groups, incomplete


def derive_p3_to_hbs(patch: Patch) -> DerivationResult:
    _expect(patch, P3)
    out = Patch(HBS, patch.scale_exponent)
    groups, incomplete = p3_sink_groups(patch)
    for v, tiles in groups:
        nf = sum(1 for t in tiles if t.kind == HALF_FAT)
        nt = len(tiles) - nf
        kind = _SINK_KINDS.get((nf, nt))
        if kind is None:
            raise ValueError(f"unrecognized sink signature {(nf, nt)} at {v}")
        cycle = _group_boundary(patch, tiles)
        tile = face_to_tile(HBS, kind, cycle, _single_arrow_flips(patch, cycle))
        out.add_tile(tile)
    return DerivationResult(out, incomplete)


def _single_arrow_flips(patch: Patch, cycle) -> dict:
    """Map face edge key -> world point of the derived hbs arrow.

    Each face boundary edge is a single-arrow source edge; the hbs arrow
    points away from the source tip (from a kite's apex to its wide angle).
    """
    out = {}
    n = len(cycle)
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        key = Patch.edge_key(a, b)
        tile, slot = patch.edge_index[key][0]
        mark = patch.proto(tile).edges[slot]
        if mark.style != "single":
            raise ValueError(f"face edge {key} is not a single-arrow edge")
        verts = patch.tiles[tile]
        tip = verts[(slot + 1) % len(verts)] if mark.arrow_end else verts[slot]
        out[key] = b if tip == a else a
    return out


def _group_boundary(patch: Patch, tiles) -> list:
    mini = Patch(patch.tileset, patch.scale_exponent)
    for t in tiles:
        mini.add_tile(t)
    cycles = mini.boundary()
    if len(cycles) != 1:
        raise ValueError(f"tile group does not bound a disk: {len(cycles)} cycles")
    return cycles[0]


def face_to_tile(tileset: str, kind: str, cycle: list, arrow_points: Optional[dict] = None) -> Tile:
    """Match a traced face boundary onto the canonical prototile.

    Tries every start vertex and chirality; when arrow_points is given
    (edge key -> marked world point) the canonical edge marks must land on
    those points, which disambiguates symmetric shapes.
    """
    proto = canonical_prototile(tileset, kind)
    bound = proto.boundary
    n = len(bound)
    if len(cycle) != n:
        raise ValueError(f"{kind} expects {n} vertices, face has {len(cycle)}")
    for seq in (cycle, cycle[::-1]):
        for off in range(n):
            world = tuple(seq[(off + i) % n] for i in range(n))
            try:
                iso = pose_from_triple(proto, world)
            except ValueError:
                continue
            if arrow_points is not None and not _arrows_fit(proto, iso, arrow_points):
                continue
            return Tile(kind, iso)
    raise ValueError(f"face does not match canonical {tileset}/{kind}")


def _arrows_fit(proto, iso: Isometry, arrow_points: dict) -> bool:
    world = [iso.apply(p) for p in proto.boundary]
    n = len(world)
    for i, mark in enumerate(proto.edges):
        if mark.arrow_end is None:
            continue
        a, b = world[i], world[(i + 1) % n]
        want = arrow_points.get(Patch.edge_key(a, b))
        if want is not None and want != (b if mark.arrow_end else a):
            return False
    return True


# ---------------------------------------------------------------------------
# Decorations: fill HBS/Star/Gemstone tiles with their exact Penrose content.


def decorate(patch: Patch, target: str) -> Patch:
    """Replace every tile by its frozen P2 or P3 content; inverse of the
    corresponding derivation on fully covered interiors."""
    from .prototiles import decoration_content

    if target not in (P2, P3):
        raise ValueError("decoration target must be the kite-dart or rhomb tileset")
    out = Patch(target, patch.scale_exponent)
    for tile in patch.tiles:
        for kind, rot, refl, t in decoration_content(patch.tileset, tile.kind, target):
            rel = Isometry(rot, refl, CycloPoint(*t))
            out.add_tile(Tile(kind, tile.iso.compose(rel)))
    return out


def derive_p2_to_hbs(patch: Patch) -> DerivationResult:
    """Trace the symmetry axis of each kite (arrow toward the wide angle)."""
    _expect(patch, P2)
    rhombs = derive_p2_to_p3(patch)
    res = derive_p3_to_hbs(rhombs.patch)
    return DerivationResult(res.patch, res.omitted + rhombs.omitted)
