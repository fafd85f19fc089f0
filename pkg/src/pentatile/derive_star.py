"""Star and sun center joinings: the vertex-labeled HBS-shaped tilings.

Joining the centers of the P2 star configurations (minimum separation
phi^3) re-creates the hexagon/boat/star shapes at that larger scale; each
vertex is labeled by how many suns its star touches (0 red, 1 green,
2 blue).  Joining sun centers at separation phi^2 produces the same tiling
one inflation step finer, labeled by how many queen configurations share a
tile with the sun.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from .derive import DerivationResult, face_to_tile, _expect
from .faces import trace_faces
from .golden import CycloPoint, Isometry
from .patch import Patch, Tile, pose_from_triple
from .prototiles import HALF_KITE, HBS, P2, STAR, canonical_prototile
from .analysis import classify_vertex

STAR_EDGE_SQ = (5, 8)  # (phi^3)^2
SUN_EDGE_SQ = (2, 3)  # (phi^2)^2
TANGENT_SQ = (1, 1)  # sun tangent to a star: centers phi apart

RED, GREEN, BLUE = 0, 1, 2


class _Grid:
    """Float bucket grid for near-neighbor candidate lookup (exactness comes
    from the norm checks done on the candidates)."""

    def __init__(self, points, cell: float):
        self.cell = cell
        self.buckets: dict = {}
        for p in points:
            z = p.to_complex()
            key = (int(math.floor(z.real / cell)), int(math.floor(z.imag / cell)))
            self.buckets.setdefault(key, []).append(p)

    def near(self, p: CycloPoint, radius_cells: int = 1):
        z = p.to_complex()
        i0 = int(math.floor(z.real / self.cell))
        j0 = int(math.floor(z.imag / self.cell))
        for i in range(i0 - radius_cells, i0 + radius_cells + 1):
            for j in range(j0 - radius_cells, j0 + radius_cells + 1):
                yield from self.buckets.get((i, j), ())


def _pairs_at(points, norm_pair, cell: float):
    grid = _Grid(points, cell)
    seen = set()
    out = []
    for p in points:
        for q in grid.near(p):
            if q == p or (q, p) in seen:
                continue
            seen.add((p, q))
            if (p - q).norm_sq_pair() == norm_pair:
                out.append((p, q))
    return out


class CenterJoin(NamedTuple):
    patch: Patch
    omitted: int
    colors: dict  # center (original coordinates) -> label


def _sun_tile_sets(patch: Patch, vindex, centers):
    out = {}
    for v in centers:
        out[v] = {t for t, _ in vindex[v]}
    return out


def _join(patch: Patch, centers, colors, edge_norm, scale_steps: int, unsafe) -> CenterJoin:
    """Shared machinery: join centers, trace faces, classify labeled tiles."""
    cell = float(edge_norm[0] + edge_norm[1] * 1.618034) ** 0.5 + 0.25
    edges = _pairs_at(centers, edge_norm, cell)
    faces = trace_faces(edges)
    out = Patch(STAR, patch.scale_exponent - scale_steps)
    omitted = 0
    for cycle in faces:
        if any(v in unsafe for v in cycle):
            omitted += 1
            continue
        small = [p.mul_phi_pow(-scale_steps) for p in cycle]
        labels = {sp: colors[p] for sp, p in zip(small, cycle)}
        tile = _labeled_face_tile(small, labels)
        if tile is None:
            omitted += 1
            continue
        out.add_tile(tile)
    return CenterJoin(out, omitted, colors)


def _labeled_face_tile(cycle, labels):
    from . import catalog_data

    by_len = {6: ("hexagon",), 8: ("boat",), 10: ("star0", "star1", "star2")}
    kinds = by_len.get(len(cycle), ())
    for kind in kinds:
        if kind not in catalog_data.STAR_DATA:
            continue
        try:
            tile = face_to_tile(STAR, kind, cycle, None)
        except ValueError:
            continue
        proto = canonical_prototile(STAR, kind)
        world = [tile.iso.apply(p) for p in proto.boundary]
        if all(labels[w] == l for w, l in zip(world, proto.vertex_labels)):
            return tile
        # symmetric shapes: retry all poses, filtering on labels
        tile = _label_aware_match(proto, cycle, labels)
        if tile is not None:
            return tile
    return None


def _label_aware_match(proto, cycle, labels):
    n = len(proto.boundary)
    for seq in (cycle, cycle[::-1]):
        for off in range(n):
            world = tuple(seq[(off + i) % n] for i in range(n))
            try:
                iso = pose_from_triple(proto, world)
            except ValueError:
                continue
            if all(labels[w] == l for w, l in zip(world, proto.vertex_labels)):
                return Tile(proto.kind, iso)
    return None


def star_centers_and_colors(patch: Patch):
    """P2 star-config centers labeled by tangent suns, plus unsafe centers."""
    _expect(patch, P2)
    vindex = patch.vertex_index()
    interior = patch.interior_vertices()
    stars, suns = [], []
    for v in interior:
        cfg = classify_vertex(patch, v, vindex)
        if cfg == "boundary":
            continue
        if cfg.name == "star":
            stars.append(v)
        elif cfg.name == "sun":
            suns.append(v)
    sun_grid = _Grid(suns, 2.0)
    all_grid = _Grid(list(vindex.keys()), 2.0)
    colors = {}
    unsafe = set()
    reach = float(1 + 1.618034) ** 0.5 + 1e-6  # tangency distance phi
    for v in stars:
        n = 0
        for u in sun_grid.near(v):
            if (v - u).norm_sq_pair() == TANGENT_SQ:
                n += 1
        colors[v] = n
        for w in all_grid.near(v):
            if w not in interior and abs((w - v).to_complex()) <= reach:
                unsafe.add(v)
                break
    return stars, colors, unsafe


def derive_p2_to_star(patch: Patch) -> CenterJoin:
    """Join star centers at separation phi^3 into the labeled Star tiling."""
    stars, colors, unsafe = star_centers_and_colors(patch)
    return _join(patch, stars, colors, STAR_EDGE_SQ, 3, unsafe)


def sun_centers_and_colors(patch: Patch):
    """Sun centers labeled by the number of queen configurations sharing a tile."""
    _expect(patch, P2)
    vindex = patch.vertex_index()
    interior = patch.interior_vertices()
    suns, queens = [], []
    for v in interior:
        cfg = classify_vertex(patch, v, vindex)
        if cfg == "boundary":
            continue
        if cfg.name == "sun":
            suns.append(v)
        elif cfg.name == "queen":
            queens.append(v)
    queen_tiles = _sun_tile_sets(patch, vindex, queens)
    queen_grid = _Grid(queens, 2.0)
    all_grid = _Grid(list(vindex.keys()), 2.0)
    colors = {}
    unsafe = set()
    for v in suns:
        mine = {t for t, _ in vindex[v]}
        n = 0
        for q in queen_grid.near(v, 2):
            if queen_tiles[q] & mine:
                n += 1
        colors[v] = n
        for w in all_grid.near(v, 2):
            if w not in interior and abs((w - v).to_complex()) <= 3.0:
                unsafe.add(v)
                break
    return suns, colors, unsafe


def derive_p2_suns_to_hbs(patch: Patch) -> CenterJoin:
    """Join sun centers at separation phi^2 into the labeled tiling one
    inflation step finer than the star joining."""
    suns, colors, unsafe = sun_centers_and_colors(patch)
    return _join(patch, suns, colors, SUN_EDGE_SQ, 2, unsafe)


def star_labels_to_hbs(patch: Patch) -> Patch:
    """Drop vertex labels; tiles keep the arrow marks (toward the greater label)."""
    _expect(patch, STAR)
    out = Patch(HBS, patch.scale_exponent)
    for tile in patch.tiles:
        kind = "star" if tile.kind.startswith("star") else tile.kind
        out.add_tile(Tile(kind, tile.iso))
    return out
