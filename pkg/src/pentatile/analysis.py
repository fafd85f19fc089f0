"""Vertex-configuration classification, frequency reports, distances, kingdoms."""
from __future__ import annotations

import math
from typing import NamedTuple, Optional

from .golden import CycloPoint, GoldenRational, Isometry, angle_cmp
from .patch import Patch, Tile
from .prototiles import HALF_DART, HALF_KITE, HBS, P2, P3, STAR, canonical_prototile


class VertexConfig(NamedTuple):
    tileset: str
    name: str
    key: tuple  # canonical surrounding cycle, rotation/reflection invariant


# P2 interior vertex configurations, identified by (kites, darts) counts;
# the pair is distinct for all seven legal configurations.
P2_CONFIG_NAMES = {
    (5, 0): "sun",
    (0, 5): "star",
    (2, 1): "ace",
    (2, 2): "deuce",
    (3, 2): "jack",
    (4, 1): "queen",
    (2, 3): "king",
}


def _corner_wedge_start(patch: Patch, v: CycloPoint, tile: Tile, i: int) -> CycloPoint:
    """Direction from v bounding the corner wedge clockwise (CCW sweep crosses the corner)."""
    verts = patch.tiles[tile]
    n = len(verts)
    start = verts[(i + 1) % n] - v
    end = verts[(i - 1) % n] - v
    if tile.iso.refl:
        start, end = end, start
    return start


def vertex_cycle(patch: Patch, v: CycloPoint, incident) -> "list[tuple]":
    """Corners around v in counterclockwise order as (tile, corner index)."""
    entries = []
    for tile, i in incident:
        start = _corner_wedge_start(patch, v, tile, i)
        entries.append((start, tile, i))
    entries.sort(key=lambda e: _dir_key(e[0]))
    return [(t, i) for _, t, i in entries]


def _dir_key(d: CycloPoint):
    from .golden import angle_key

    return angle_key(d)


def canonical_vertex_key(patch: Patch, v: CycloPoint, incident) -> tuple:
    """Rotation/reflection-invariant key for the cycle of corners around v."""
    order = vertex_cycle(patch, v, incident)
    raw = []
    for tile, i in order:
        proto = patch.proto(tile)
        raw.append((tile.kind, i, tile.iso.refl, proto.corner_angles[i]))
    best = None
    n = len(raw)
    seqs = [raw]
    # reflected reading: reverse cycle, flip chirality
    seqs.append([(k, i, 1 - r, a) for (k, i, r, a) in reversed(raw)])
    for seq in seqs:
        for off in range(n):
            cand = tuple(seq[(off + j) % n] for j in range(n))
            if best is None or cand < best:
                best = cand
    return best


def _full_tile_ids(patch: Patch, incident):
    """Distinct full kites/darts among incident half tiles (paired along axes)."""
    kites = set()
    darts = set()
    for tile, _ in incident:
        verts = patch.tiles[tile]
        axis_key = patch.edge_key(verts[2], verts[0])
        (kites if tile.kind == HALF_KITE else darts).add((tile.kind, axis_key))
    return kites, darts


def classify_vertex(patch: Patch, v: CycloPoint, _vindex: Optional[dict] = None):
    """Named config for an interior vertex, or the string "boundary"."""
    vindex = _vindex if _vindex is not None else patch.vertex_index()
    incident = vindex.get(v)
    if not incident:
        raise ValueError(f"{v} is not a vertex of the patch")
    total = sum(patch.corner_angle(t, i) for t, i in incident)
    if total != 10:
        return "boundary"
    key = canonical_vertex_key(patch, v, incident)
    if patch.tileset == P2:
        kites, darts = _full_tile_ids(patch, incident)
        name = P2_CONFIG_NAMES.get((len(kites), len(darts)), f"unknown{(len(kites), len(darts))}")
    else:
        name = _named_config(patch.tileset, key)
    return VertexConfig(patch.tileset, name, key)


_NAMED_KEYS: dict = {}


def register_config_name(tileset: str, key: tuple, name: str):
    _NAMED_KEYS[(tileset, key)] = name


def _named_config(tileset: str, key: tuple) -> str:
    got = _NAMED_KEYS.get((tileset, key))
    if got is not None:
        return got
    import hashlib

    digest = hashlib.sha1(repr((tileset, key)).encode()).hexdigest()[:6]
    return "cfg" + digest


def enumerate_configs(patch: Patch) -> dict:
    """VertexConfig -> count over interior vertices."""
    out: dict = {}
    vindex = patch.vertex_index()
    for v in patch.interior_vertices():
        cfg = classify_vertex(patch, v, vindex)
        out[cfg] = out.get(cfg, 0) + 1
    return out


def config_centers(patch: Patch, name: str) -> "list[CycloPoint]":
    vindex = patch.vertex_index()
    out = []
    for v in patch.interior_vertices():
        cfg = classify_vertex(patch, v, vindex)
        if cfg != "boundary" and cfg.name == name:
            out.append(v)
    return out


# ---------------------------------------------------------------------------


class FrequencyReport(NamedTuple):
    counts: dict  # kind -> interior tile count
    total: int
    ratios: dict  # kind -> float
    exact: dict  # kind -> GoldenRational or None
    deviations: dict  # kind -> float


def interior_tile_counts(patch: Patch) -> "tuple[dict, int]":
    interior = patch.interior_vertices()
    counts: dict = {}
    total = 0
    for tile, verts in patch.tiles.items():
        if all(v in interior for v in verts):
            counts[tile.kind] = counts.get(tile.kind, 0) + 1
            total += 1
    return counts, total


def empirical_frequencies(patch: Patch, exact: Optional[dict] = None) -> FrequencyReport:
    counts, total = interior_tile_counts(patch)
    ratios = {k: c / total for k, c in counts.items()} if total else {}
    exact = exact or {}
    devs = {}
    for k, r in ratios.items():
        e = exact.get(k)
        if e is not None:
            devs[k] = abs(r - float(e))
    return FrequencyReport(counts, total, ratios, exact, devs)


# ---------------------------------------------------------------------------


def exact_min_pair_sq(points: "list[CycloPoint]") -> GoldenRational:
    """Exact minimal squared distance between distinct points (grid prefilter)."""
    if len(points) < 2:
        raise ValueError("need at least two occurrences")
    pts = [(p.to_complex(), p) for p in points]
    best_f = math.inf
    # float first pass: sort by x then scan a shrinking window
    pts.sort(key=lambda t: (t[0].real, t[0].imag))
    n = len(pts)
    for i in range(n):
        zi = pts[i][0]
        j = i + 1
        while j < n and (pts[j][0].real - zi.real) ** 2 < best_f:
            d = abs(pts[j][0] - zi) ** 2
            if d < best_f:
                best_f = d
            j += 1
    # exact pass over near-minimal candidates
    best: Optional[GoldenRational] = None
    thresh = best_f * (1 + 1e-9) + 1e-12
    for i in range(n):
        zi, pi = pts[i]
        j = i + 1
        while j < n and (pts[j][0].real - zi.real) ** 2 <= thresh:
            if abs(pts[j][0] - zi) ** 2 <= thresh:
                d = (pts[j][1] - pi).norm_sq()
                if best is None or d < best:
                    best = d
            j += 1
    assert best is not None
    return best


def min_pair_distance(patch: Patch, config_name: str) -> GoldenRational:
    """Exact minimal squared center distance between occurrences of a config."""
    centers = config_centers(patch, config_name)
    if len(centers) < 2:
        raise ValueError(f"need at least two {config_name} occurrences, found {len(centers)}")
    return exact_min_pair_sq(centers)
