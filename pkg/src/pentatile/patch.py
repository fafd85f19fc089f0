"""Placed tiles and patches with exact shared-edge structure."""
from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

from .golden import CycloPoint, GoldenRational, Isometry, angle_cmp, unit_index
from .prototiles import Prototile, canonical_prototile


class Tile(NamedTuple):
    kind: str
    iso: Isometry


class OverlapError(ValueError):
    pass


def pose_from_triple(proto: Prototile, world: tuple) -> Isometry:
    """Isometry mapping proto.boundary onto the given world points (order-matching).

    Raises ValueError when no lattice isometry fits.
    """
    c0 = proto.boundary[0]
    c1 = proto.boundary[1]
    d_c = c1 - c0
    d_w = world[1] - world[0]
    for refl in (0, 1):
        base = d_c.conj() if refl else d_c
        for rot in range(10):
            if base.rot(rot) != d_w:
                continue
            t = world[0] - (c0.conj() if refl else c0).rot(rot)
            iso = Isometry(rot, refl, t)
            if all(iso.apply(p) == w for p, w in zip(proto.boundary, world)):
                return iso
    raise ValueError(f"no lattice isometry maps {proto.kind} onto {world}")


class Patch:
    """A finite set of placed tiles with an exact edge index.

    Construction is single-writer; treat instances as immutable once built.
    Coordinates are lattice-integral; physical size is lattice * phi^-scale_exponent.
    """

    def __init__(self, tileset: str, scale_exponent: int = 0):
        self.tileset = tileset
        self.scale_exponent = scale_exponent
        self.tiles: dict = {}  # Tile -> tuple of world vertices (insertion ordered)
        self.edge_index: dict = {}  # segment key -> list of (Tile, edge slot)

    def __len__(self):
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def __contains__(self, tile):
        return tile in self.tiles

    def proto(self, tile: Tile) -> Prototile:
        return canonical_prototile(self.tileset, tile.kind)

    def world_vertices(self, tile: Tile) -> tuple:
        got = self.tiles.get(tile)
        if got is not None:
            return got
        proto = self.proto(tile)
        return tuple(tile.iso.apply(p) for p in proto.boundary)

    @staticmethod
    def edge_key(p: CycloPoint, q: CycloPoint):
        return (p, q) if p <= q else (q, p)

    def add_tile(self, tile: Tile) -> "Patch":
        if tile in self.tiles:
            raise OverlapError(f"duplicate tile {tile}")
        verts = self.world_vertices(tile)
        n = len(verts)
        keys = []
        for i in range(n):
            key = self.edge_key(verts[i], verts[(i + 1) % n])
            slots = self.edge_index.get(key)
            if slots is not None and len(slots) >= 2:
                raise OverlapError(f"edge {key} already shared by two tiles")
            keys.append(key)
        self.tiles[tile] = verts
        for i, key in enumerate(keys):
            self.edge_index.setdefault(key, []).append((tile, i))
        return self

    def add(self, kind: str, rot: int = 0, refl: int = 0, t: CycloPoint = CycloPoint(0, 0, 0, 0)):
        return self.add_tile(Tile(kind, Isometry(rot % 10, refl, t)))

    def copy(self) -> "Patch":
        out = Patch(self.tileset, self.scale_exponent)
        for tile in self.tiles:
            out.add_tile(tile)
        return out

    # ------------------------------------------------------------------
    def vertex_index(self) -> dict:
        """point -> list of (tile, corner index)."""
        out: dict = {}
        for tile, verts in self.tiles.items():
            for i, v in enumerate(verts):
                out.setdefault(v, []).append((tile, i))
        return out

    def corner_angle(self, tile: Tile, corner: int) -> int:
        return self.proto(tile).corner_angles[corner]

    def interior_vertices(self) -> "dict[CycloPoint, list]":
        """Vertices whose incident corner angles sum to exactly 360 degrees."""
        out = {}
        for v, incid in self.vertex_index().items():
            total = sum(self.corner_angle(t, i) for t, i in incid)
            if total == 10:
                out[v] = incid
        return out

    def area(self) -> GoldenRational:
        """Total exact area in units of sin36."""
        total = GoldenRational(0)
        for tile in self.tiles:
            total = total + self.proto(tile).area
        return total

    # ------------------------------------------------------------------
    def directed_boundary_edges(self) -> "list[tuple[CycloPoint, CycloPoint]]":
        """Unshared edges, directed so the patch interior lies on the left."""
        out = []
        for key, slots in self.edge_index.items():
            if len(slots) != 1:
                continue
            tile, i = slots[0]
            verts = self.tiles[tile]
            a, b = verts[i], verts[(i + 1) % len(verts)]
            if tile.iso.refl:
                a, b = b, a  # reflected tiles traverse their boundary clockwise
            out.append((a, b))
        return out

    def boundary(self) -> "list[list[CycloPoint]]":
        """Boundary cycles (counterclockwise for outer boundaries)."""
        edges = self.directed_boundary_edges()
        outgoing: dict = {}
        for a, b in edges:
            outgoing.setdefault(a, []).append(b)
        cycles = []
        used = set()
        for start, _ in edges:
            for b0 in outgoing[start]:
                if (start, b0) in used:
                    continue
                cycle = [start]
                prev, cur = start, b0
                used.add((start, b0))
                while cur != start:
                    cycle.append(cur)
                    nexts = [n for n in outgoing.get(cur, []) if (cur, n) not in used]
                    if not nexts:
                        break
                    if len(nexts) == 1:
                        nxt = nexts[0]
                    else:
                        # pinch vertex: take the sharpest counterclockwise turn
                        back = prev - cur
                        nxt = min(
                            nexts,
                            key=lambda n, back=back, cur=cur: _turn_rank(back, n - cur),
                        )
                    used.add((cur, nxt))
                    prev, cur = cur, nxt
                if cur == start:
                    cycles.append(cycle)
        return cycles


def _turn_rank(back: CycloPoint, forward: CycloPoint):
    import functools

    # rank directions counterclockwise starting just after the incoming edge
    return _TurnKey(back, forward)


class _TurnKey:
    __slots__ = ("back", "fwd")

    def __init__(self, back, fwd):
        self.back = back
        self.fwd = fwd

    def __lt__(self, other):
        a = _ccw_from(self.back, self.fwd)
        b = _ccw_from(other.back, other.fwd)
        return a < b


def _ccw_from(back: CycloPoint, fwd: CycloPoint) -> float:
    import math

    zb = back.to_complex()
    zf = fwd.to_complex()
    ang = math.atan2((zb.conjugate() * zf).imag, (zb.conjugate() * zf).real)
    ang = ang % (2 * math.pi)
    return ang if ang > 1e-12 else 2 * math.pi


def single_tile_patch(tileset: str, kind: str, scale_exponent: int = 0) -> Patch:
    p = Patch(tileset, scale_exponent)
    p.add(kind)
    return p
