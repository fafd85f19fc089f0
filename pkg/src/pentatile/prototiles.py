"""Prototile catalogs: shapes, edge markings and corner decorations.

P2 and P3 are primitive here; kites, darts and rhombs are stored as half
tiles (triangles) so substitution and every cross-tileset mapping stays
cell-exact.  HBS, Star, P1 and Gemstones catalogs are built from frozen
canonical boundaries validated by the derivation tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .golden import CycloPoint, GoldenRational, ORIGIN, ONE_PT, ZETA, cross_pair

# tileset names
P2 = "p2"
P3 = "p3"
HBS = "hbs"
STAR = "star"
GEM = "gemstone"
P1 = "p1"

TILESETS = (P1, P2, P3, HBS, STAR, GEM)

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class EdgeMark:
    style: str
    arrow_end: Optional[int] = None  # 0 = edge start, 1 = edge end, None = no direction


@dataclass(frozen=True)
class Prototile:
    tileset: str
    kind: str
    boundary: tuple  # CycloPoint cycle, counterclockwise, first vertex at origin
    edges: tuple  # EdgeMark per boundary edge i -> i+1
    corner_angles: tuple  # interior angles in units of 36 degrees
    corner_colors: Optional[tuple] = None  # P2 disk colors per corner
    vertex_labels: Optional[tuple] = None  # Star/Gemstone labels per corner
    anchors: dict = field(default_factory=dict)  # named auxiliary exact points

    @property
    def area(self) -> GoldenRational:
        """Exact area in units of sin36 (shoelace over the lattice)."""
        return shoelace_area(self.boundary)

    def edge_count(self) -> int:
        return len(self.boundary)


def shoelace_area(points) -> GoldenRational:
    a = b = 0
    n = len(points)
    for i in range(n):
        ca, cb = cross_pair(points[i], points[(i + 1) % n])
        a += ca
        b += cb
    return GoldenRational(Fraction(a, 4), Fraction(b, 4))


def _angles_from_boundary(points) -> tuple:
    """Interior angles in 36-degree units, assuming a counterclockwise simple polygon."""
    import math

    n = len(points)
    out = []
    for i in range(n):
        p, q, r = points[i - 1], points[i], points[(i + 1) % n]
        v1 = (q - p).to_complex()
        v2 = (r - q).to_complex()
        turn = math.degrees(math.atan2((v1.conjugate() * v2).imag, (v1.conjugate() * v2).real))
        interior = 180.0 - turn
        k = round(interior / 36.0)
        assert abs(interior - 36.0 * k) < 1e-9, (points, i, interior)
        out.append(k)
    return tuple(out)


_CATALOG: dict = {}


def _register(proto: Prototile) -> Prototile:
    _CATALOG[(proto.tileset, proto.kind)] = proto
    return proto


def canonical_prototile(tileset: str, kind: str) -> Prototile:
    try:
        return _CATALOG[(tileset, kind)]
    except KeyError:
        raise KeyError(f"unknown prototile {tileset}/{kind}") from None


def kinds_of(tileset: str) -> tuple:
    return tuple(k for (ts, k) in _CATALOG if ts == tileset)


# ---------------------------------------------------------------------------
# P2 half tiles.  Half-kite: apex 36 between the long edge (length 1) and the
# axis (length 1, the kite's symmetry diagonal); short edge length phi^-1.
# Half-dart: apex 36, long edge 1, short and axis phi^-1.
# Corner colors implement the corner-disk matching rule.

HALF_KITE = "hk"
HALF_DART = "hd"

_HD_NOTCH = CycloPoint(1, -1, 1, 0)  # 1 - zeta + zeta^2, distance phi^-1 at 36 degrees

_register(
    Prototile(
        tileset=P2,
        kind=HALF_KITE,
        boundary=(ORIGIN, ONE_PT, ZETA),  # apex, wing, tail
        edges=(
            EdgeMark("long"),
            EdgeMark("short"),
            EdgeMark("axis_k", arrow_end=1),  # arrow at the apex
        ),
        corner_angles=(1, 2, 2),
        corner_colors=(BLACK, WHITE, BLACK),
    )
)

_register(
    Prototile(
        tileset=P2,
        kind=HALF_DART,
        boundary=(ORIGIN, ONE_PT, _HD_NOTCH),  # apex, wing, notch
        edges=(
            EdgeMark("long"),
            EdgeMark("short"),
            EdgeMark("axis_d", arrow_end=1),  # arrow at the apex
        ),
        corner_angles=(1, 1, 3),
        corner_colors=(WHITE, BLACK, WHITE),
    )
)

# ---------------------------------------------------------------------------
# P3 half rhombs.  Half-thin: apex 36; the two unit legs are real rhomb edges
# and the base (phi^-1, the short diagonal) is the cut.  Half-fat: apex 108 at
# E; unit edges N-E and E-S are real and S-N (phi, the long diagonal) is the
# cut.  Singles and doubles follow the arrow matching rule: marks on glued
# edges must superimpose, direction included.

HALF_THIN = "ht"
HALF_FAT = "hf"

_HF_S = CycloPoint(1, 0, 1, 0)  # 1 + zeta^2

_register(
    Prototile(
        tileset=P3,
        kind=HALF_THIN,
        boundary=(ORIGIN, ONE_PT, ZETA),  # A (apex), B, C
        edges=(
            EdgeMark("single", arrow_end=0),  # toward A
            EdgeMark("cut_t", arrow_end=0),  # oriented from B
            EdgeMark("double", arrow_end=0),  # toward C
        ),
        corner_angles=(1, 2, 2),
    )
)

_register(
    Prototile(
        tileset=P3,
        kind=HALF_FAT,
        boundary=(ORIGIN, ONE_PT, _HF_S),  # N, E (apex), S
        edges=(
            EdgeMark("single", arrow_end=0),  # toward N
            EdgeMark("double", arrow_end=1),  # toward S
            EdgeMark("cut_f", arrow_end=1),  # oriented from N
        ),
        corner_angles=(1, 3, 1),
    )
)


# ---------------------------------------------------------------------------
# HBS tiles: hexagon, boat, star with unit edges carrying directed arrows.
# Boundaries and decoration tables are frozen from the sink construction on
# generated P3 patches (see catalog_data).

from . import catalog_data


def _register_hbs():
    for kind, data in catalog_data.HBS_DATA.items():
        boundary = tuple(CycloPoint(*c) for c in data["boundary"])
        edges = tuple(EdgeMark("hbs", arrow_end=a) for a in data["arrows"])
        _register(
            Prototile(
                tileset=HBS,
                kind=kind,
                boundary=boundary,
                edges=edges,
                corner_angles=_angles_from_boundary(boundary),
            )
        )


_register_hbs()


def decoration_content(tileset: str, kind: str, target: str) -> tuple:
    """Frozen (kind, rot, refl, translation) placements decorating one tile."""
    for store, ts in (
        (catalog_data.HBS_DATA, HBS),
        (catalog_data.STAR_DATA, STAR),
        (catalog_data.GEM_DATA, GEM),
    ):
        if tileset == ts and kind in store:
            key = {P2: "p2_content", P3: "p3_content"}[target]
            if key not in store[kind]:
                raise KeyError(f"no {target} decoration for {tileset}/{kind}")
            return store[kind][key]
    raise KeyError(f"no decoration tables for {tileset}/{kind}")


def _validate_catalog():
    for proto in _CATALOG.values():
        assert len(proto.edges) == len(proto.boundary)
        assert proto.corner_angles == _angles_from_boundary(proto.boundary), proto.kind
        assert proto.area.sign() > 0, proto.kind


_validate_catalog()
