"""Legal seed patches for the generators."""
from __future__ import annotations

from .golden import ORIGIN
from .patch import Patch
from .prototiles import HALF_DART, HALF_FAT, HALF_KITE, HALF_THIN, P2, P3


def _wheel(patch: Patch, kind: str) -> Patch:
    for k in range(5):
        patch.add(kind, rot=2 * k)
        patch.add(kind, rot=2 * k + 2, refl=1)
    return patch


def sun() -> Patch:
    """Five kites around a vertex, apexes inward."""
    return _wheel(Patch(P2), HALF_KITE)


def star() -> Patch:
    """Five darts around a vertex, apexes inward."""
    return _wheel(Patch(P2), HALF_DART)


def kite() -> Patch:
    p = Patch(P2)
    p.add(HALF_KITE, 0, 0)
    p.add(HALF_KITE, 2, 1)
    return p


def dart() -> Patch:
    p = Patch(P2)
    p.add(HALF_DART, 0, 0)
    p.add(HALF_DART, 2, 1)
    return p


def fat_rhomb() -> Patch:
    """One fat rhomb: two half-fat triangles glued along the long diagonal."""
    p = Patch(P3)
    p.add(HALF_FAT, 0, 0)
    p.add(HALF_FAT, 2, 1)
    return p


def thin_rhomb() -> Patch:
    from .golden import CycloPoint

    p = Patch(P3)
    p.add(HALF_THIN, 0, 0)
    p.add(HALF_THIN, 6, 1, CycloPoint(1, 1, 0, 0))  # mirror half across the short diagonal
    return p


def p3_star() -> Patch:
    """Five fat rhombs around the origin, single arrows pointing inward."""
    p = Patch(P3)
    for k in range(5):
        p.add(HALF_FAT, 2 * k, 0)
        p.add(HALF_FAT, 2 * k + 2, 1)
    return p


SEEDS = {
    P2: {"sun": sun, "star": star, "kite": kite, "dart": dart},
    P3: {"fat-rhomb": fat_rhomb, "thin-rhomb": thin_rhomb, "star": p3_star},
}


def seed(tileset: str, name: str) -> Patch:
    try:
        return SEEDS[tileset][name]()
    except KeyError:
        raise KeyError(f"unknown seed {tileset}/{name}") from None
