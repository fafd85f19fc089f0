"""Frozen canonical tile tables (exact lattice integers).

Built once from the generating derivations and validated by the test suite:
boundaries are counterclockwise with the first vertex at the origin and a
unit first edge along angle 0; `arrows` gives the marked endpoint (0 = edge
start, 1 = edge end) per boundary edge; contents list (kind, rot, refl,
translation) placements in the canonical frame.
"""

HBS_DATA = {
    "hexagon": dict(
        boundary=((0, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 1), (0, 1, -1, 2), (-1, 1, -1, 2), (-1, 1, -1, 1)),
        arrows=(0, 1, 0, 0, 1, 1),
        p3_content=(('hf', 0, 1, (-1, 1, -1, 2)), ('hf', 8, 0, (-1, 1, -1, 2)), ('ht', 3, 0, (1, 0, 0, 0)), ('ht', 5, 1, (1, 0, 0, 0)), ('ht', 9, 0, (-1, 1, -1, 1)), ('ht', 9, 1, (0, 1, -1, 2))),
        p2_content=(('hd', 3, 0, (0, 1, -1, 1)), ('hd', 5, 1, (0, 1, -1, 1)), ('hk', 0, 1, (-1, 1, -1, 1)), ('hk', 4, 0, (1, 0, 0, 0)), ('hk', 4, 1, (1, 0, 0, 0)), ('hk', 8, 0, (0, 1, -1, 2)), ('hk', 9, 0, (-1, 1, -1, 2)), ('hk', 9, 1, (-1, 1, -1, 2))),
    ),
    "boat": dict(
        boundary=((0, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 1), (0, 1, -1, 2), (-1, 1, -1, 2), (-1, 0, -1, 2), (0, -1, 0, 1), (0, -1, 0, 0)),
        arrows=(0, 1, 1, 0, 0, 1, 0, 1),
        p3_content=(('hf', 1, 0, (0, -1, 0, 0)), ('hf', 1, 1, (-1, 0, -1, 2)), ('hf', 3, 0, (1, 0, 0, 0)), ('hf', 3, 1, (0, -1, 0, 0)), ('hf', 5, 1, (1, 0, 0, 0)), ('hf', 9, 0, (-1, 0, -1, 2)), ('ht', 0, 1, (-1, 1, -1, 2)), ('ht', 4, 0, (1, 0, 0, 1))),
        p2_content=(('hd', 0, 1, (0, 0, 0, 1)), ('hd', 4, 0, (0, 0, 0, 1)), ('hd', 6, 0, (0, 0, 0, 1)), ('hd', 6, 1, (0, 0, 0, 1)), ('hd', 8, 0, (0, 0, 0, 1)), ('hd', 8, 1, (0, 0, 0, 1)), ('hk', 0, 0, (-1, 0, -1, 2)), ('hk', 0, 1, (-1, 0, -1, 2)), ('hk', 2, 0, (0, -1, 0, 0)), ('hk', 2, 1, (0, -1, 0, 0)), ('hk', 4, 0, (1, 0, 0, 0)), ('hk', 4, 1, (1, 0, 0, 0)), ('hk', 5, 1, (1, 0, 0, 1)), ('hk', 9, 0, (-1, 1, -1, 2))),
    ),
    "star": dict(
        boundary=((0, 0, 0, 0), (1, 0, 0, 0), (1, 0, 0, 1), (1, 0, 1, 1), (0, 0, 1, 1), (-1, 1, 0, 2), (-1, 1, -1, 2), (-1, 0, -1, 2), (0, -1, 0, 1), (0, -1, 0, 0)),
        arrows=(0, 1, 0, 1, 0, 1, 0, 1, 0, 1),
        p3_content=(('hf', 1, 0, (0, -1, 0, 0)), ('hf', 1, 1, (-1, 0, -1, 2)), ('hf', 3, 0, (1, 0, 0, 0)), ('hf', 3, 1, (0, -1, 0, 0)), ('hf', 5, 0, (1, 0, 1, 1)), ('hf', 5, 1, (1, 0, 0, 0)), ('hf', 7, 0, (-1, 1, 0, 2)), ('hf', 7, 1, (1, 0, 1, 1)), ('hf', 9, 0, (-1, 0, -1, 2)), ('hf', 9, 1, (-1, 1, 0, 2))),
        p2_content=(('hd', 0, 0, (0, 0, 0, 1)), ('hd', 0, 1, (0, 0, 0, 1)), ('hd', 2, 0, (0, 0, 0, 1)), ('hd', 2, 1, (0, 0, 0, 1)), ('hd', 4, 0, (0, 0, 0, 1)), ('hd', 4, 1, (0, 0, 0, 1)), ('hd', 6, 0, (0, 0, 0, 1)), ('hd', 6, 1, (0, 0, 0, 1)), ('hd', 8, 0, (0, 0, 0, 1)), ('hd', 8, 1, (0, 0, 0, 1)), ('hk', 0, 0, (-1, 0, -1, 2)), ('hk', 0, 1, (-1, 0, -1, 2)), ('hk', 2, 0, (0, -1, 0, 0)), ('hk', 2, 1, (0, -1, 0, 0)), ('hk', 4, 0, (1, 0, 0, 0)), ('hk', 4, 1, (1, 0, 0, 0)), ('hk', 6, 0, (1, 0, 1, 1)), ('hk', 6, 1, (1, 0, 1, 1)), ('hk', 8, 0, (-1, 1, 0, 2)), ('hk', 8, 1, (-1, 1, 0, 2))),
    ),
}

# Star-tileset vertex label cycles and the gemstone and P1 catalogs are
# appended by the same extraction pipeline; see tests for their validation.
STAR_DATA: dict = {}
GEM_DATA: dict = {}
P1_DATA: dict = {}
