"""Substitution systems: half-tile decomposition rules and their matrices.

Rules store children as isometries relative to the parent's canonical frame
scaled by phi; substitute() multiplies all coordinates by phi per step (the
patch scale exponent tracks physical size), so every coordinate stays an
exact lattice integer vector.
"""
from __future__ import annotations

from dataclasses import dataclass

from .golden import CycloPoint, GoldenRational, Isometry, PHI
from .patch import Patch, Tile, pose_from_triple
from .prototiles import (
    HALF_DART,
    HALF_FAT,
    HALF_KITE,
    HALF_THIN,
    P2,
    P3,
    canonical_prototile,
)


@dataclass(frozen=True)
class SubstitutionRule:
    tileset: str
    scale: GoldenRational  # linear scale ratio parent : child
    steps_per_apply: int  # how many phi rescales one application performs
    children: dict  # parent kind -> tuple of (child kind, relative Isometry)

    def child_counts(self, parent_kind: str) -> dict:
        out: dict = {}
        for kind, _ in self.children[parent_kind]:
            out[kind] = out.get(kind, 0) + 1
        return out

    def squared(self) -> "SubstitutionRule":
        """The rule applied twice, flattened into a single table."""
        kids: dict = {}
        for parent, entries in self.children.items():
            acc = []
            for kind, rel in entries:
                scaled = Isometry(rel.rot, rel.refl, rel.t.mul_phi())
                for kind2, rel2 in self.children[kind]:
                    acc.append((kind2, scaled.compose(rel2)))
            kids[parent] = tuple(acc)
        return SubstitutionRule(
            self.tileset, self.scale * self.scale, 2 * self.steps_per_apply, kids
        )


def _child(tileset: str, kind: str, world_boundary_order: tuple):
    proto = canonical_prototile(tileset, kind)
    return (kind, pose_from_triple(proto, world_boundary_order))


def _build_p2_rule() -> SubstitutionRule:
    hk = canonical_prototile(P2, HALF_KITE)
    hd = canonical_prototile(P2, HALF_DART)
    # parent frames scaled by phi
    V0, V1, V2 = (p.mul_phi() for p in hk.boundary)  # apex, wing, tail
    U = V0 + (V2 - V0).mul_inv_phi()  # on the axis, distance phi^-1 of the parent
    Y = V1 + (V0 - V1).mul_inv_phi()  # on the long edge
    hk_children = (
        _child(P2, HALF_KITE, (V1, Y, U)),
        _child(P2, HALF_DART, (V0, U, Y)),
        _child(P2, HALF_KITE, (V1, V2, U)),
    )
    W0, W1, W2 = (p.mul_phi() for p in hd.boundary)  # apex, wing, notch
    Z = W0 + (W1 - W0).mul_inv_phi()
    hd_children = (
        _child(P2, HALF_KITE, (W0, Z, W2)),
        _child(P2, HALF_DART, (W1, W2, Z)),
    )
    return SubstitutionRule(
        P2, PHI, 1, {HALF_KITE: hk_children, HALF_DART: hd_children}
    )


def _build_p3_rule() -> SubstitutionRule:
    ht = canonical_prototile(P3, HALF_THIN)
    hf = canonical_prototile(P3, HALF_FAT)
    # half-thin: boundary (A, B, C) with apex A
    A, B, C = (p.mul_phi() for p in ht.boundary)
    Pp = A + (B - A).mul_inv_phi()
    ht_children = (
        _child(P3, HALF_THIN, (C, Pp, B)),
        _child(P3, HALF_FAT, (C, Pp, A)),  # boundary order (N, E, S) = (B-role, apex, C-role)
    )
    # half-fat: boundary (N, E, S); decomposition roles apex=E, B-role=N, C-role=S
    N, E, S = (p.mul_phi() for p in hf.boundary)
    Q = N + (E - N).mul_inv_phi()
    R = N + (S - N).mul_inv_phi()
    hf_children = (
        _child(P3, HALF_FAT, (S, R, E)),
        _child(P3, HALF_FAT, (R, Q, N)),
        _child(P3, HALF_THIN, (R, Q, E)),
    )
    return SubstitutionRule(
        P3, PHI, 1, {HALF_THIN: ht_children, HALF_FAT: hf_children}
    )


P2_RULE = _build_p2_rule()
P3_RULE = _build_p3_rule()

_RULES = {P2: P2_RULE, P3: P3_RULE}


def rule_for(tileset: str) -> SubstitutionRule:
    try:
        return _RULES[tileset]
    except KeyError:
        raise KeyError(f"no substitution rule for tileset {tileset}") from None


def register_rule(tileset: str, rule: SubstitutionRule):
    _RULES[tileset] = rule


def substitute(patch: Patch, rule: SubstitutionRule, steps: int = 1) -> Patch:
    """Decompose a patch `steps` times; coordinates rescale by phi each step."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if patch.tileset != rule.tileset:
        raise ValueError(f"rule is for {rule.tileset}, patch is {patch.tileset}")
    cur = patch
    for _ in range(steps):
        nxt = Patch(cur.tileset, cur.scale_exponent + rule.steps_per_apply)
        for tile in cur.tiles:
            base = Isometry(tile.iso.rot, tile.iso.refl, tile.iso.t.mul_phi_pow(rule.steps_per_apply))
            for kind, rel in rule.children[tile.kind]:
                nxt.add_tile(Tile(kind, base.compose(rel)))
        cur = nxt
    return cur


class SubstitutionMatrix:
    """Integer count matrix M[i][j] = children of kind i per parent of kind j."""

    def __init__(self, kinds: tuple, counts: dict):
        self.kinds = tuple(kinds)
        self.m = [[counts.get(parent, {}).get(child, 0) for parent in self.kinds] for child in self.kinds]

    def __getitem__(self, ij):
        return self.m[ij[0]][ij[1]]

    def column(self, parent_kind: str) -> dict:
        j = self.kinds.index(parent_kind)
        return {self.kinds[i]: self.m[i][j] for i in range(len(self.kinds))}

    def power(self, k: int) -> "list[list[int]]":
        n = len(self.kinds)
        out = [[int(i == j) for j in range(n)] for i in range(n)]
        base = [row[:] for row in self.m]
        while k:
            if k & 1:
                out = _matmul(out, base)
            base = _matmul(base, base)
            k >>= 1
        return out

    def is_primitive(self) -> bool:
        n = len(self.kinds)
        p = self.power(max(1, (n - 1) * (n - 1) + 1))
        return all(all(x > 0 for x in row) for row in p)


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def substitution_matrix(rule: SubstitutionRule, kinds: tuple = None, collapse=None) -> SubstitutionMatrix:
    """Counts from the rule's child tables.

    `collapse` optionally maps kind -> merged kind (e.g. merging star variants).
    """
    raw_kinds = tuple(sorted(rule.children.keys()))
    if collapse is None:
        collapse = {k: k for k in raw_kinds}
    out_kinds = kinds if kinds is not None else tuple(dict.fromkeys(collapse[k] for k in raw_kinds))
    counts: dict = {}
    for parent in raw_kinds:
        col: dict = {}
        for kind, _ in rule.children[parent]:
            ck = collapse[kind]
            col[ck] = col.get(ck, 0) + 1
        cp = collapse[parent]
        if cp in counts and counts[cp] != col:
            raise ValueError(f"collapse is inconsistent for parent {parent}")
        counts[cp] = col
    return SubstitutionMatrix(out_kinds, counts)
