"""Exact arithmetic: the golden field Q(phi) and the lattice Z[zeta].

zeta is the primitive 10th root of unity exp(i*pi/5); the lattice basis is
{1, zeta, zeta^2, zeta^3} with the reduction zeta^4 = zeta^3 - zeta^2 + zeta - 1
and zeta^5 = -1.  Multiplication by phi = 1 + zeta^2 - zeta^3 is an integer
bijection of the lattice, so tile geometry never leaves integer coordinates.
Floats appear only at the rendering boundary.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from typing import NamedTuple, Union

Scalar = Union[int, Fraction, "GoldenRational"]


def _golden_sign(a, b) -> int:
    """Sign of a + b*phi for rational a, b (exact; phi = (1+sqrt5)/2)."""
    if b == 0:
        return (a > 0) - (a < 0)
    # a + b*phi > 0  <=>  (2a + b) + b*sqrt5 > 0
    t = 2 * a + b
    if b > 0:
        if t >= 0:
            return 1
        return 1 if t * t < 5 * b * b else (-1 if t * t > 5 * b * b else 0)
    if t <= 0:
        return -1
    return -1 if t * t < 5 * b * b else (1 if t * t > 5 * b * b else 0)


class GoldenRational:
    """Element a + b*phi of Q(phi), with exact rational coefficients."""

    __slots__ = ("a", "b")

    def __init__(self, a: Scalar = 0, b=0):
        if isinstance(a, GoldenRational):
            self.a, self.b = a.a, a.b
            return
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    def __repr__(self):
        return f"GoldenRational({self.a}, {self.b})"

    def __str__(self):
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}phi"

    def __eq__(self, other):
        other = _coerce(other)
        return other is not None and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenRational(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GoldenRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        # (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1
        return GoldenRational(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a + self.b * other.b,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenRational":
        """Galois conjugate: phi -> 1 - phi."""
        return GoldenRational(self.a + self.b, -self.b)

    def field_norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> "GoldenRational":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(phi)")
        return GoldenRational((self.a + self.b) / n, -self.b / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = GoldenRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sign(self) -> int:
        return _golden_sign(self.a, self.b)

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * ((1 + 5 ** 0.5) / 2)


def _coerce(x) -> "GoldenRational | None":
    if isinstance(x, GoldenRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenRational(x)
    return None


ZERO = GoldenRational(0)
ONE = GoldenRational(1)
PHI = GoldenRational(0, 1)
INV_PHI = GoldenRational(-1, 1)  # phi^-1 = phi - 1
SQRT5 = GoldenRational(-1, 2)  # sqrt5 = 2 phi - 1


def golden_mul(x: GoldenRational, y: GoldenRational) -> GoldenRational:
    return x * y


def golden_pow(x: GoldenRational, k: int) -> GoldenRational:
    return x ** k


class CycloPoint(NamedTuple):
    """Lattice point c0 + c1*zeta + c2*zeta^2 + c3*zeta^3, integer coordinates."""

    c0: int
    c1: int
    c2: int
    c3: int

    def __add__(self, other):
        return CycloPoint(
            self[0] + other[0], self[1] + other[1], self[2] + other[2], self[3] + other[3]
        )

    def __sub__(self, other):
        return CycloPoint(
            self[0] - other[0], self[1] - other[1], self[2] - other[2], self[3] - other[3]
        )

    def __neg__(self):
        return CycloPoint(-self[0], -self[1], -self[2], -self[3])

    def times(self, n: int) -> "CycloPoint":
        return CycloPoint(n * self[0], n * self[1], n * self[2], n * self[3])

    def rot1(self) -> "CycloPoint":
        """Multiply by zeta (rotation by 36 degrees)."""
        c0, c1, c2, c3 = self
        return CycloPoint(-c3, c0 + c3, c1 - c3, c2 + c3)

    def rot(self, k: int) -> "CycloPoint":
        p = self
        for _ in range(k % 10):
            p = p.rot1()
        return p

    def conj(self) -> "CycloPoint":
        """Complex conjugation (reflection across the x-axis)."""
        c0, c1, c2, c3 = self
        return CycloPoint(c0 + c1, -c1, c1 - c3, -c1 - c2)

    def mul_phi(self) -> "CycloPoint":
        """Multiply by phi = 1 + zeta^2 - zeta^3 (exact lattice bijection)."""
        c0, c1, c2, c3 = self
        return CycloPoint(c0 + c1 - c3, c2 + c3, c0 + c1, -c0 + c2 + c3)

    def mul_inv_phi(self) -> "CycloPoint":
        """Multiply by phi^-1 = phi - 1."""
        c0, c1, c2, c3 = self
        return CycloPoint(c1 - c3, -c1 + c2 + c3, c0 + c1 - c2, -c0 + c2)

    def mul_phi_pow(self, k: int) -> "CycloPoint":
        p = self
        if k >= 0:
            for _ in range(k):
                p = p.mul_phi()
        else:
            for _ in range(-k):
                p = p.mul_inv_phi()
        return p

    def norm_sq_pair(self) -> "tuple[int, int]":
        """|z|^2 as integer pair (a, b) meaning a + b*phi."""
        c0, c1, c2, c3 = self
        s = c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3
        p01 = c0 * c1 + c1 * c2 + c2 * c3  # pairs at 36 degrees
        p02 = c0 * c2 + c1 * c3  # 72
        p03 = c0 * c3  # 108
        return (s - p02 + p03, p01 + p02 - p03)

    def norm_sq(self) -> GoldenRational:
        a, b = self.norm_sq_pair()
        return GoldenRational(a, b)

    def xy_pairs(self) -> "tuple[tuple[int, int], tuple[int, int]]":
        """(X, Y) with X = 2*Re(z) and Y = Im(z)/sin36, each as (a, b) in Z[phi]."""
        c0, c1, c2, c3 = self
        return (2 * c0 - c2 + c3, c1 + c2 - c3), (c1, c2 + c3)

    def to_complex(self, scale_exponent: int = 0) -> complex:
        z = sum(c * _ZETA_POW[k] for k, c in enumerate(self))
        return z * _INV_PHI_F ** scale_exponent

    def is_zero(self) -> bool:
        return not (self[0] or self[1] or self[2] or self[3])


_ZETA_POW = [cmath.exp(1j * cmath.pi * k / 5) for k in range(4)]
_INV_PHI_F = 2 / (1 + 5 ** 0.5)

ORIGIN = CycloPoint(0, 0, 0, 0)
ONE_PT = CycloPoint(1, 0, 0, 0)
ZETA = CycloPoint(0, 1, 0, 0)


def unit(k: int) -> CycloPoint:
    """zeta^k as a lattice point."""
    return ONE_PT.rot(k)


_UNITS = None


def unit_index(p: CycloPoint) -> "int | None":
    """k with p == zeta^k, or None."""
    global _UNITS
    if _UNITS is None:
        _UNITS = {unit(k): k for k in range(10)}
    return _UNITS.get(p)


def cross_pair(p: CycloPoint, q: CycloPoint) -> "tuple[int, int]":
    """cross(p, q)/sin36 restricted to... returns (a, b) of X_p*Y_q - Y_p*X_q in Z[phi].

    The true cross product is this value times sin36/2; only its sign and
    Q(phi)-ratio matter, which the pair carries exactly.
    """
    (xa, xb), (ya, yb) = p.xy_pairs()
    (xa2, xb2), (ya2, yb2) = q.xy_pairs()
    # (xa+xb*phi)(ya2+yb2*phi) - (ya+yb*phi)(xa2+xb2*phi)
    a = xa * ya2 + xb * yb2 - (ya * xa2 + yb * xb2)
    b = xa * yb2 + xb * ya2 + xb * yb2 - (ya * xb2 + yb * xa2 + yb * xb2)
    return (a, b)


def cross_sign(p: CycloPoint, q: CycloPoint) -> int:
    a, b = cross_pair(p, q)
    return _golden_sign(a, b)


def dot_sign(p: CycloPoint, q: CycloPoint) -> int:
    (xa, xb), (ya, yb) = p.xy_pairs()
    (xa2, xb2), (ya2, yb2) = q.xy_pairs()
    # X_p X_q + 3-ish... dot = Re p Re q + Im p Im q; scale by 4/(...) keeps sign:
    # (X_p X_q) * sin^2-free part: use 4*dot = X_p X_q + Y_p Y_q * (4 sin^2 36)
    # 4 sin^2 36 = 3 - phi
    a1 = xa * xa2 + xb * xb2
    b1 = xa * xb2 + xb * xa2 + xb * xb2
    a2 = ya * ya2 + yb * yb2
    b2 = ya * yb2 + yb * ya2 + yb * yb2
    # (a2 + b2 phi) * (3 - phi) = 3a2 - a2 phi + 3 b2 phi - b2 phi^2
    a3 = 3 * a2 - b2
    b3 = -a2 + 3 * b2 - b2
    return _golden_sign(a1 + a3, b1 + b3)


def _half_plane(u: CycloPoint) -> int:
    (xa, xb), (ya, yb) = u.xy_pairs()
    sy = _golden_sign(ya, yb)
    if sy > 0 or (sy == 0 and _golden_sign(xa, xb) > 0):
        return 0  # upper half plane including the positive x-axis
    return 1


def angle_cmp(u: CycloPoint, v: CycloPoint) -> int:
    """Exact counterclockwise angle comparison of nonzero lattice vectors from angle 0."""
    hu, hv = _half_plane(u), _half_plane(v)
    if hu != hv:
        return -1 if hu < hv else 1
    return -cross_sign(u, v)


def angle_key(v: CycloPoint):
    return _ANGLE_KEY(v)


_ANGLE_KEY = None


def _init_angle_key():
    global _ANGLE_KEY
    import functools

    _ANGLE_KEY = functools.cmp_to_key(angle_cmp)


_init_angle_key()


class Isometry(NamedTuple):
    """Lattice isometry z -> zeta^rot * conj^refl(z) + t."""

    rot: int
    refl: int
    t: CycloPoint

    @staticmethod
    def identity() -> "Isometry":
        return Isometry(0, 0, ORIGIN)

    def apply(self, p: CycloPoint) -> CycloPoint:
        if self.refl:
            p = p.conj()
        return p.rot(self.rot) + self.t

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: (self.compose(other)).apply(p) == self.apply(other.apply(p))."""
        r2 = other.rot if not self.refl else -other.rot
        t2 = other.t.conj() if self.refl else other.t
        return Isometry((self.rot + r2) % 10, self.refl ^ other.refl, t2.rot(self.rot) + self.t)

    def inverse(self) -> "Isometry":
        ri = (-self.rot if not self.refl else self.rot) % 10
        ti = -(self.t.conj() if self.refl else self.t).rot(ri)
        return Isometry(ri, self.refl, ti)

    def scale_phi(self) -> "Isometry":
        """The isometry conjugated... translation multiplied by phi (used when a patch rescales)."""
        return Isometry(self.rot, self.refl, self.t.mul_phi())


def point_transform(p: CycloPoint, t: Isometry) -> CycloPoint:
    return t.apply(p)


def point_scale_phi(p: CycloPoint) -> CycloPoint:
    return p.mul_phi()


def point_to_float(p: CycloPoint, scale_exponent: int = 0) -> "tuple[float, float]":
    z = p.to_complex(scale_exponent)
    return (z.real, z.imag)
