import math
import random

import pytest
from hypothesis import given, strategies as st

from pentatile.golden import (
    PHI,
    INV_PHI,
    SQRT5,
    ONE,
    ZERO,
    ORIGIN,
    CycloPoint,
    GoldenRational,
    Isometry,
    angle_cmp,
    cross_sign,
    golden_mul,
    golden_pow,
    point_scale_phi,
    point_to_float,
    point_transform,
    unit,
    unit_index,
)

G = GoldenRational


def rationals():
    return st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 4)


def goldens():
    return st.builds(G, rationals(), rationals())


def lattice_points():
    c = st.integers(min_value=-50, max_value=50)
    return st.builds(CycloPoint, c, c, c, c)


class TestGoldenField:
    def test_phi_squared(self):
        assert golden_mul(PHI, PHI) == G(1, 1)

    def test_inv_phi_times_phi(self):
        assert golden_mul(G(-1, 1), PHI) == ONE

    def test_sqrt5_squared(self):
        assert golden_mul(SQRT5, SQRT5) == G(5, 0)

    def test_pow_cube(self):
        assert golden_pow(PHI, 3) == G(1, 2)

    def test_pow_negative(self):
        assert golden_pow(PHI, -1) == G(-1, 1)
        assert golden_pow(PHI, -1) == INV_PHI

    def test_pow_square_distance_identity(self):
        # 2 + (phi - 1) = phi + 1 = phi^2
        assert G(2) + INV_PHI == golden_pow(PHI, 2)

    def test_zero_base_negative_power(self):
        with pytest.raises(ZeroDivisionError):
            golden_pow(ZERO, -1)

    def test_ordering(self):
        assert INV_PHI < ONE < PHI < G(2) < SQRT5 < PHI * PHI
        assert abs(G(-1, 0)) == ONE

    @given(goldens(), goldens(), goldens())
    def test_ring_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x

    @given(goldens())
    def test_multiplicative_inverse(self, x):
        if x:
            assert x * x.inverse() == ONE

    @given(goldens())
    def test_conjugate_is_field_automorphism(self, x):
        n = x * x.conjugate()
        assert n.b == 0 and n.a == x.field_norm()

    @given(goldens())
    def test_float_agrees_with_sign(self, x):
        f = float(x)
        if abs(f) > 1e-6:
            assert (f > 0) == (x.sign() > 0)


class TestCycloPoint:
    def test_rot5_is_negation(self):
        assert CycloPoint(1, 0, 0, 0).rot(5) == CycloPoint(-1, 0, 0, 0)

    def test_rot4_reduction(self):
        assert CycloPoint(1, 0, 0, 0).rot(4) == CycloPoint(-1, 1, -1, 1)

    @given(lattice_points())
    def test_identity_transform(self, p):
        assert point_transform(p, Isometry.identity()) == p

    def test_scale_phi_of_one(self):
        assert point_scale_phi(CycloPoint(1, 0, 0, 0)) == CycloPoint(1, 0, 1, -1)

    def test_scale_phi_zero(self):
        assert point_scale_phi(ORIGIN) == ORIGIN

    @given(lattice_points())
    def test_scale_phi_roundtrip(self, p):
        assert p.mul_phi().mul_inv_phi() == p
        assert p.mul_inv_phi().mul_phi() == p

    def test_scale_phi_roundtrip_bulk(self):
        rng = random.Random(7)
        for _ in range(1000):
            p = CycloPoint(*(rng.randint(-1000, 1000) for _ in range(4)))
            assert p.mul_phi().mul_inv_phi() == p

    def test_unit_norms(self):
        for k in range(10):
            assert unit(k).norm_sq_pair() == (1, 0)
            assert unit_index(unit(k)) == k

    @given(lattice_points())
    def test_rot10_identity(self, p):
        assert p.rot(10) == p

    @given(lattice_points())
    def test_conj_involution(self, p):
        assert p.conj().conj() == p

    @given(lattice_points())
    def test_norm_matches_float(self, p):
        ns = float(p.norm_sq())
        x, y = point_to_float(p)
        assert ns == pytest.approx(x * x + y * y, abs=1e-6 * (1 + ns))

    def test_to_float_examples(self):
        assert point_to_float(CycloPoint(1, 0, 0, 0), 0) == pytest.approx((1.0, 0.0))
        x, y = point_to_float(CycloPoint(0, 1, 0, 0), 0)
        assert (x, y) == pytest.approx((math.cos(math.pi / 5), math.sin(math.pi / 5)))
        x, y = point_to_float(CycloPoint(1, 0, 0, 0), 1)
        assert (x, y) == pytest.approx(((5 ** 0.5 - 1) / 2, 0.0))

    @given(lattice_points(), lattice_points())
    def test_cross_sign_matches_float(self, p, q):
        xp, yp = point_to_float(p)
        xq, yq = point_to_float(q)
        c = xp * yq - yp * xq
        if abs(c) > 1e-6:
            assert cross_sign(p, q) == (1 if c > 0 else -1)

    def test_angle_order_of_units(self):
        import functools

        vs = [unit(k) for k in range(10)]
        shuffled = vs[3:] + vs[:3]
        assert sorted(shuffled, key=functools.cmp_to_key(angle_cmp)) == vs


class TestIsometry:
    @given(lattice_points(), lattice_points())
    def test_compose_matches_sequential(self, p, t):
        a = Isometry(3, 1, t)
        b = Isometry(7, 0, t.rot1())
        assert a.compose(b).apply(p) == a.apply(b.apply(p))

    @given(lattice_points(), lattice_points())
    def test_inverse(self, p, t):
        for refl in (0, 1):
            iso = Isometry(9, refl, t)
            assert iso.inverse().apply(iso.apply(p)) == p
            assert iso.compose(iso.inverse()) == Isometry.identity()

    @given(lattice_points())
    def test_reflection_involution(self, p):
        m = Isometry(0, 1, ORIGIN)
        assert m.apply(m.apply(p)) == p
