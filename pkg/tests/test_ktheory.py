import random
from fractions import Fraction

import pytest

from planemoduli.errors import DomainError
from planemoduli.ktheory import (ChernP2, dual, euler_hom, euler_product,
                                 hilbert_polynomial, ideal_twisted,
                                 line_bundle, line_support, moduli,
                                 parse_chern, point, shift, twist)


def rand_chern(rng) -> ChernP2:
    r = rng.randint(-3, 3)
    c = rng.randint(-5, 5)
    e = Fraction(c * c, 2) + rng.randint(-6, 6)
    return ChernP2(r, c, e)


class TestConstructors:
    def test_moduli(self):
        assert moduli(6) == ChernP2(0, 6, -8)
        assert moduli(4) == ChernP2(0, 4, -5)
        with pytest.raises(DomainError):
            moduli(0)

    def test_ideal_twisted(self):
        assert ideal_twisted(2, 2) == ChernP2(1, 2, 0)
        assert ideal_twisted(0, 3) == line_bundle(3)
        with pytest.raises(DomainError):
            ideal_twisted(-1, 0)

    def test_line_bundle_and_point(self):
        assert line_bundle(0) == ChernP2(1, 0, 0)
        assert line_bundle(-3) == ChernP2(1, -3, Fraction(9, 2))
        assert point() == ChernP2(0, 0, 1)
        assert line_support(0) == ChernP2(0, 1, Fraction(-1, 2))

    def test_integrality_enforced(self):
        with pytest.raises(DomainError):
            ChernP2(0, 1, 1)  # e - c^2/2 = 1/2
        with pytest.raises(DomainError):
            ChernP2(1, 0, Fraction(1, 3))
        with pytest.raises(DomainError):
            ChernP2(1, Fraction(1, 2), 0)  # type: ignore[arg-type]

    def test_parse_and_format(self):
        v = parse_chern("1,3,-7/2")
        assert v == ChernP2(1, 3, Fraction(-7, 2))
        assert str(v) == "1,3,-7/2"
        with pytest.raises(DomainError):
            parse_chern("1,3")
        with pytest.raises(DomainError):
            parse_chern("1,x,0")


class TestTransforms:
    def test_shift_of_line_bundle(self):
        assert shift(line_bundle(-3)) == ChernP2(-1, 3, Fraction(-9, 2))

    def test_twist_of_ideal(self):
        assert twist(ideal_twisted(4, 0), 2) == ChernP2(1, 2, -2)

    def test_dual_is_involution(self):
        rng = random.Random(41)
        for _ in range(100):
            v = rand_chern(rng)
            assert dual(dual(v)) == v

    def test_twist_composition_and_dual_twist(self):
        rng = random.Random(42)
        for _ in range(100):
            v = rand_chern(rng)
            a, b = rng.randint(-5, 5), rng.randint(-5, 5)
            assert twist(twist(v, a), b) == twist(v, a + b)
            assert dual(twist(v, a)) == twist(dual(v), -a)


class TestEulerPairings:
    def test_wall_classes_are_orthogonal(self):
        assert euler_product(ChernP2(0, 6, -8), ChernP2(-6, 1, Fraction(9, 2))) == 0
        assert euler_product(ChernP2(0, 6, -8), ChernP2(-6, 1, Fraction(41, 2))) == 0

    def test_structure_sheaf_self_pairing(self):
        assert euler_product(line_bundle(0), line_bundle(0)) == 1

    def test_hom_pairing_reproduces_ext_dimensions(self):
        destab = ChernP2(1, 3, Fraction(-7, 2))
        assert euler_hom(line_bundle(-3), destab) == 20
        assert euler_hom(destab, line_bundle(-3)) == 2

    def test_hom_pairing_on_line_bundles(self):
        assert euler_hom(line_bundle(0), line_bundle(1)) == 3
        rng = random.Random(43)
        for _ in range(100):
            a = rng.randint(-6, 6)
            b = rng.randint(-6, 6)
            k = b - a
            assert euler_hom(line_bundle(a), line_bundle(b)) == \
                Fraction((k + 1) * (k + 2), 2)

    def test_product_symmetry(self):
        rng = random.Random(44)
        for _ in range(100):
            v, w = rand_chern(rng), rand_chern(rng)
            assert euler_product(v, w) == euler_product(w, v)

    def test_hom_is_dualized_product(self):
        rng = random.Random(45)
        for _ in range(100):
            v, w = rand_chern(rng), rand_chern(rng)
            assert euler_hom(v, w) == euler_product(dual(v), w)

    def test_bilinearity(self):
        rng = random.Random(46)
        for _ in range(100):
            u, v, w = (rand_chern(rng) for _ in range(3))
            a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            for pairing in (euler_product, euler_hom):
                assert pairing(a * u + b * v, w) == \
                    a * pairing(u, w) + b * pairing(v, w)
                assert pairing(w, a * u + b * v) == \
                    a * pairing(w, u) + b * pairing(w, v)

    def test_moduli_dimension(self):
        for d in range(1, 13):
            assert 1 - euler_hom(moduli(d), moduli(d)) == d * d + 1

    def test_product_pairing_matches_chow_route(self):
        # independent route: expand ch(v) ch(w) Td in the truncated Chow
        # ring of the plane and read off the top coefficient
        from planemoduli.chow import ChowP2
        todd = ChowP2(1, Fraction(3, 2), 1)
        rng = random.Random(48)
        for _ in range(100):
            v, w = rand_chern(rng), rand_chern(rng)
            product = ChowP2(v.r, v.c, v.e) * ChowP2(w.r, w.c, w.e) * todd
            assert euler_product(v, w) == product.c2

    def test_hilbert_polynomial_matches_pairing_route(self):
        # chi(v(m)) is also the pairing of the structure sheaf against the
        # twisted class
        rng = random.Random(49)
        for _ in range(100):
            v = rand_chern(rng)
            m = rng.randint(-6, 6)
            assert hilbert_polynomial(v)(m) == \
                euler_hom(line_bundle(0), twist(v, m))


class TestHilbertPolynomial:
    def test_moduli_is_linear(self):
        h = hilbert_polynomial(moduli(6))
        assert (h.quadratic, h.linear, h.constant) == (0, 6, 1)
        assert str(h) == "6*m + 1"
        h4 = hilbert_polynomial(moduli(4))
        assert (h4.quadratic, h4.linear, h4.constant) == (0, 4, 1)

    def test_structure_sheaf(self):
        h = hilbert_polynomial(line_bundle(0))
        assert (h.quadratic, h.linear, h.constant) == \
            (Fraction(1, 2), Fraction(3, 2), 1)
        assert h(3) == 10  # h^0 of O(3)

    def test_twist_shifts_argument(self):
        rng = random.Random(47)
        for _ in range(50):
            v = rand_chern(rng)
            k = rng.randint(-4, 4)
            m = rng.randint(-4, 4)
            assert hilbert_polynomial(twist(v, k))(m) == hilbert_polynomial(v)(m + k)


class TestAlgebra:
    def test_add_sub_scale(self):
        v = moduli(6)
        w = ChernP2(1, 3, Fraction(-7, 2))
        assert v - w == ChernP2(-1, 3, Fraction(-9, 2))
        assert (v - w) + w == v
        assert 2 * w == ChernP2(2, 6, -7)
        assert -w == shift(w)
