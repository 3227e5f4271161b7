from fractions import Fraction

import pytest
from hypothesis import given

from conftest import bipolys, rationals, unipolys
from multiset_eulerian.polys import (
    BiPoly,
    DegreeExceedsN,
    UniPoly,
    X,
    X_PLUS_Y,
    XY,
    Y,
)


class TestBiPolyBasics:
    def test_add_like_terms(self):
        assert XY + XY == BiPoly.monomial(1, 1, 2)

    def test_add_cancels_to_zero(self):
        assert XY + (-XY) == BiPoly.zero()
        assert not (XY - XY)

    def test_add_disjoint_supports(self):
        p = BiPoly.monomial(1, 2) + BiPoly.monomial(2, 2)
        assert p.coeff(1, 2) == 1 and p.coeff(2, 2) == 1

    def test_mul_golden(self):
        # xy(x+y) is the descent polynomial of {1,1}
        assert XY * X_PLUS_Y == BiPoly({(2, 1): 1, (1, 2): 1})

    def test_mul_identity_and_zero(self):
        p = BiPoly({(1, 2): 3, (0, 1): Fraction(1, 2)})
        assert p * BiPoly.one() == p
        assert p * BiPoly.zero() == BiPoly.zero()

    def test_no_zero_terms_stored(self):
        p = BiPoly({(1, 1): 2, (2, 0): 0})
        assert dict(p.items()) == {(1, 1): Fraction(2)}

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            BiPoly({(-1, 0): 1})


class TestDerivatives:
    def test_partial_x(self):
        assert BiPoly.monomial(2, 1).partial_derivative("x") == BiPoly.monomial(1, 1, 2)

    def test_partial_y(self):
        assert BiPoly.monomial(1, 2).partial_derivative("y") == BiPoly.monomial(1, 1, 2)

    def test_partial_kills_constant_in_var(self):
        assert BiPoly.monomial(0, 3).partial_derivative("x") == BiPoly.zero()

    @given(bipolys(), bipolys())
    def test_leibniz_rule(self, p, q):
        for var in ("x", "y"):
            lhs = (p * q).partial_derivative(var)
            rhs = p.partial_derivative(var) * q + p * q.partial_derivative(var)
            assert lhs == rhs


class TestHomogeneousDegree:
    def test_product_degree(self):
        assert (XY * X_PLUS_Y).homogeneous_degree() == 3

    def test_mixed_degrees_none(self):
        assert (X + XY).homogeneous_degree() is None

    def test_zero_is_none(self):
        assert BiPoly.zero().homogeneous_degree() is None

    def test_degree_six_example(self):
        # xy^2(y^3 + 12xy^2 + 15x^2y + 2x^3), six letters plus one
        p = BiPoly.monomial(1, 2) * BiPoly(
            {(0, 3): 1, (1, 2): 12, (2, 1): 15, (3, 0): 2}
        )
        assert p.homogeneous_degree() == 6


class TestSetYToOne:
    def test_golden_a12(self):
        p = BiPoly.monomial(1, 2) * (Y + X.scale(2))
        assert p.set_y_to_one() == UniPoly({1: 1, 2: 2})

    def test_pure_x_fixed(self):
        assert X.set_y_to_one() == UniPoly.x()

    def test_golden_a11(self):
        assert (XY * X_PLUS_Y).set_y_to_one() == UniPoly({1: 1, 2: 1})

    @given(bipolys(max_exp=4), bipolys(max_exp=4))
    def test_ring_homomorphism(self, p, q):
        assert (p * q).set_y_to_one() == p.set_y_to_one() * q.set_y_to_one()
        assert (p + q).set_y_to_one() == p.set_y_to_one() + q.set_y_to_one()


class TestReciprocal:
    def test_definition_unrolled(self):
        f = UniPoly({1: 1, 2: 2})
        assert f.reciprocal(3) == UniPoly({2: 1, 1: 2})

    def test_symmetric_fixed_point(self):
        f = UniPoly({0: 1, 1: 4, 2: 1})
        assert f.reciprocal(2) == f

    def test_degree_too_large(self):
        with pytest.raises(DegreeExceedsN):
            UniPoly({3: 1}).reciprocal(2)

    @given(unipolys(max_exp=6))
    def test_involution(self, f):
        n = (f.degree or 0) + 2
        assert f.reciprocal(n).reciprocal(n) == f


class TestIsSymmetric:
    def test_a22_is_symmetric(self):
        assert UniPoly({1: 1, 2: 4, 3: 1}).is_symmetric(4)

    def test_a12_is_not(self):
        assert not UniPoly({1: 1, 2: 2}).is_symmetric(3)

    def test_zero_always_symmetric(self):
        for n in range(5):
            assert UniPoly.zero().is_symmetric(n)

    def test_degree_above_n_is_false(self):
        assert not UniPoly({3: 1}).is_symmetric(2)


class TestRingAxioms:
    @given(bipolys(), bipolys(), bipolys())
    def test_bipoly_ring(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r

    @given(unipolys(), unipolys(), unipolys())
    def test_unipoly_ring(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h

    @given(bipolys(), rationals(), rationals())
    def test_exact_scalar_arithmetic(self, p, a, b):
        assert p.scale(a).scale(b) == p.scale(a * b)
        assert p.scale(a) + p.scale(b) == p.scale(a + b)


class TestSerialization:
    def test_bipoly_schema(self):
        p = BiPoly({(1, 2): Fraction(-3, 2), (0, 0): 5})
        assert p.to_json() == [
            {"i": 0, "j": 0, "num": "5", "den": "1"},
            {"i": 1, "j": 2, "num": "-3", "den": "2"},
        ]

    def test_unipoly_schema_has_no_j(self):
        f = UniPoly({2: 7})
        assert f.to_json() == [{"i": 2, "num": "7", "den": "1"}]

    def test_graded_lex_order(self):
        p = BiPoly({(0, 3): 1, (2, 0): 1, (1, 1): 1})
        assert [(t["i"], t["j"]) for t in p.to_json()] == [(1, 1), (2, 0), (0, 3)]

    @given(bipolys())
    def test_bipoly_roundtrip(self, p):
        assert BiPoly.from_json(p.to_json()) == p

    @given(unipolys())
    def test_unipoly_roundtrip(self, f):
        assert UniPoly.from_json(f.to_json()) == f
