from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewrank.errors import BadField, DivisionByZero, MixedFields
from skewrank.fields import (
    RATIONALS,
    PrimeField,
    QuadraticTower,
    common_field,
    field_arithmetic,
    format_scalar,
    parse_field,
    squarefree_part,
)

fracs = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


def test_parse_field_descriptors():
    assert parse_field("q") is RATIONALS
    assert parse_field("qsqrt:2,3") == QuadraticTower([2, 3])
    assert parse_field("fp:101") == PrimeField(101)
    with pytest.raises(BadField):
        parse_field("reals")


def test_sqrt_two_squares_to_two():
    K = QuadraticTower([2])
    r = K.gen(0)
    assert r * r == K(2)
    assert K.try_sqrt(K(3)) is None
    assert K.try_sqrt(K(8)) == 2 * r


def test_tower_inverse_and_format_roundtrip():
    K = QuadraticTower([2, 3])
    x = K.parse("1 + 2*sqrt(2) - sqrt(3)")
    assert x * x.inverse() == K.one
    assert K.parse(format_scalar(x)) == x


@given(fracs, fracs)
def test_tower_embeds_rationals(a, b):
    K = QuadraticTower([5])
    assert K(a) + K(b) == K(a + b)
    assert K(a) * K(b) == K(a * b)


def test_prime_field_arithmetic():
    F = PrimeField(101)
    x = F(7)
    assert (F.one / x) * x == F.one
    assert F(100) + F(1) == F.zero
    assert F.try_sqrt(F(4)) in (F(2), F(99))
    with pytest.raises(DivisionByZero):
        field_arithmetic(F(1), F(0), "div")


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        common_field(PrimeField(101), RATIONALS)
    assert common_field(RATIONALS, QuadraticTower([2])) == QuadraticTower([2])


@given(st.integers(min_value=-500, max_value=500).filter(bool))
def test_squarefree_part_is_squarefree_cofactor(n):
    s = squarefree_part(n)
    q = Fraction(n, s)
    assert q > 0 and q.denominator == 1
    root = int(round(q.numerator ** 0.5))
    assert root * root == q.numerator
