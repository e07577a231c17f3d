from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinkit.laurent import ONE, X, Y, ZERO, LaurentPoly2, parse_poly, to_text

polys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-5, 5), max_size=5
).map(LaurentPoly2)


def test_basic_arithmetic():
    assert X * X ** -1 == ONE
    assert (Y - 1) * (Y + 1) == Y ** 2 - 1
    assert ZERO == 0 and not ZERO
    assert (Y ** 2 * (Y - 1)).degree_y() == 3
    assert to_text(Y ** 2 * (Y - 1)) == "-y^2 + y^3"


def test_negative_power_needs_unit():
    with pytest.raises(Exception):
        (X + Y) ** -1


def test_inspection():
    p = X * Y ** 2 + 3 * Y - 2
    assert not p.x_free() and p.is_polynomial()
    assert p.at_x0() == 3 * Y - 2
    assert p.x_part(1) == Y ** 2
    assert p.evaluate(2, Fraction(1, 2)) == Fraction(2 * 1 / 4) + Fraction(3, 2) - 2
    assert not (Y ** -1).is_polynomial()


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=200, deadline=None)
@given(polys)
def test_text_round_trip(p):
    assert parse_poly(to_text(p)) == p
    assert hash(parse_poly(to_text(p))) == hash(p)


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.fractions(-3, 3).filter(bool), st.fractions(-3, 3).filter(bool))
def test_evaluation_is_a_ring_map(a, b, x, y):
    assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
    assert (a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)
