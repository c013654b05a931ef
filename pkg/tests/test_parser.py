from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lojasiewicz.algebra import BiPoly
from lojasiewicz.errors import NonIntegerExponent, PolySyntaxError, VariableOutOfRange
from lojasiewicz.parser import parse_poly, parse_series
from lojasiewicz.puiseux import PuiseuxSeries

from helpers import CUBIC_PAIR, GOLDEN

x, y = BiPoly.x(), BiPoly.y()


def test_basic_polynomials():
    assert parse_poly("x^2 - y^3") == x ** 2 - y ** 3
    assert parse_poly("x*(x - y^2 - y^3)") == x * (x - y ** 2 - y ** 3)
    assert parse_poly("  3/4 * x ") == x.scale(F(3, 4))
    assert parse_poly("-x + y") == y - x
    assert parse_poly("(x - y)^0") == BiPoly.const(1)


def test_non_integer_exponent():
    with pytest.raises(NonIntegerExponent):
        parse_poly("x^(1/2)")
    with pytest.raises(NonIntegerExponent):
        parse_poly("y^(3/2)")
    with pytest.raises(NonIntegerExponent):
        parse_poly("x^-1")


def test_syntax_errors_carry_offset():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x + * y")
    assert info.value.offset == 4
    assert "x" in info.value.expected
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("2x")
    assert info.value.offset == 1
    with pytest.raises(PolySyntaxError):
        parse_poly("")
    with pytest.raises(PolySyntaxError):
        parse_poly("(x + y")


def test_unknown_variable():
    with pytest.raises(VariableOutOfRange) as info:
        parse_poly("x + z")
    assert info.value.offset == 4


def test_series():
    s = parse_series("y^(3/2) - 2*y^(5/2)")
    assert s == PuiseuxSeries.from_terms([(F(3, 2), 1), (F(5, 2), -2)])
    assert parse_series("1/2*y^2 + y") == PuiseuxSeries.from_terms([(1, 1), (2, F(1, 2))])
    assert parse_series("y - y").terms == ()
    with pytest.raises(VariableOutOfRange):
        parse_series("x + y")


def test_round_trip_corpus():
    for f, g, *_ in GOLDEN + [CUBIC_PAIR]:
        for text in (f, g):
            p = parse_poly(text)
            assert parse_poly(str(p)) == p


poly = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                       st.fractions(min_value=-5, max_value=5, max_denominator=7),
                       max_size=6).map(BiPoly)


@settings(max_examples=200, deadline=None)
@given(poly)
def test_round_trip_random(p):
    assert parse_poly(str(p)) == p
