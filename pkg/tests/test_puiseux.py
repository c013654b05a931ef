from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from lojasiewicz.algebra import GaussianRational as G
from lojasiewicz.errors import IdenticalSeries, NonRealPrefix, TruncationTooShallow
from lojasiewicz.parser import parse_poly
from lojasiewicz.puiseux import (INF, ApproxSeries, PuiseuxSeries, first_nonreal_exponent, ord_,
                                 ord_diff, ord_diff_generic, pair_approximation,
                                 real_approximation, rho_approximation, substitute)

S = PuiseuxSeries.from_terms
PHI1 = S([(F(3, 2), 1), (F(5, 2), -2), (F(7, 2), G(0, 3))])
PHI2 = S([(F(3, 2), 1), (F(5, 2), -2), (F(7, 2), -3), (F(9, 2), G(0, 1))])
PREFIX = S([(F(3, 2), 1), (F(5, 2), -2)])


def test_ord():
    assert ord_(PREFIX) == F(3, 2)
    assert ord_(PuiseuxSeries.zero()) == INF
    assert ord_(S([(1, 5)])) == 1


def test_ord_diff():
    assert ord_diff(PHI1, PHI2) == F(7, 2)
    assert ord_diff(PHI1, PHI1) == INF
    assert ord_diff(S([(2, 1)]), S([(2, 1), (3, 1)])) == 3


def test_ord_diff_truncated():
    a = S([(1, 1)], trunc=F(2))
    b = S([(1, 1), (5, 1)])
    with pytest.raises(TruncationTooShallow):
        ord_diff(a, b)
    assert ord_diff(a, S([(1, 2)])) == 1


def test_substitute_examples():
    M = substitute(parse_poly("x^2 - y^3"), PuiseuxSeries())
    assert M.terms == {(2, F(0)): G(1), (0, F(3)): G(-1)}
    M = substitute(parse_poly("x^2 - y^3"), S([(F(3, 2), 1)]))
    assert M.terms == {(2, F(0)): G(1), (1, F(3, 2)): G(2)}
    M = substitute(parse_poly("(x - y)^2 - y^3"), S([(1, 1)]))
    assert M.terms == {(2, F(0)): G(1), (0, F(3)): G(-1)}


def test_substitute_axis_is_value_along_arc():
    f = parse_poly("x^3 - 2*x*y^2 + y^5")
    phi = S([(1, 1), (F(3, 2), -1)])
    M = substitute(f, phi)
    axis = M.coefficient_series(0)
    for yv in (0.3, 0.05):
        direct = f(complex(phi.evaluate(yv)), yv)
        assert abs(complex(axis.evaluate(yv)) - direct) < 1e-12


def test_first_nonreal_exponent():
    assert first_nonreal_exponent(PHI1) == F(7, 2)
    assert first_nonreal_exponent(S([(2, 1), (3, 1)])) == INF
    assert first_nonreal_exponent(S([(1, G(0, 1))])) == 1


def test_rho_approximation():
    g = rho_approximation(PHI1, F(7, 2))
    assert g.prefix == PREFIX and g.rho == F(7, 2)
    g = rho_approximation(S([(2, 1)]), 1)
    assert g.prefix.terms == () and g.rho == 1
    with pytest.raises(NonRealPrefix):
        rho_approximation(S([(1, G(0, 1))]), 2)


def test_real_approximation():
    g = real_approximation(PHI1)
    assert isinstance(g, ApproxSeries) and g.prefix == PREFIX and g.rho == F(7, 2)
    assert real_approximation(S([(2, 1)])) == S([(2, 1)])
    g = real_approximation(S([(F(3, 2), G(0, 1))]))
    assert g.prefix.terms == () and g.rho == F(3, 2)


def test_pair_approximation():
    g = pair_approximation(PHI1, PHI2)
    assert g.prefix == PREFIX and g.rho == F(7, 2)
    g = pair_approximation(S([(2, 1)]), S([(2, 1), (3, 1)]))
    assert g.prefix == S([(2, 1)]) and g.rho == 3
    g = pair_approximation(S([(F(3, 2), G(0, 1))]), S([(F(3, 2), G(0, -1))]))
    assert g.prefix.terms == () and g.rho == F(3, 2)
    with pytest.raises(IdenticalSeries):
        pair_approximation(PHI1, PHI1)


def test_ord_diff_generic():
    gamma = ApproxSeries(S([(2, 1)]), F(3))
    assert ord_diff_generic(gamma, S([(2, 1), (3, 1)])) == 3
    assert ord_diff_generic(gamma, PuiseuxSeries.zero()) == 2
    assert ord_diff_generic(ApproxSeries(PuiseuxSeries(), F(3, 2)), S([(F(3, 2), 1)])) == F(3, 2)


def test_ord_diff_generic_needs_depth():
    gamma = ApproxSeries(S([(2, 1)]), F(3))
    with pytest.raises(TruncationTooShallow):
        ord_diff_generic(gamma, S([(2, 1)], trunc=F(5, 2)))


def test_render_marks_generic_term():
    assert ApproxSeries(PREFIX, F(7, 2)).render() == "1*y^(3/2) + -2*y^(5/2) + g*y^(7/2)"


exps = st.sampled_from([F(k, 2) for k in range(2, 9)])
coef = st.sampled_from([-2, -1, 1, 2])
series = st.lists(st.tuples(exps, coef), max_size=4).map(S)


@settings(max_examples=200, deadline=None)
@given(series, series, series)
def test_ultrametric(a, b, c):
    ab, bc, ac = ord_diff(a, b), ord_diff(b, c), ord_diff(a, c)
    assert ac >= min(ab, bc)
    if ab != bc:
        assert ac == min(ab, bc)


@settings(max_examples=100, deadline=None)
@given(series, series)
def test_pair_approximation_symmetric(a, b):
    if a == b:
        return
    assert pair_approximation(a, b) == pair_approximation(b, a)


@settings(max_examples=100, deadline=None)
@given(series, series, series)
def test_generic_shortcut_matches_direct(a, b, beta):
    if a == b:
        return
    gamma = pair_approximation(a, b)
    assert ord_diff_generic(gamma, beta) == min(gamma.rho, ord_diff(a, beta))
