import random
from fractions import Fraction as F

import pytest

from lojasiewicz.algebra import GaussianRational as G
from lojasiewicz.errors import DegeneratePolygon, NoAxisDot
from lojasiewicz.parser import parse_poly, parse_series
from lojasiewicz.polygon import (cone_count, highest_edge, newton_polygon, ord_along,
                                 polygon_from_dots, polygon_to_json, render_polygon)
from lojasiewicz.puiseux import INF, PuiseuxSeries, substitute

from helpers import random_arc, random_reduced


def test_polygon_cusp():
    P = newton_polygon(parse_poly("x^2 - y^3"))
    assert set(P.dots) == {(2, F(0)), (0, F(3))}
    assert len(P.edges) == 1
    e = P.edges[0]
    assert e.tan_theta == F(3, 2)
    assert e.poly == (G(-1), G(0), G(1))


def test_polygon_with_collinear_dot():
    P = newton_polygon(parse_poly("(x - y)^2 - y^3"))
    assert set(P.dots) == {(2, F(0)), (1, F(1)), (0, F(2)), (0, F(3))}
    e = highest_edge(P)
    assert (e.left, e.right) == ((0, F(2)), (2, F(0)))
    assert e.tan_theta == 1
    assert e.poly == (G(1), G(-2), G(1))


def test_polygon_relative_to_root():
    P = newton_polygon(parse_poly("x^2 - y^3"), parse_series("y^(3/2)"))
    assert set(P.dots) == {(2, F(0)), (1, F(3, 2))}
    assert P.axis_dot is None
    with pytest.raises(NoAxisDot):
        highest_edge(P)


def test_highest_edge_cusp():
    e = highest_edge(newton_polygon(parse_poly("x^2 - y^3")))
    assert (e.left, e.right, e.tan_theta) == ((0, F(3)), (2, F(0)), F(3, 2))


def test_degenerate_polygon():
    P = polygon_from_dots({(0, F(2)): G(1)})
    with pytest.raises(DegeneratePolygon):
        highest_edge(P)


def test_ord_along():
    assert ord_along(parse_poly("x^2 - y^3"), PuiseuxSeries()) == 3
    assert ord_along(parse_poly("x^2 - y^3"), parse_series("y^(3/2)")) == INF
    assert ord_along(parse_poly("x"), parse_series("y^2")) == 2


def test_cone_count_matches_root_orders():
    # roots of f: 0, y^2, y^2 + y^3, +-y^(3/2); relative to phi = 0
    f = parse_poly("x*(x - y^2)*(x - y^2 - y^3)*(x^2 - y^3)")
    M = substitute(f, PuiseuxSeries())
    assert cone_count(M, F(1)) == 5
    assert cone_count(M, F(3, 2)) == 3
    assert cone_count(M, F(2)) == 1
    assert cone_count(M, INF) == 1


def test_json_and_text_forms():
    P = newton_polygon(parse_poly("x^2 - y^3"))
    js = polygon_to_json(P)
    assert js["axis_dot"] == [0, "3"]
    assert js["edges"][0]["tan_theta"] == "3/2"
    assert js["edges"][0]["poly"] == ["-1", "0", "1"]
    assert "tan_theta = 3/2" in render_polygon(P)


def test_highest_edge_angle_dominates_common_factor():
    # min(tan F_1, tan G_1) >= tan H_1 for h | f, h | g and phi not a root of h
    rng = random.Random(11)
    checked = 0
    for _ in range(40):
        h = random_reduced(rng, 3)
        f = h * random_reduced(rng, 3)
        g = h * random_reduced(rng, 3)
        phi = random_arc(rng)
        if ord_along(h, phi) == INF or ord_along(f, phi) == INF or ord_along(g, phi) == INF:
            continue
        try:
            tf = highest_edge(newton_polygon(f, phi)).tan_theta
            tg = highest_edge(newton_polygon(g, phi)).tan_theta
            th = highest_edge(newton_polygon(h, phi)).tan_theta
        except DegeneratePolygon:
            continue
        assert min(tf, tg) >= th
        checked += 1
    assert checked >= 20
