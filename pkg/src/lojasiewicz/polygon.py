"""Newton polygon of f relative to an arc x = phi(y)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import EXACT, BiPoly
from .errors import DegeneratePolygon, NoAxisDot, ZeroPolynomial
from .puiseux import INF, ArcPoly, PuiseuxSeries, fmt_exponent, substitute


@dataclass(frozen=True)
class Edge:
    left: tuple          # (i, q) with the smaller X-degree
    right: tuple
    tan_theta: Fraction
    poly: tuple          # edge polynomial, index = degree in z

    @property
    def width(self) -> int:
        return self.right[0] - self.left[0]

    def nonzero_part(self) -> tuple:
        """Edge polynomial divided by z**left.i."""
        return self.poly[self.left[0]:]


@dataclass(frozen=True)
class NewtonPolygonRel:
    dots: dict            # (i, q) -> coefficient
    edges: tuple          # compact lower-left edges, decreasing tan_theta
    axis_dot: tuple | None

    @property
    def vertices(self) -> tuple:
        if not self.edges:
            return ()
        return (self.edges[0].left,) + tuple(e.right for e in self.edges)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_from_dots(dots: dict, field=EXACT) -> NewtonPolygonRel:
    """Lower-left boundary of the convex hull of the Newton dots."""
    if not dots:
        raise ZeroPolynomial("no Newton dots")
    lowest: dict = {}
    for i, q in dots:
        if i not in lowest or q < lowest[i]:
            lowest[i] = q
    qmin = min(lowest.values())
    i_end = min(i for i, q in lowest.items() if q == qmin)
    pts = sorted((i, q) for i, q in lowest.items() if i <= i_end)
    hull: list = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    edges = []
    for left, right in zip(hull, hull[1:]):
        tan = Fraction(left[1] - right[1]) / (right[0] - left[0])
        level = left[1] + tan * left[0]
        poly = [field.zero] * (right[0] + 1)
        for (i, q), c in dots.items():
            if left[0] <= i <= right[0] and q + tan * i == level:
                poly[i] = c
        edges.append(Edge(left, right, tan, tuple(poly)))
    axis = (0, lowest[0]) if 0 in lowest else None
    return NewtonPolygonRel(dict(dots), tuple(edges), axis)


def newton_polygon(f: BiPoly, phi: PuiseuxSeries | None = None, field=EXACT) -> NewtonPolygonRel:
    if f.is_zero():
        raise ZeroPolynomial("Newton polygon of the zero polynomial")
    phi = PuiseuxSeries.from_terms(phi.terms, phi.trunc, field) if phi else PuiseuxSeries()
    return polygon_from_dots(substitute(f, phi, field).terms, field)


def highest_edge(P: NewtonPolygonRel) -> Edge:
    """The compact edge having the lowest axis dot as its upper-left vertex."""
    if P.axis_dot is None:
        raise NoAxisDot("no Newton dot on X = 0: the arc is a root")
    if not P.edges:
        raise DegeneratePolygon("the axis dot is the only hull vertex")
    return P.edges[0]


def ord_along(f: BiPoly, phi: PuiseuxSeries, field=EXACT):
    """ord f(phi(y), y); INF when phi is a root."""
    M = substitute(f, phi, field)
    qs = [q for (i, q) in M.terms if i == 0]
    return min(qs) if qs else INF


def cone_count(M: ArcPoly, e) -> int:
    """Number of roots X of M (with multiplicity) of order > e.

    The supporting line of slope -e touches the polygon along a face whose
    leftmost X-degree counts exactly the roots with higher order.
    """
    if e == INF:
        return min(i for i, _ in M.terms)
    weights = {}
    for i, q in M.terms:
        w = q + e * i
        weights[i] = min(w, weights.get(i, w))
    best = min(weights.values())
    return min(i for i, w in weights.items() if w == best)


def coeff_str(c, field=EXACT) -> str:
    re, im = field.parts(c)
    if field.is_real(c):
        return re
    if field.is_zero(field.real_part(c)):
        return f"{im}i"
    sign = "" if im.startswith("-") else "+"
    return f"{re}{sign}{im}i"


def polygon_to_json(P: NewtonPolygonRel, field=EXACT) -> dict:
    return {
        "dots": [[i, str(q)] for i, q in sorted(P.dots)],
        "edges": [{"left": [e.left[0], str(e.left[1])],
                   "right": [e.right[0], str(e.right[1])],
                   "tan_theta": str(e.tan_theta),
                   "poly": [coeff_str(c, field) for c in e.poly]} for e in P.edges],
        "axis_dot": None if P.axis_dot is None else [0, str(P.axis_dot[1])],
    }


def render_polygon(P: NewtonPolygonRel, field=EXACT) -> str:
    lines = ["dots: " + ", ".join(f"({i}, {q})" for i, q in sorted(P.dots))]
    axis = "none" if P.axis_dot is None else f"(0, {P.axis_dot[1]})"
    lines.append(f"axis dot: {axis}")
    for k, e in enumerate(P.edges, 1):
        poly = " + ".join(f"{coeff_str(c, field)}*z^{d}" for d, c in enumerate(e.poly)
                          if not field.is_zero(c))
        lines.append(f"edge {k}: ({e.left[0]}, {e.left[1]}) -- ({e.right[0]}, {e.right[1]})"
                     f"  tan_theta = {fmt_exponent(e.tan_theta)}  poly = {poly}")
    return "\n".join(lines)
