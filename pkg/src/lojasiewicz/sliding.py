"""Sliding of arcs along a polynomial and the Newton-Puiseux branch tree."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .algebra import (EXACT, BiPoly, divide_exact, find_common_shear, gcd_bipoly,
                      is_reduced, mini_order)
from .errors import (BudgetExhausted, DegeneratePolygon, NoAxisDot, NotReduced,
                     TruncationTooShallow, ZeroPolynomial)
from .polygon import Edge, cone_count, highest_edge, polygon_from_dots
from .puiseux import INF, PuiseuxSeries, first_nonreal_exponent, fmt_exponent, ord_diff, substitute

DEFAULT_BUDGET = 64
DEFAULT_EXPONENT_CAP = 128
DEFAULT_EXTRA_TERMS = 3


def reflect(f: BiPoly) -> BiPoly:
    """f(x, -y)."""
    return f.reflect()


def _ordered_roots(poly, field):
    roots = field.roots(list(poly))
    return sorted(((c, m) for c, m in roots if not field.is_zero(c)),
                  key=lambda t: field.sort_key(t[0]), reverse=True)


@dataclass(frozen=True)
class SlideStep:
    k: int
    phi_k: PuiseuxSeries
    h_k: Fraction
    edge: Edge
    root: object
    multiplicity: int
    next_phi: PuiseuxSeries


def slide_step(F: BiPoly, phi: PuiseuxSeries, field=EXACT, k: int = 0) -> list[SlideStep]:
    """One step per distinct nonzero root of the highest edge polynomial."""
    M = substitute(F, phi, field)
    P = polygon_from_dots(M.terms, field) if M.terms else None
    if P is None or P.axis_dot is None:
        raise NoAxisDot("the arc is already a root")
    edge = highest_edge(P)
    h = P.axis_dot[1]
    steps = []
    for c, mult in _ordered_roots(edge.nonzero_part(), field):
        nxt = PuiseuxSeries(phi.terms, INF).plus_term(edge.tan_theta, c, field)
        steps.append(SlideStep(k, phi, h, edge, c, mult, nxt))
    return steps


@dataclass(frozen=True)
class SlideResult:
    series: PuiseuxSeries
    trace: tuple
    exact: bool        # True: F(series, y) == 0; False: the step budget ran out


def slide_to_root(F: BiPoly, phi: PuiseuxSeries | None = None, cap: int = DEFAULT_BUDGET,
                  field=EXACT) -> SlideResult:
    """Follow the first-listed edge root at every fork until F(phi, y) = 0."""
    phi = PuiseuxSeries((), INF) if phi is None else PuiseuxSeries.from_terms(phi.terms, INF, field)
    trace = []
    for k in range(cap):
        try:
            steps = slide_step(F, phi, field, k)
        except NoAxisDot:
            return SlideResult(phi, tuple(trace), True)
        except DegeneratePolygon:
            # F(phi, y) is a nonzero unit near 0; nothing left to slide
            return SlideResult(phi, tuple(trace), False)
        trace.append(steps[0])
        phi = steps[0].next_phi
    try:
        slide_step(F, phi, field, cap)
    except NoAxisDot:
        return SlideResult(phi, tuple(trace), True)
    return SlideResult(phi, tuple(trace), False)


@dataclass(frozen=True)
class Branch:
    id: int
    series: PuiseuxSeries
    multiplicity_in_product: int
    in_f: bool
    in_g: bool
    in_h: bool
    is_real: bool
    first_nonreal: object
    conjugate_id: int
    depth: Fraction          # separation depth

    def owners(self) -> str:
        return "".join(tag for tag, flag in (("f", self.in_f), ("g", self.in_g), ("h", self.in_h))
                       if flag)


@dataclass(frozen=True)
class BranchSystem:
    branches: tuple
    rho: tuple
    shear_used: Fraction
    orders: tuple
    f: BiPoly
    g: BiPoly
    h: BiPoly
    field: object = dc_field(default=EXACT, compare=False)

    def real_branches(self, owner: str) -> list[Branch]:
        attr = {"f": "in_f", "g": "in_g", "h": "in_h"}[owner]
        return [b for b in self.branches if b.is_real and getattr(b, attr)]

    def to_json(self) -> dict:
        fld = self.field
        return {
            "shear": str(self.shear_used),
            "f": str(self.f), "g": str(self.g), "h": str(self.h),
            "orders": list(self.orders),
            "branches": [{
                "id": b.id,
                "terms": [[str(e), *fld.parts(c)] for e, c in b.series.terms],
                "trunc": fmt_exponent(b.series.trunc),
                "depth": str(b.depth),
                "in_f": b.in_f, "in_g": b.in_g, "in_h": b.in_h,
                "is_real": b.is_real,
                "first_nonreal": fmt_exponent(b.first_nonreal),
                "conjugate_id": b.conjugate_id,
            } for b in self.branches],
            "rho": [[fmt_exponent(v) for v in row] for row in self.rho],
        }


def _node(P, phi, field):
    M = substitute(P, phi, field)
    return M, polygon_from_dots(M.terms, field)


def newton_puiseux_leaves(P: BiPoly, field=EXACT, budget=DEFAULT_BUDGET,
                          exponent_cap=DEFAULT_EXPONENT_CAP):
    """Separated roots of a square-free, mini-regular P, in tree order.

    Every node is an arc phi known through exponent e together with the number
    r of roots beta of P with ord(beta - phi) > e.  The edges of the polygon of
    P relative to phi steeper than e split those r roots; a child holding a
    single root is a leaf.
    """
    m, regular = mini_order(P)
    if not regular:
        raise ValueError("newton_puiseux_leaves needs a mini-regular polynomial")
    leaves: list = []

    def visit(phi, e, r, level):
        M, poly = _node(P, phi, field)
        s = min(i for i, _ in M.terms)
        if s > 1:
            raise NotReduced(f"arc {phi.render(field)} is a root of multiplicity {s}")
        if s:
            leaves.append(phi.with_trunc(INF))
        width = s
        for edge in poly.edges:
            if edge.tan_theta <= e:
                break
            width += edge.width
            if edge.tan_theta > exponent_cap:
                raise BudgetExhausted(f"exponent {edge.tan_theta} exceeds cap {exponent_cap}",
                                      partial=phi)
            for c, k in _ordered_roots(edge.nonzero_part(), field):
                child = phi.extend(edge.tan_theta, c)
                if k == 1:
                    leaves.append(child)
                elif level + 1 > budget:
                    raise BudgetExhausted(f"tree deeper than {budget} levels", partial=child)
                else:
                    visit(child, edge.tan_theta, k, level + 1)
        if width != r:
            raise AssertionError(f"root count mismatch at {phi.render(field)}: {width} != {r}")

    visit(PuiseuxSeries((), Fraction(0)), Fraction(0), m, 0)
    return leaves


def extend_branch(P: BiPoly, series: PuiseuxSeries, steps: int, field=EXACT) -> PuiseuxSeries:
    """Add up to ``steps`` terms to a separated branch (the slide is unique)."""
    for _ in range(steps):
        if series.trunc == INF:
            break
        M, poly = _node(P, series, field)
        if poly.axis_dot is None:
            return series.with_trunc(INF)
        edge = highest_edge(poly)
        if edge.right[0] != 1:
            raise AssertionError("branch is not separated")
        c = -edge.poly[0] / edge.poly[1]
        series = series.extend(edge.tan_theta, c)
    return series


def _agree(a: PuiseuxSeries, b: PuiseuxSeries, field) -> bool:
    try:
        return ord_diff(a, b, field) == INF
    except TruncationTooShallow:
        return True


def _reduced_nonzero(p: BiPoly, name: str):
    if p.is_zero():
        raise ZeroPolynomial(f"{name} is the zero polynomial")
    if not is_reduced(p):
        raise NotReduced(f"{name} = {p} is not square-free")


def expand_branches(f: BiPoly, g: BiPoly | None = None, field=EXACT, budget=DEFAULT_BUDGET,
                    exponent_cap=DEFAULT_EXPONENT_CAP, extra_terms=DEFAULT_EXTRA_TERMS,
                    shear: bool = True) -> BranchSystem:
    """Branches of the square-free product f*g/gcd(f, g), tagged by owner.

    With ``g=None`` the branches of f alone are returned (g = h = f).
    """
    _reduced_nonzero(f, "f")
    single = g is None
    if not single:
        _reduced_nonzero(g, "g")
    lam = find_common_shear(f, f if single else g) if shear else Fraction(0)
    f = f.shear(lam)
    g = f if single else g.shear(lam)
    if single:
        h = f
        P = f
        factors = {"h": f}
    else:
        h = gcd_bipoly(f, g)
        fh = divide_exact(f, h)
        gh = divide_exact(g, h)
        P = h * fh * gh
        factors = {"h": h, "f/h": fh, "g/h": gh}
    for p in (f, g):
        if not mini_order(p)[1]:
            raise AssertionError("shear did not produce mini-regular inputs")

    leaves = newton_puiseux_leaves(P, field, budget, exponent_cap)
    series_list = [extend_branch(P, s, extra_terms, field) for s in leaves]

    owners = []
    for s in series_list:
        hits = []
        for name, Q in factors.items():
            if Q.is_constant():
                continue
            M = substitute(Q, s.with_trunc(INF) if s.trunc == INF else s, field)
            if cone_count(M, s.trunc) == 1:
                hits.append(name)
        if len(hits) != 1:
            raise AssertionError(f"branch {s.render(field)} matched factors {hits}")
        owners.append(hits[0])

    n = len(series_list)
    conj_ids = []
    for i, s in enumerate(series_list):
        cs = s.conjugate(field)
        match = [j for j, t in enumerate(series_list) if _agree(cs, t, field)]
        if len(match) != 1:
            raise AssertionError(f"conjugate of branch {i} matched {match}")
        conj_ids.append(match[0])

    rho = [[INF] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rho[i][j] = rho[j][i] = ord_diff(series_list[i], series_list[j], field)

    branches = []
    for i, s in enumerate(series_list):
        depth = max((rho[i][j] for j in range(n) if j != i), default=Fraction(0))
        owner = owners[i]
        in_h = owner == "h"
        real = conj_ids[i] == i
        branches.append(Branch(
            id=i, series=s, multiplicity_in_product=1,
            in_f=in_h or owner == "f/h", in_g=in_h or owner == "g/h", in_h=in_h,
            is_real=real, first_nonreal=INF if real else first_nonreal_exponent(s, field),
            conjugate_id=conj_ids[i], depth=depth))

    return BranchSystem(tuple(branches), tuple(tuple(r) for r in rho), lam,
                        (mini_order(f)[0], mini_order(g)[0]), f, g,
                        h, field)
