"""Contact orders, the candidate arcs and the separation exponent."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import BiPoly, divide_exact, find_common_shear, is_reduced
from .config import RunConfig
from .errors import (BudgetExhausted, DoesNotVanishAtOrigin, IdenticalSeries, IndeterminateRatio,
                     NonRealPrefix, NotReduced, TruncationTooShallow, ZeroPolynomial)
from .puiseux import (INF, ApproxSeries, PuiseuxSeries, fmt_exponent, ord_, ord_diff,
                      ord_diff_generic, pair_approximation)
from .sliding import BranchSystem, expand_branches, extend_branch, reflect


@dataclass(frozen=True)
class ArcCandidate:
    gamma: ApproxSeries
    source_pair: tuple
    ell: Fraction
    ordd_f: Fraction
    ordd_g: Fraction
    ordd_h: Fraction

    def to_json(self, field) -> dict:
        return {
            "prefix": [[str(e), *field.parts(c)] for e, c in self.gamma.prefix.terms],
            "rho": str(self.gamma.rho),
            "source_pair": list(self.source_pair),
            "ell": str(self.ell),
            "ordd_f": fmt_exponent(self.ordd_f),
            "ordd_g": fmt_exponent(self.ordd_g),
            "ordd_h": fmt_exponent(self.ordd_h),
        }


def ord_dist(gamma: ApproxSeries, branches, field=None):
    """Contact order of a generic arc with the real branches listed; 1 if none."""
    if not branches:
        return Fraction(1)
    kw = {} if field is None else {"field": field}
    return max(ord_diff_generic(gamma, b.series, **kw) for b in branches)


def ord_dist_shortcut(source: int, rho_value, branches, rho) -> Fraction:
    """Same value through the ultrametric: max over beta of min(rho, rho[source][beta])."""
    if not branches:
        return Fraction(1)
    return max(min(rho_value, rho[source][b.id]) for b in branches)


def _product(sys: BranchSystem) -> BiPoly:
    if sys.h is sys.f:
        return sys.f
    return sys.h * divide_exact(sys.f, sys.h) * divide_exact(sys.g, sys.h)


def contact_order(phi: PuiseuxSeries, sys: BranchSystem, owner: str, budget: int = 64):
    """ord_d of a finite arc against the real branches of one owner; 1 if none.

    Branches are lengthened on demand until they visibly part from phi.
    """
    branches = sys.real_branches(owner)
    if not branches:
        return Fraction(1)
    P = None
    best = Fraction(0)
    for b in branches:
        series = b.series
        for _ in range(budget):
            try:
                value = ord_diff(phi, series, sys.field)
                break
            except TruncationTooShallow:
                P = P if P is not None else _product(sys)
                series = extend_branch(P, series, 1, sys.field)
        else:
            raise BudgetExhausted(f"branch {b.id} still agrees with the arc", partial=series)
        best = max(best, value)
    return best


def arc_ell(phi: PuiseuxSeries, sys: BranchSystem):
    """(ell, ordd_f, ordd_g, ordd_h) for a finite real arc of order >= 1."""
    if ord_(phi) < 1:
        raise ValueError("exact ell needs an arc of order >= 1")
    phi = PuiseuxSeries.from_terms(phi.terms, phi.trunc, sys.field)
    of = contact_order(phi, sys, "f")
    og = contact_order(phi, sys, "g")
    oh = contact_order(phi, sys, "h") if not sys.h.is_constant() else Fraction(1)
    if oh == INF:
        raise IndeterminateRatio("arc lies on the common zero set")
    num = min(of, og)
    return (INF if num == INF else Fraction(num) / oh), of, og, oh


def build_candidates(sys: BranchSystem) -> list[tuple[ApproxSeries, tuple]]:
    """Real pair approximations of distinct branches, deduplicated."""
    field = sys.field
    seen = {}
    for i, a in enumerate(sys.branches):
        for b in sys.branches[i + 1:]:
            try:
                gamma = pair_approximation(a.series, b.series, field)
            except (NonRealPrefix, IdenticalSeries):
                continue
            key = gamma.key(field)
            if key not in seen:
                seen[key] = (gamma, (a.id, b.id))
    return list(seen.values())


def ell(gamma: ApproxSeries, sys: BranchSystem):
    """(ell, ordd_f, ordd_g, ordd_h) for a candidate arc."""
    field = sys.field
    of = ord_dist(gamma, sys.real_branches("f"), field)
    og = ord_dist(gamma, sys.real_branches("g"), field)
    oh = ord_dist(gamma, sys.real_branches("h"), field) if not sys.h.is_constant() else Fraction(1)
    num = min(of, og)
    if num == INF and oh == INF:
        raise IndeterminateRatio("arc lies on both zero sets")
    if oh == INF:
        raise IndeterminateRatio("arc lies on the common zero set")
    return Fraction(num) / oh, of, og, oh


def evaluate_candidates(sys: BranchSystem) -> list[ArcCandidate]:
    out = []
    for gamma, pair in build_candidates(sys):
        value, of, og, oh = ell(gamma, sys)
        out.append(ArcCandidate(gamma, pair, value, of, og, oh))
    return out


def _pick_witness(cands):
    if not cands:
        return Fraction(1), None
    best = max(cands, key=lambda c: (c.ell, tuple(-k for k in c.source_pair)))
    return best.ell, best


def L_plus(f: BiPoly, g: BiPoly, config: RunConfig | None = None):
    """(value, witness, candidates, branch system) over arcs with y > 0."""
    config = config or RunConfig()
    sys = expand_branches(f, g, config.field, config.budget, config.exponent_cap,
                          config.extra_terms)
    cands = evaluate_candidates(sys)
    value, witness = _pick_witness(cands)
    return value, witness, cands, sys


def effective_bound(d: int) -> Fraction:
    """((2d - 1)**2 + 1) / 2."""
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    return Fraction((2 * d - 1) ** 2 + 1, 2)


@dataclass(frozen=True)
class ExponentReport:
    f: BiPoly
    g: BiPoly
    L_plus: Fraction
    L_minus: Fraction
    L: Fraction
    witness_plus: ArcCandidate | None
    witness_minus: ArcCandidate | None
    candidates_plus: tuple
    candidates_minus: tuple
    shear: Fraction
    effective_bound: Fraction | None
    mode: str
    budgets: dict
    system_plus: BranchSystem
    system_minus: BranchSystem

    def to_json(self) -> dict:
        field = self.system_plus.field
        wit = lambda c: None if c is None else c.to_json(field)  # noqa: E731
        return {
            "f": str(self.f),
            "g": str(self.g),
            "mode": self.mode,
            "shear": str(self.shear),
            "L": str(self.L),
            "L_plus": str(self.L_plus),
            "L_minus": str(self.L_minus),
            "effective_bound": None if self.effective_bound is None else str(self.effective_bound),
            "witness_plus": wit(self.witness_plus),
            "witness_minus": wit(self.witness_minus),
            "candidates_plus": [c.to_json(field) for c in self.candidates_plus],
            "candidates_minus": [c.to_json(field) for c in self.candidates_minus],
            "budgets": dict(self.budgets),
        }

    def render(self, side: str = "both") -> str:
        field = self.system_plus.field
        lines = [f"f = {self.f}", f"g = {self.g}"]
        if self.shear:
            lines.append(f"shear: y -> y + ({self.shear})*x")
        for name, value, witness, cands in (
                ("plus", self.L_plus, self.witness_plus, self.candidates_plus),
                ("minus", self.L_minus, self.witness_minus, self.candidates_minus)):
            if side not in ("both", name):
                continue
            sign = "+" if name == "plus" else "-"
            lines.append(f"L{sign} = {value}")
            for c in cands:
                mark = "*" if c is witness else " "
                lines.append(f"  {mark} {c.gamma.render(field):40s} pair={c.source_pair} "
                             f"ell={c.ell} (ordd f={fmt_exponent(c.ordd_f)}, "
                             f"g={fmt_exponent(c.ordd_g)}, h={fmt_exponent(c.ordd_h)})")
        lines.append(f"L = {self.L}")
        if self.effective_bound is not None:
            lines.append(f"effective bound = {self.effective_bound}")
        return "\n".join(lines)


def check_inputs(f: BiPoly, g: BiPoly):
    for name, p in (("f", f), ("g", g)):
        if p.is_zero():
            raise ZeroPolynomial(f"{name} is the zero polynomial")
        if p.constant_term() != 0:
            raise DoesNotVanishAtOrigin(f"{name} = {p} does not vanish at the origin")
        if not is_reduced(p):
            raise NotReduced(f"{name} = {p} is not reduced (has a repeated factor)")


def L_separation(f: BiPoly, g: BiPoly, config: RunConfig | None = None) -> ExponentReport:
    """max(L+, L-) after a joint shear making both inputs mini-regular in x."""
    config = config or RunConfig()
    check_inputs(f, g)
    lam = find_common_shear(f, g)
    fs, gs = f.shear(lam), g.shear(lam)
    lp, wp, cp, sp = L_plus(fs, gs, config)
    lm, wm, cm, sm = L_plus(reflect(fs), reflect(gs), config)
    bound = effective_bound(max(f.degree, g.degree, 1))
    return ExponentReport(f, g, lp, lm, max(lp, lm), wp, wm, tuple(cp), tuple(cm), lam, bound,
                          config.mode, config.budgets(), sp, sm)
