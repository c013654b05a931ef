"""Numeric cross-check: sample the real curves, measure distances along arcs,
and read exponents off log-log fits.

Nothing here uses Puiseux expansions.  Curves are discretized by solving
f(x, y) = 0 in x for y on a geometric grid; an arc x = gamma(y) is then
scored by the slope of log(d(p, V_f) + d(p, V_g)) against log d(p, V_f ∩ V_g).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np
from mpmath.ctx_mp import MPContext

from .algebra import BiPoly, aberth, derivative, find_common_shear
from .config import RunConfig
from .errors import DegenerateFit
from .puiseux import PuiseuxSeries
from .sliding import reflect

DENSITY = 4            # cloud samples per query sample
WORK_PREC = 256
PROBE_EXPONENTS = (Fraction(1), Fraction(5, 4), Fraction(4, 3), Fraction(3, 2), Fraction(5, 3),
                   Fraction(2), Fraction(5, 2), Fraction(3))


def _ctx():
    ctx = MPContext()
    ctx.prec = WORK_PREC
    return ctx


@dataclass(frozen=True)
class Grid:
    y0: float = 1e-2
    ratio: float = 0.8
    count: int = 40
    sign: int = 1

    @classmethod
    def from_config(cls, config: RunConfig, sign: int = 1) -> "Grid":
        return cls(config.y0, config.ratio, config.samples, sign)

    def cloud_ys(self, ctx):
        step = ctx.mpf(self.ratio) ** (ctx.mpf(1) / DENSITY)
        return [ctx.mpf(self.y0) * step ** k for k in range((self.count - 1) * DENSITY + 1)]


@dataclass
class CurveCloud:
    owner: str
    poly: BiPoly | None
    ys: list
    roots: list                  # per cloud y, the real roots x (mp numbers)
    grid: Grid
    px: np.ndarray = dc_field(default=None)
    py: np.ndarray = dc_field(default=None)
    pidx: np.ndarray = dc_field(default=None)

    def __post_init__(self):
        xs, ys, idx = [], [], []
        for k, (y, rs) in enumerate(zip(self.ys, self.roots)):
            for r in rs:
                xs.append(float(r))
                ys.append(float(y))
                idx.append(k)
        self.px = np.array(xs)
        self.py = np.array(ys)
        self.pidx = np.array(idx, dtype=int)

    def __len__(self):
        return len(self.px)


def _real_roots(coeffs, ctx, y, window, init=None):
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if len(coeffs) < 2:
        return [], init
    tol = ctx.mpf(2) ** (-WORK_PREC + 16)
    z = aberth([ctx.mpc(c) for c in coeffs], ctx, tol, maxiter=400, init=init)
    dp = derivative(coeffs)
    out = []
    for w in z:
        scale = max(abs(w), y)
        if abs(w.imag) <= ctx.mpf(10) ** -55 * scale and abs(w.real) <= window:
            x = w.real
            # real Newton polish
            for _ in range(4):
                d = _horner_real(dp, x)
                if d == 0:
                    break
                x = x - _horner_real(coeffs, x) / d
            out.append(x)
    return sorted(out), z


def _horner_real(coeffs, x):
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def sample_curve(f: BiPoly | None, grid: Grid, owner: str = "f", window: float = 2.0) -> CurveCloud:
    """Real points of f = 0 over the grid with |x| <= window * sqrt(|y|).

    ``f=None`` (or a constant) yields an empty cloud.
    """
    ctx = _ctx()
    ys = grid.cloud_ys(ctx)
    if f is None or f.is_constant():
        return CurveCloud(owner, f, ys, [[] for _ in ys], grid)
    poly = f if grid.sign > 0 else reflect(f)
    terms = [(i, j, ctx.mpf(c.numerator) / c.denominator) for (i, j), c in poly.terms.items()]
    deg = poly.degree_x()
    roots, prev = [], None
    for y in ys:
        coeffs = [ctx.mpf(0)] * (deg + 1)
        for i, j, c in terms:
            coeffs[i] += c * y ** j
        rs, prev = _real_roots(coeffs, ctx, y, window * ctx.sqrt(y), prev)
        roots.append(rs)
    return CurveCloud(owner, poly, ys, roots, grid)


def distance_to_cloud(p, cloud: CurveCloud, index: int | None = None):
    """Distance from p = (x, y) to the sampled curve united with the origin.

    ``index`` marks p as lying on cloud row ``index``; the same-row points are
    then measured through the tangent line in full precision (the vertical gap
    can be far below double resolution).
    """
    ctx = _ctx()
    x, y = ctx.mpf(p[0]), ctx.mpf(p[1])
    best = ctx.sqrt(x * x + y * y)
    if len(cloud):
        mask = cloud.pidx != index if index is not None else slice(None)
        px, py = cloud.px[mask], cloud.py[mask]
        if len(px):
            d = np.hypot(px - float(x), py - float(y)).min()
            if d < best:
                best = ctx.mpf(d)
    if index is not None and cloud.roots[index]:
        fx, fy = cloud.poly.diff_x(), cloud.poly.diff_y()
        yy = cloud.ys[index]
        for r in cloud.roots[index]:
            gx, gy = fx(r, yy), fy(r, yy)
            norm = ctx.sqrt(gx * gx + gy * gy)
            gap = abs(x - r)
            d = gap * abs(gx) / norm if norm else gap
            if d < best:
                best = d
    return best


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    r_squared: float
    samples: int
    rows: tuple = ()         # (y, D, E, logD, logE)


def fit_slope(log_e, log_d, rows=()) -> SlopeFit:
    """Least squares of log D on log E over the middle 80 % of the samples."""
    n = len(log_e)
    cut = n // 10
    xs = np.asarray(log_e[cut:n - cut], dtype=float)
    ys = np.asarray(log_d[cut:n - cut], dtype=float)
    if len(xs) < 8:
        raise DegenerateFit(f"only {len(xs)} usable samples")
    if (xs.max() - xs.min()) / np.log(10) < 2:
        raise DegenerateFit("E(y) spans fewer than two decades")
    A = np.vstack([xs, np.ones_like(xs)]).T
    (slope, intercept), *_ = np.linalg.lstsq(A, ys, rcond=None)
    pred = slope * xs + intercept
    ss_res = float(((ys - pred) ** 2).sum())
    ss_tot = float(((ys - ys.mean()) ** 2).sum())
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return SlopeFit(float(slope), float(intercept), max(0.0, min(1.0, r2)), len(xs), tuple(rows))


@dataclass
class SideClouds:
    """Clouds of f, g and of the common zero set for one sign of y."""

    f: CurveCloud
    g: CurveCloud
    h: CurveCloud
    grid: Grid

    @classmethod
    def build(cls, f: BiPoly, g: BiPoly, h: BiPoly, grid: Grid) -> "SideClouds":
        return cls(sample_curve(f, grid, "f"), sample_curve(g, grid, "g"),
                   sample_curve(None if h.is_constant() else h, grid, "h"), grid)


def _arc_points(gamma: PuiseuxSeries, clouds: SideClouds):
    ctx = _ctx()
    coeffs = [(e, ctx.mpf(str(_real(c)))) for e, c in gamma.terms]
    for k in range(0, len(clouds.f.ys), DENSITY):
        y = clouds.f.ys[k]
        x = sum((c * y ** (ctx.mpf(e.numerator) / e.denominator) for e, c in coeffs), ctx.mpf(0))
        yield k, x, y


def _real(c):
    if hasattr(c, "re") and isinstance(getattr(c, "re"), Fraction):
        return c.re
    if hasattr(c, "real"):
        return c.real
    return c


def _score(points, clouds: SideClouds, same_row: bool) -> SlopeFit:
    ctx = _ctx()
    rows, log_d, log_e = [], [], []
    for k, x, y in points:
        idx = k if same_row else None
        d = distance_to_cloud((x, y), clouds.f, idx) + distance_to_cloud((x, y), clouds.g, idx)
        e = distance_to_cloud((x, y), clouds.h, idx)
        if d <= 0 or e <= 0:
            continue
        ld, le = float(ctx.log(d)), float(ctx.log(e))
        rows.append((float(y), float(d), float(e), ld, le))
        log_d.append(ld)
        log_e.append(le)
    return fit_slope(log_e, log_d, rows)


def estimate_ell(gamma: PuiseuxSeries, clouds: SideClouds) -> SlopeFit:
    """Slope of log D against log E along x = gamma(y), y on the query grid."""
    return _score(_arc_points(gamma, clouds), clouds, True)


def estimate_axis(clouds: SideClouds) -> SlopeFit:
    """Same fit along the positive x-axis, parametrized by x = t."""
    def pts():
        for k in range(0, len(clouds.f.ys), DENSITY):
            yield k, clouds.f.ys[k], 0
    return _score(pts(), clouds, False)


def pick_generic(gamma, branches, field, rng: random.Random, gap: float = 0.25) -> Fraction:
    """A value in [1/2, 2] at least ``gap`` away from real branch coefficients at rho."""
    blocked = []
    for b in branches:
        if not b.is_real:
            continue
        try:
            c = b.series.coefficient(gamma.rho, field)
        except Exception:
            continue
        blocked.append(float(_real(c)))
    for _ in range(1000):
        c = Fraction(rng.randint(500, 2000), 1000)
        if all(abs(float(c) - v) >= gap for v in blocked):
            return c
    raise DegenerateFit("no admissible generic coefficient in [1/2, 2]")


def random_probe(rng: random.Random) -> PuiseuxSeries:
    k = rng.randint(1, 3)
    exps = sorted(rng.sample(PROBE_EXPONENTS, k))
    return PuiseuxSeries.from_terms(
        (e, Fraction(rng.randint(-2000, 2000), 1000) or Fraction(1)) for e in exps)


@dataclass
class ArcEstimate:
    side: str
    label: str
    fit: SlopeFit | None
    exact_ell: Fraction | None = None
    error: str | None = None


@dataclass
class OracleSummary:
    exact_L: Fraction
    estimate_L: float
    arcs: list
    seed: int

    def candidate_arcs(self):
        return [a for a in self.arcs if a.exact_ell is not None]

    def probe_arcs(self):
        return [a for a in self.arcs if a.exact_ell is None]

    def to_json(self) -> dict:
        return {
            "exact_L": str(self.exact_L),
            "estimate_L": self.estimate_L,
            "seed": self.seed,
            "arcs": [{
                "side": a.side, "arc": a.label,
                "slope": None if a.fit is None else a.fit.slope,
                "r2": None if a.fit is None else a.fit.r_squared,
                "exact_ell": None if a.exact_ell is None else str(a.exact_ell),
                "error": a.error,
            } for a in self.arcs],
        }


def estimate_L(f: BiPoly, g: BiPoly, config: RunConfig | None = None, report=None) -> OracleSummary:
    """Numeric sup of ell over the exact candidates, random probes and the x-axis."""
    from .exponent import L_separation

    config = config or RunConfig()
    if report is None:
        report = L_separation(f, g, config)
    rng = random.Random(config.seed)
    field = report.system_plus.field
    lam = find_common_shear(f, g)
    fs, gs = f.shear(lam), g.shear(lam)
    arcs = []
    sides = [("plus", report.system_plus, report.candidates_plus, fs, gs),
             ("minus", report.system_minus, report.candidates_minus, reflect(fs), reflect(gs))]
    per_side = [(config.probes + 1) // 2, config.probes // 2]
    for (side, sys, cands, fp, gp), n_probes in zip(sides, per_side):
        grid = Grid.from_config(config)
        clouds = SideClouds.build(fp, gp, sys.h, grid)
        for cand in cands:
            c = pick_generic(cand.gamma, sys.branches, field, rng)
            arc = cand.gamma.instantiate(c, field)
            arcs.append(_run(side, cand.gamma.render(field).replace("g*", f"{c}*"),
                             lambda: estimate_ell(arc, clouds), cand.ell))
        for _ in range(n_probes):
            probe = random_probe(rng)
            arcs.append(_run(side, probe.render(), lambda: estimate_ell(probe, clouds)))
        arcs.append(_run(side, "x-axis", lambda: estimate_axis(clouds)))
    slopes = [a.fit.slope for a in arcs if a.fit is not None]
    return OracleSummary(report.L, max(slopes) if slopes else float("nan"), arcs, config.seed)


def _run(side, label, thunk, exact=None) -> ArcEstimate:
    try:
        return ArcEstimate(side, label, thunk(), exact)
    except DegenerateFit as exc:
        return ArcEstimate(side, label, None, exact, str(exc))
