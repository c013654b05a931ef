"""Command line front end: ``lojasiewicz <command> ...``."""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .algebra import find_common_shear, gcd_bipoly
from .config import RunConfig
from .errors import (BudgetExhausted, DegenerateFit, DoesNotVanishAtOrigin, IndeterminateRatio,
                     LojasiewiczError, NotReduced, PolySyntaxError,
                     UnsupportedAlgebraicCoefficient, ZeroPolynomial)
from .exponent import L_separation, arc_ell, check_inputs, effective_bound
from .oracle import Grid, SideClouds, estimate_ell, estimate_L
from .parser import parse_poly, parse_series
from .polygon import coeff_str, newton_polygon, polygon_to_json, render_polygon
from .puiseux import fmt_exponent, ord_
from .sliding import expand_branches, reflect, slide_to_root

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_BUDGET, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4
SIDES = {"+": "plus", "-": "minus", "both": "both", "plus": "plus", "minus": "minus"}
SEED_ENV = "LOJASIEWICZ_SEED"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "approx"), default="exact")
    common.add_argument("--prec", type=int, default=128, help="working precision in bits (approx)")
    common.add_argument("--tol", type=float, default=1e-30, help="root tolerance (approx)")
    common.add_argument("--budget", type=int, default=64, help="tree depth / slide step budget")
    common.add_argument("--side", choices=sorted(SIDES), default="both")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="lojasiewicz",
                                description="Separation Lojasiewicz exponent of two plane curves")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("exponent", parents=[common], help="exact L(V_f, V_g)")
    s.add_argument("f")
    s.add_argument("g")

    s = sub.add_parser("roots", parents=[common], help="Newton-Puiseux branches of f*g/gcd")
    s.add_argument("f")
    s.add_argument("g")

    s = sub.add_parser("polygon", parents=[common], help="Newton polygon relative to an arc")
    s.add_argument("f")
    s.add_argument("--arc", default=None)

    s = sub.add_parser("slide", parents=[common], help="slide an arc to a root of f")
    s.add_argument("f")
    s.add_argument("--arc", default=None)
    s.add_argument("--steps", type=int, default=None)

    s = sub.add_parser("bound", parents=[common], help="effective exponent bound for degree D")
    s.add_argument("degree", type=int)

    s = sub.add_parser("oracle", parents=[common], help="numeric cross-check by curve sampling")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--arc", default=None)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--probes", type=int, default=20)
    s.add_argument("--samples", type=int, default=40)
    s.add_argument("--csv", default=None, metavar="FILE",
                   help="write the sample table (arc, y, D, E, logD, logE)")
    return p


def make_config(args) -> RunConfig:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, "0"))
    return RunConfig(mode=args.mode, precision_bits=args.prec, tolerance=args.tol,
                     budget=args.budget, side=SIDES[args.side],
                     output="json" if args.json else "text",
                     probes=getattr(args, "probes", 20), samples=getattr(args, "samples", 40),
                     seed=seed)


def _emit(out, payload, as_json: bool):
    if as_json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write(payload + "\n")


def cmd_exponent(args, config, out):
    report = L_separation(parse_poly(args.f), parse_poly(args.g), config)
    _emit(out, report.to_json() if args.json else report.render(config.side), args.json)


def _systems(f, g, config):
    check_inputs(f, g)
    lam = find_common_shear(f, g)
    fs, gs = f.shear(lam), g.shear(lam)
    sides = {}
    if config.side in ("plus", "both"):
        sides["plus"] = expand_branches(fs, gs, config.field, config.budget, config.exponent_cap,
                                        config.extra_terms)
    if config.side in ("minus", "both"):
        sides["minus"] = expand_branches(reflect(fs), reflect(gs), config.field, config.budget,
                                         config.exponent_cap, config.extra_terms)
    return sides


def cmd_roots(args, config, out):
    sides = _systems(parse_poly(args.f), parse_poly(args.g), config)
    if args.json:
        _emit(out, {side: s.to_json() for side, s in sides.items()}, True)
        return
    lines = []
    for side, s in sides.items():
        lines.append(f"[{side}] shear = {s.shear_used}  h = {s.h}")
        for b in s.branches:
            kind = "real" if b.is_real else f"conj of {b.conjugate_id}"
            lines.append(f"  #{b.id} {b.owners():3s} {kind:12s} depth {b.depth}  "
                         f"{b.series.render(s.field)} + O(y^{fmt_exponent(b.series.trunc)})")
        n = len(s.branches)
        if n > 1:
            lines.append("  rho:")
            for row in s.rho:
                lines.append("    " + " ".join(f"{fmt_exponent(v):>6s}" for v in row))
    _emit(out, "\n".join(lines), False)


def cmd_polygon(args, config, out):
    f = parse_poly(args.f)
    phi = parse_series(args.arc) if args.arc else None
    P = newton_polygon(f, phi, config.field)
    _emit(out, polygon_to_json(P, config.field) if args.json else render_polygon(P, config.field),
          args.json)


def cmd_slide(args, config, out):
    f = parse_poly(args.f)
    phi = parse_series(args.arc) if args.arc else None
    field = config.field
    res = slide_to_root(f, phi, args.steps if args.steps is not None else config.budget, field)
    if args.json:
        _emit(out, {
            "series": [[str(e), *field.parts(c)] for e, c in res.series.terms],
            "exact": res.exact,
            "trace": [{"k": s.k, "h_k": str(s.h_k), "tan_theta": str(s.edge.tan_theta),
                       "root": list(field.parts(s.root)), "multiplicity": s.multiplicity}
                      for s in res.trace],
        }, True)
        return
    lines = [f"step {s.k}: h = {s.h_k}, tan_theta = {s.edge.tan_theta}, "
             f"c = {coeff_str(s.root, field)} (multiplicity {s.multiplicity})" for s in res.trace]
    status = "root" if res.exact else "partial (step budget reached)"
    lines.append(f"{status}: x = {res.series.render(field)}")
    _emit(out, "\n".join(lines), False)


def cmd_bound(args, config, out):
    value = effective_bound(args.degree)
    _emit(out, {"degree": args.degree, "bound": str(value)} if args.json else str(value), args.json)


def _write_csv(path, arcs):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["side", "arc", "y", "D", "E", "logD", "logE"])
        for a in arcs:
            if a.fit is None:
                continue
            for row in a.fit.rows:
                w.writerow([a.side, a.label, *(repr(v) for v in row)])


def cmd_oracle(args, config, out):
    f, g = parse_poly(args.f), parse_poly(args.g)
    if args.arc:
        return _oracle_arc(args, config, out, f, g)
    summary = estimate_L(f, g, config)
    if args.csv:
        _write_csv(args.csv, summary.arcs)
    if args.json:
        _emit(out, summary.to_json(), True)
        return
    lines = [f"exact L = {summary.exact_L}   numeric L = {summary.estimate_L:.4f}   "
             f"seed = {summary.seed}"]
    for a in summary.arcs:
        exact = "" if a.exact_ell is None else f"  exact ell = {a.exact_ell}"
        if a.fit is None:
            lines.append(f"  [{a.side}] {a.label}: {a.error}")
        else:
            lines.append(f"  [{a.side}] {a.label}: slope = {a.fit.slope:.4f}  "
                         f"r2 = {a.fit.r_squared:.5f}{exact}")
    _emit(out, "\n".join(lines), False)


def _oracle_arc(args, config, out, f, g):
    check_inputs(f, g)
    phi = parse_series(args.arc)
    side = "minus" if config.side == "minus" else "plus"
    fp, gp = (f, g) if side == "plus" else (reflect(f), reflect(g))
    h = gcd_bipoly(fp, gp)
    clouds = SideClouds.build(fp, gp, h, Grid.from_config(config))
    fit = estimate_ell(phi, clouds)
    exact = None
    # the exact value is defined for arcs of order >= 1 in unsheared coordinates
    if ord_(phi) >= 1 and find_common_shear(f, g) == 0:
        sys_ = expand_branches(fp, gp, config.field, config.budget, config.exponent_cap,
                               config.extra_terms, shear=False)
        exact = arc_ell(phi, sys_)[0]
    summary = {"side": side, "arc": args.arc, "slope": fit.slope, "r2": fit.r_squared,
               "samples": fit.samples, "exact_ell": None if exact is None else fmt_exponent(exact)}
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["y", "D", "E", "logD", "logE"])
            for row in fit.rows:
                w.writerow([repr(v) for v in row])
    if args.json:
        _emit(out, summary, True)
    else:
        _emit(out, f"slope = {fit.slope:.4f}  r2 = {fit.r_squared:.5f}  samples = {fit.samples}  "
                   f"exact ell = {summary['exact_ell']}", False)


def load_schema(name: str) -> dict:
    """Shipped JSON schema for the ``exponent``, ``roots``, ``polygon`` or ``oracle`` output."""
    from importlib.resources import files
    return json.loads(files("lojasiewicz").joinpath(f"schemas/{name}.schema.json").read_text())


COMMANDS = {"exponent": cmd_exponent, "roots": cmd_roots, "polygon": cmd_polygon,
            "slide": cmd_slide, "bound": cmd_bound, "oracle": cmd_oracle}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        config = make_config(args)
        COMMANDS[args.command](args, config, out)
    except UnsupportedAlgebraicCoefficient as exc:
        hint = "" if "--mode approx" in str(exc) else "\nhint: rerun with --mode approx"
        err.write(f"error: {exc}{hint}\n")
        return EXIT_UNSUPPORTED
    except (NotReduced, DoesNotVanishAtOrigin, IndeterminateRatio) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_MATH
    except BudgetExhausted as exc:
        err.write(f"error: {exc}\nhint: raise --budget\n")
        return EXIT_BUDGET
    except (PolySyntaxError, ZeroPolynomial, DegenerateFit, LojasiewiczError, ValueError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
