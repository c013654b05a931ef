"""Truncated Puiseux series x = phi(y), substitution and arc approximations.

A series stores finitely many terms ``c * y**e`` with rational exponents and a
truncation exponent ``trunc``: every coefficient at an exponent ``<= trunc``
is known exactly (absent terms are zero), nothing is known above it.  Exact
roots and user-supplied arcs have ``trunc = INF``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce
from math import comb

from .algebra import EXACT, BiPoly
from .errors import IdenticalSeries, NonRealPrefix, TruncationTooShallow

INF = math.inf


def fmt_exponent(e) -> str:
    return "inf" if e == INF else str(e)


@dataclass(frozen=True)
class PuiseuxSeries:
    terms: tuple = ()
    trunc: Fraction | float = INF

    @classmethod
    def from_terms(cls, pairs, trunc=INF, field=EXACT) -> "PuiseuxSeries":
        """Build from (exponent, coefficient) pairs; zero coefficients vanish."""
        acc: dict = {}
        for e, c in pairs:
            e = Fraction(e)
            acc[e] = acc[e] + field.coerce(c) if e in acc else field.coerce(c)
        kept = tuple(sorted(((e, c) for e, c in acc.items() if not field.is_zero(c)),
                            key=lambda t: t[0]))
        if any(e > trunc for e, _ in kept):
            raise ValueError("terms above the truncation order")
        return cls(kept, trunc)

    @classmethod
    def zero(cls, trunc=INF) -> "PuiseuxSeries":
        return cls((), trunc)

    @property
    def exponents(self) -> tuple:
        return tuple(e for e, _ in self.terms)

    @property
    def ram_index(self) -> int:
        return reduce(math.lcm, (e.denominator for e, _ in self.terms), 1)

    def coefficient(self, e, field=EXACT):
        for ex, c in self.terms:
            if ex == e:
                return c
        if e > self.trunc:
            raise TruncationTooShallow(f"coefficient at {e} is beyond truncation {self.trunc}")
        return field.zero

    def extend(self, e, c, trunc=None) -> "PuiseuxSeries":
        """Append c*y**e above every stored term; new truncation defaults to e."""
        if self.terms and e <= self.terms[-1][0]:
            raise ValueError("terms must be appended in increasing exponent order")
        return PuiseuxSeries(self.terms + ((Fraction(e), c),), e if trunc is None else trunc)

    def plus_term(self, e, c, field=EXACT) -> "PuiseuxSeries":
        """Exact series self + c*y**e; terms cancelling to zero are dropped."""
        return PuiseuxSeries.from_terms(self.terms + ((Fraction(e), c),), self.trunc, field)

    def with_trunc(self, trunc) -> "PuiseuxSeries":
        return PuiseuxSeries(self.terms, trunc)

    def below(self, rho) -> tuple:
        return tuple((e, c) for e, c in self.terms if e < rho)

    def conjugate(self, field=EXACT) -> "PuiseuxSeries":
        return PuiseuxSeries(tuple((e, field.conj(c)) for e, c in self.terms), self.trunc)

    def is_real(self, field=EXACT) -> bool:
        return all(field.is_real(c) for _, c in self.terms)

    def evaluate(self, y, convert=complex):
        """Numeric value at y > 0 with y**e taken real positive."""
        return sum((convert(c) * y ** e for e, c in self.terms), 0 * y)

    def render(self, field=EXACT) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            re, im = field.parts(c)
            coeff = re if im in ("0", "0.0") else f"({re} + {im}*i)"
            parts.append(f"{coeff}*y^({e})")
        return " + ".join(parts)


def ord_(phi: PuiseuxSeries):
    """Order of the first term; INF for the zero series."""
    return phi.terms[0][0] if phi.terms else INF


def ord_diff(phi: PuiseuxSeries, psi: PuiseuxSeries, field=EXACT):
    """Exponent of the first term where two series differ."""
    limit = min(phi.trunc, psi.trunc)
    a = dict(phi.terms)
    b = dict(psi.terms)
    for e in sorted(set(a) | set(b)):
        if e > limit:
            break
        ca = a.get(e, field.zero)
        cb = b.get(e, field.zero)
        if not field.eq(ca, cb):
            return e
    if limit == INF:
        return INF
    raise TruncationTooShallow(f"series agree through the common truncation {limit}")


@dataclass(frozen=True)
class ArcPoly:
    """M(X, Y) = f(X + phi(Y), Y) as {(i, q): coefficient} with q rational."""

    terms: dict = dc_field(default_factory=dict)

    def coefficient_series(self, i: int) -> PuiseuxSeries:
        return PuiseuxSeries(tuple(sorted(((q, c) for (k, q), c in self.terms.items() if k == i),
                                          key=lambda t: t[0])))

    def x_degrees(self) -> list[int]:
        return sorted({i for i, _ in self.terms})


def _series_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out[e] + ca * cb if e in out else ca * cb
    return out


def substitute(f: BiPoly, phi: PuiseuxSeries, field=EXACT) -> ArcPoly:
    """Expand f(X + phi(Y), Y) exactly for the finite arc phi."""
    base = {e: c for e, c in phi.terms}
    powers = [{Fraction(0): field.one}]
    for _ in range(f.degree_x()):
        powers.append(_series_mul(powers[-1], base))
    out: dict = {}
    for (a, b), c in f.terms.items():
        cf = field.coerce(c)
        for k in range(a + 1):
            scale = cf * comb(a, k)
            for e, pc in powers[a - k].items():
                key = (k, e + b)
                val = scale * pc
                out[key] = out[key] + val if key in out else val
    return ArcPoly({k: v for k, v in out.items() if not field.is_zero(v)})


def first_nonreal_exponent(phi: PuiseuxSeries, field=EXACT):
    for e, c in phi.terms:
        if not field.is_real(c):
            return e
    return INF


@dataclass(frozen=True)
class ApproxSeries:
    """A real prefix plus a generic real coefficient at exponent ``rho``."""

    prefix: PuiseuxSeries
    rho: Fraction

    def key(self, field=EXACT):
        return (tuple((e, field.sort_key(c)) for e, c in self.prefix.terms), self.rho)

    def instantiate(self, c, field=EXACT) -> PuiseuxSeries:
        """Materialize the generic coefficient; numeric use only."""
        return PuiseuxSeries(self.prefix.terms + ((self.rho, field.coerce(c)),), INF)

    def render(self, field=EXACT) -> str:
        head = self.prefix.render(field) if self.prefix.terms else ""
        tail = f"g*y^({self.rho})"
        return f"{head} + {tail}" if head else tail


def rho_approximation(phi: PuiseuxSeries, rho, field=EXACT) -> ApproxSeries:
    rho = Fraction(rho)
    if phi.trunc < rho:
        raise TruncationTooShallow(f"series known only through {phi.trunc} < {rho}")
    kept = phi.below(rho)
    for e, c in kept:
        if not field.is_real(c):
            raise NonRealPrefix(f"non-real coefficient at exponent {e} below {rho}")
    prefix = PuiseuxSeries(tuple((e, field.real_part(c)) for e, c in kept), INF)
    return ApproxSeries(prefix, rho)


def real_approximation(phi: PuiseuxSeries, field=EXACT):
    """The real approximation; a real series is returned unchanged."""
    s = first_nonreal_exponent(phi, field)
    if s == INF:
        return phi
    return rho_approximation(phi, s, field)


def pair_approximation(phi1: PuiseuxSeries, phi2: PuiseuxSeries, field=EXACT) -> ApproxSeries:
    rho = ord_diff(phi1, phi2, field)
    if rho == INF:
        raise IdenticalSeries("identical series have no pair approximation")
    return rho_approximation(phi1, rho, field)


def ord_diff_generic(gamma: ApproxSeries, beta: PuiseuxSeries, field=EXACT):
    """ord(gamma - beta) where gamma's coefficient at rho is generic."""
    rho = gamma.rho
    a = dict(gamma.prefix.terms)
    b = dict(beta.terms)
    for e in sorted(set(a) | set(b)):
        if e >= rho:
            break
        if e > beta.trunc:
            break
        if not field.eq(a.get(e, field.zero), b.get(e, field.zero)):
            return e
    if beta.trunc < rho:
        raise TruncationTooShallow(
            f"branch known through {beta.trunc}, generic term sits at {rho}")
    return rho
