"""Shared corpus and random generators for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from lojasiewicz.algebra import BiPoly, is_reduced
from lojasiewicz.parser import parse_poly
from lojasiewicz.puiseux import PuiseuxSeries

X, Y = BiPoly.x(), BiPoly.y()

# (f, g, L, L_plus, L_minus), values checked by hand through the ell formula
# and by the numeric oracle before being frozen here
GOLDEN = [
    ("x", "x - y^2", Fraction(2), Fraction(2), Fraction(2)),
    ("x*(x - y^2)", "x*(x - y^2 - y^3)", Fraction(3, 2), Fraction(3, 2), Fraction(3, 2)),
    ("x^2 - y^3", "x", Fraction(3, 2), Fraction(3, 2), Fraction(1)),
    ("x^2 + y^2", "x", Fraction(1), Fraction(1), Fraction(1)),
    ("x", "x*(x - y^2)", Fraction(1), Fraction(1), Fraction(1)),
    ("y^2 - x^3", "x", Fraction(1), Fraction(1), Fraction(1)),
]

# edge polynomial z^3 - z - 1 at the first fork: no roots in Q(i)
CUBIC_PAIR = ("x^3 - x*y^4 - y^6", "x - y^2")


def golden_polys():
    return [(parse_poly(f), parse_poly(g), L, lp, lm) for f, g, L, lp, lm in GOLDEN]


def _ypoly(rng: random.Random, low: int = 1, high: int = 4) -> BiPoly:
    """Random p(y) with rational coefficients and ord p >= low."""
    out = BiPoly()
    for e in range(low, high + 1):
        if rng.random() < 0.5:
            out = out + BiPoly.const(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2)))) * Y ** e
    return out


def random_factor(rng: random.Random) -> BiPoly:
    """A mini-regular factor whose Puiseux roots have Gaussian rational coefficients."""
    kind = rng.randrange(3)
    p = _ypoly(rng)
    if kind == 0:
        return X - p
    s = Fraction(rng.randint(1, 3), rng.choice((1, 2)))
    k = rng.randint(1, 2)
    sign = rng.choice((1, -1))
    return (X - p) ** 2 - BiPoly.const(sign * s * s) * Y ** (2 * k + 1)


def random_reduced(rng: random.Random, max_degree: int = 6) -> BiPoly:
    """Square-free product of random factors, mini-regular, vanishing at 0."""
    while True:
        f = BiPoly.const(1)
        for _ in range(rng.randint(1, 3)):
            q = random_factor(rng)
            if f.degree_x() + q.degree_x() > 4:
                break
            f = f * q
        if 1 <= f.degree <= max_degree and is_reduced(f):
            return f


def random_arc(rng: random.Random, terms: int | None = None) -> PuiseuxSeries:
    """Real finite arc of order >= 1 with exponents in (1/2)Z."""
    n = rng.randint(0, 3) if terms is None else terms
    exps = sorted(rng.sample([Fraction(k, 2) for k in range(2, 10)], n))
    return PuiseuxSeries.from_terms(
        (e, Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((1, 2)))) for e in exps)
