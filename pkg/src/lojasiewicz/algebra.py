"""Exact and approximate coefficient fields, polynomials, gcd and root finding.

Two coefficient fields are provided.  ``ExactField`` works over the Gaussian
rationals Q(i); ``ApproxField`` works with mpmath complex numbers at a fixed
binary precision, and every predicate (zero, real, equal) goes through one
absolute tolerance.  Code that manipulates series coefficients never compares
them directly: it asks the field.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from itertools import count

import mpmath
from mpmath.ctx_mp import MPContext

from .errors import UnsupportedAlgebraicCoefficient, ZeroPolynomial


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or int")
    return Fraction(value)


class GaussianRational:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*i)"


# ---------------------------------------------------------------------------
# univariate helpers; coefficient lists are indexed by degree (low -> high)

def horner(coeffs, z):
    acc = 0 * z
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def derivative(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def deflate(coeffs, root):
    """Divide by (z - root); the remainder is discarded."""
    n = len(coeffs) - 1
    out = [None] * n
    acc = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k] = acc
        acc = coeffs[k] + acc * root
    return out


def aberth(coeffs, ctx, tol, maxiter=500, init=None):
    """Simultaneous Aberth-Ehrlich iteration for all roots of ``coeffs``.

    ``coeffs`` are ctx numbers, low degree first, leading coefficient nonzero.
    ``init`` optionally supplies starting approximations (warm start).
    """
    n = len(coeffs) - 1
    if n < 1:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    if n == 1:
        return [-monic[0]]
    dmonic = derivative(monic)
    if init is not None and len(init) == n:
        z = [ctx.mpc(w) for w in init]
        # coincident starting points stall the correction term
        for i in range(n):
            for j in range(i):
                if z[i] == z[j]:
                    z[i] += ctx.mpc(0, 1) * ctx.mpf(2) ** (-ctx.prec // 3) * (i + 1)
    else:
        radius = 1 + max(abs(c) for c in monic[:-1])
        # Fujiwara-type bound keeps the start circle near the root annulus
        bound = 2 * max(abs(monic[n - k]) ** (ctx.mpf(1) / k) for k in range(1, n + 1))
        radius = min(radius, bound) if bound > 0 else radius
        offset = ctx.mpf("0.4")
        z = [radius * ctx.expj(2 * ctx.pi * k / n + offset) for k in range(n)]
    for _ in range(maxiter):
        worst = 0
        for i in range(n):
            zi = z[i]
            p = horner(monic, zi)
            if p == 0:
                continue
            dp = horner(dmonic, zi)
            s = 0
            for j in range(n):
                if j != i:
                    diff = zi - z[j]
                    if diff != 0:
                        s += 1 / diff
            ratio = p / dp if dp != 0 else p
            denom = 1 - ratio * s
            w = ratio / denom if denom != 0 else ratio
            z[i] = zi - w
            rel = abs(w) / max(1, abs(z[i]))
            if rel > worst:
                worst = rel
        if worst <= tol:
            break
    return z


class ExactField:
    """Gaussian rationals Q(i); predicates are exact."""

    mode = "exact"
    tol = 0

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    def complex(self, re, im):
        return GaussianRational(re, im)

    @property
    def zero(self):
        return GaussianRational(0)

    @property
    def one(self):
        return GaussianRational(1)

    def is_zero(self, c) -> bool:
        return not c

    def is_real(self, c) -> bool:
        return c.im == 0

    def eq(self, a, b) -> bool:
        return a == b

    def conj(self, c):
        return c.conjugate()

    def real_part(self, c):
        return GaussianRational(c.re)

    def sort_key(self, c):
        return (c.re, c.im)

    def parts(self, c) -> tuple[str, str]:
        return str(c.re), str(c.im)

    def to_mpc(self, c, ctx=mpmath.mp):
        return ctx.mpc(ctx.mpf(c.re.numerator) / c.re.denominator,
                       ctx.mpf(c.im.numerator) / c.im.denominator)

    def roots(self, coeffs):
        """Roots in Q(i) with multiplicities, or UnsupportedAlgebraicCoefficient."""
        return _exact_roots([self.coerce(c) for c in coeffs])

    def __repr__(self):
        return "ExactField()"


EXACT = ExactField()


class ApproxField:
    """Complex big-floats at ``prec`` bits with absolute tolerance ``tol``."""

    mode = "approx"

    def __init__(self, prec: int = 128, tol: float = 1e-30):
        if prec < 64:
            raise ValueError("approx mode needs at least 64 bits of precision")
        self.prec = prec
        self.ctx = MPContext()
        self.ctx.prec = prec
        self.tol = self.ctx.mpf(tol)

    def coerce(self, value):
        ctx = self.ctx
        if isinstance(value, GaussianRational):
            return ctx.mpc(ctx.mpf(value.re.numerator) / value.re.denominator,
                           ctx.mpf(value.im.numerator) / value.im.denominator)
        if isinstance(value, Fraction):
            return ctx.mpc(ctx.mpf(value.numerator) / value.denominator)
        return ctx.mpc(value)

    def complex(self, re, im):
        return self.coerce(GaussianRational(re, im))

    @property
    def zero(self):
        return self.ctx.mpc(0)

    @property
    def one(self):
        return self.ctx.mpc(1)

    def is_zero(self, c) -> bool:
        return abs(c) <= self.tol

    def is_real(self, c) -> bool:
        return abs(c.imag) <= self.tol

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.tol

    def conj(self, c):
        return self.ctx.conj(c)

    def real_part(self, c):
        return self.ctx.mpc(c.real)

    def sort_key(self, c):
        return (round(float(c.real), 12), round(float(c.imag), 12))

    def parts(self, c) -> tuple[str, str]:
        return (self.ctx.nstr(c.real, 20), self.ctx.nstr(c.imag, 20))

    def to_mpc(self, c, ctx=mpmath.mp):
        return ctx.mpc(c)

    def roots(self, coeffs):
        """Clustered numerical roots with multiplicities.

        Roots of a real polynomial are returned in exactly conjugate pairs,
        real roots with imaginary part exactly zero.
        """
        coeffs = [self.coerce(c) for c in coeffs]
        while coeffs and self.is_zero(coeffs[-1]):
            coeffs.pop()
        n = len(coeffs) - 1
        if n < 1:
            raise ValueError("uniroots needs degree >= 1")
        ctx = self.ctx
        with ctx.workprec(self.prec * 2):
            raw = aberth(coeffs, ctx, ctx.mpf(2) ** (-self.prec), maxiter=2000)
            clusters = _cluster(raw, self.tol, ctx)
            real_poly = all(self.is_real(c) for c in coeffs)
            result = []
            for centre, members in clusters:
                m = len(members)
                centre = _polish(coeffs, centre, m, ctx)
                result.append([centre, m])
            if real_poly:
                _symmetrize(result, self.tol, n, ctx)
        return [(+ctx.mpc(r), m) for r, m in result]

    def __repr__(self):
        return f"ApproxField(prec={self.prec}, tol={mpmath.nstr(self.tol, 3)})"


def _cluster(points, tol, ctx):
    """Merge numerical roots whose spread is explained by multiplicity.

    A perturbation of size tol splits an m-fold root into a ring of radius
    about tol**(1/m); two groups merge when their centres are that close.
    """
    groups = [[p] for p in points]
    merged = True
    while merged:
        merged = False
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                ga, gb = groups[a], groups[b]
                ca = sum(ga) / len(ga)
                cb = sum(gb) / len(gb)
                m = len(ga) + len(gb)
                scale = max(1, abs(ca), abs(cb))
                if abs(ca - cb) <= 4 * scale * tol ** (ctx.mpf(1) / m):
                    groups[a] = ga + gb
                    del groups[b]
                    merged = True
                    break
            if merged:
                break
    return [(sum(g) / len(g), g) for g in groups]


def _polish(coeffs, z, m, ctx, steps=8):
    """Newton on the (m-1)-th derivative, where an m-fold root is simple."""
    p = list(coeffs)
    for _ in range(m - 1):
        p = derivative(p)
    dp = derivative(p)
    if not dp:
        return z
    for _ in range(steps):
        d = horner(dp, z)
        if d == 0:
            break
        step = horner(p, z) / d
        z = z - step
        if abs(step) <= ctx.mpf(2) ** (-ctx.prec) * max(1, abs(z)):
            break
    return z


def _symmetrize(result, tol, n, ctx):
    for entry in result:
        z, m = entry
        if abs(z.imag) <= 4 * max(1, abs(z)) * tol ** (ctx.mpf(1) / max(m, 1)) or abs(z.imag) <= tol:
            entry[0] = ctx.mpc(z.real)
    upper = [e for e in result if e[0].imag > 0]
    lower = [e for e in result if e[0].imag < 0]
    used = set()
    for e in upper:
        best = None
        for k, f in enumerate(lower):
            if k in used or f[1] != e[1]:
                continue
            d = abs(f[0] - ctx.conj(e[0]))
            if best is None or d < best[0]:
                best = (d, k)
        if best is not None:
            used.add(best[1])
            f = lower[best[1]]
            avg = (e[0] + ctx.conj(f[0])) / 2
            e[0] = avg
            f[0] = ctx.conj(avg)


def _gauss_round(z, ctx):
    return GaussianRational(int(ctx.nint(z.real)), int(ctx.nint(z.imag)))


def _udivmod(a, b):
    """Quotient and remainder of exact univariate polynomials (low degree first)."""
    a = list(a)
    q = [GaussianRational(0)] * max(len(a) - len(b) + 1, 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = a[k + j] - c * bj
    r = a[:len(b) - 1]
    while r and not r[-1]:
        r.pop()
    return q, r


def _ugcd(a, b):
    while b:
        a, b = b, _udivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _simple_roots(q):
    """Roots in Q(i) of a square-free polynomial; the rest stays undeflated."""
    if len(q) == 2:
        return [-q[0] / q[1]], [q[-1]]
    denom = reduce(math.lcm, (c.re.denominator for c in q), 1)
    denom = reduce(math.lcm, (c.im.denominator for c in q), denom)
    ints = [c * denom for c in q]
    lead = ints[-1]
    ctx = MPContext()
    bits = max(max(int(abs(c.re)).bit_length(), int(abs(c.im)).bit_length()) for c in ints)
    ctx.prec = 128 + 4 * bits
    numeric = aberth([ctx.mpc(int(c.re), int(c.im)) for c in ints], ctx,
                     ctx.mpf(2) ** (-ctx.prec // 2), maxiter=1000)
    lead_c = ctx.mpc(int(lead.re), int(lead.im))
    found, remaining = [], list(ints)
    for z in numeric:
        # lead * root is a Gaussian integer for every root in Q(i)
        candidate = _gauss_round(lead_c * z, ctx) / lead
        if len(remaining) > 1 and not horner(remaining, candidate):
            remaining = deflate(remaining, candidate)
            found.append(candidate)
    return found, remaining


def _exact_roots(coeffs):
    coeffs = [GaussianRational._coerce(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("uniroots needs degree >= 1")
    roots: dict[GaussianRational, int] = {}
    remaining = list(coeffs)
    while len(remaining) > 1 and not remaining[0]:
        remaining = remaining[1:]
        roots[GaussianRational(0)] = roots.get(GaussianRational(0), 0) + 1
    if len(remaining) > 1:
        g = _ugcd(remaining, derivative(remaining))
        square_free = _udivmod(remaining, g)[0] if len(g) > 1 else remaining
        found, rest = _simple_roots(square_free)
        if len(rest) > 1:
            raise UnsupportedAlgebraicCoefficient(
                f"a factor of degree {len(rest) - 1} has no roots in Q(i); "
                "rerun with --mode approx",
                poly=[str(c) for c in coeffs])
        for r in found:
            while len(remaining) > 1 and not horner(remaining, r):
                remaining = deflate(remaining, r)
                roots[r] = roots.get(r, 0) + 1
    return sorted(roots.items(), key=lambda item: (item[0].re, item[0].im))


def uniroots(coeffs, field=EXACT):
    """All complex roots of a univariate polynomial with multiplicity."""
    return field.roots(coeffs)


# ---------------------------------------------------------------------------
# bivariate polynomials over Q

class BiPoly:
    """Polynomial in x, y with rational coefficients.

    ``terms`` maps (i, j) to the nonzero coefficient of x**i * y**j.
    Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def scale(self, c) -> "BiPoly":
        c = as_fraction(c)
        return BiPoly({k: v * c for k, v in self.terms.items()})

    def diff_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j})

    def __call__(self, x, y):
        return sum((c * x ** i * y ** j for (i, j), c in self.terms.items()), 0 * x)

    def coeffs_in_x(self, y) -> list:
        """Coefficients of f(., y) as a polynomial in x, low degree first."""
        out = [0 * y] * (self.degree_x() + 1)
        for (i, j), c in self.terms.items():
            out[i] = out[i] + c * y ** j
        return out

    def leading_term(self):
        """Largest (i, j) in lex order, x before y."""
        return max(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = "*".join([str(mag)] + mono)
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BiPoly({str(self)!r})"

    # --- operations with a geometric meaning

    def shear(self, lam) -> "BiPoly":
        """f(x, y + lam*x)."""
        lam = as_fraction(lam)
        if lam == 0:
            return self
        out = BiPoly()
        sub = BiPoly.y() + BiPoly.x().scale(lam)
        powers = [BiPoly.const(1)]
        for _ in range(self.degree_y()):
            powers.append(powers[-1] * sub)
        out_terms: dict = {}
        for (i, j), c in self.terms.items():
            for (a, b), d in powers[j].terms.items():
                key = (a + i, b)
                out_terms[key] = out_terms.get(key, 0) + c * d
        out = BiPoly(out_terms)
        return out

    def reflect(self) -> "BiPoly":
        """f(x, -y)."""
        return BiPoly({(i, j): (-c if j % 2 else c) for (i, j), c in self.terms.items()})


def homogeneous_component(f: BiPoly, k: int) -> BiPoly:
    return BiPoly({(i, j): c for (i, j), c in f.terms.items() if i + j == k})


def mini_order(f: BiPoly) -> tuple[int, bool]:
    """Order m of the lowest homogeneous part and whether f_m(1, 0) != 0."""
    if f.is_zero():
        raise ZeroPolynomial("mini_order of the zero polynomial")
    m = min(i + j for i, j in f.terms)
    return m, (m, 0) in f.terms


def shear(f: BiPoly, lam) -> BiPoly:
    return f.shear(lam)


def shear_candidates():
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)


def find_common_shear(f: BiPoly, g: BiPoly) -> Fraction:
    """First lambda in 0, 1, -1, 2, -2, ... making both inputs mini-regular in x."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("find_common_shear needs nonzero inputs")
    for lam in shear_candidates():
        # the x^m coefficient of the sheared lowest form is f_m(1, lam)
        if all(_lowest_form_at(p, lam) != 0 for p in (f, g)):
            return lam
    raise AssertionError("unreachable")


def _lowest_form_at(f: BiPoly, lam: Fraction) -> Fraction:
    m, _ = mini_order(f)
    return sum((c * lam ** j for (i, j), c in f.terms.items() if i + j == m), Fraction(0))


# --- Q[y] arithmetic, lists low degree first

def _ytrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _ymul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ytrim(out)


def _ysub(a, b):
    n = max(len(a), len(b))
    return _ytrim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _ydivmod(a, b):
    a = _ytrim(a)
    b = _ytrim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        a = _ytrim([a[k] - (factor * b[k - shift] if 0 <= k - shift < len(b) else 0)
                    for k in range(len(a))])
    return _ytrim(q), a


def _ygcd(a, b):
    a, b = _ytrim(a), _ytrim(b)
    while b:
        _, r = _ydivmod(a, b)
        a, b = b, r
    if not a:
        return []
    return [c / a[-1] for c in a]


def _as_x_poly(f: BiPoly):
    """f as a list over x-degree of Q[y] coefficient lists."""
    out = [[] for _ in range(f.degree_x() + 1)]
    for (i, j), c in f.terms.items():
        row = out[i]
        if len(row) <= j:
            row.extend([Fraction(0)] * (j + 1 - len(row)))
        row[j] += c
    return [_ytrim(r) for r in out]


def _from_x_poly(rows) -> BiPoly:
    return BiPoly({(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row)})


def _xtrim(rows):
    rows = list(rows)
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _content(rows):
    return reduce(_ygcd, (r for r in rows if r), [])


def _primitive(rows):
    cont = _content(rows)
    if not cont:
        return rows
    return [_ydivmod(r, cont)[0] if r else [] for r in rows]


def _prem(a, b):
    """Pseudo-remainder of a by b in Q[y][x]."""
    a = _xtrim(a)
    b = _xtrim(b)
    lb = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        la = a[-1]
        new = [_ymul(r, lb) for r in a]
        for k, rb in enumerate(b):
            new[k + shift] = _ysub(new[k + shift], _ymul(rb, la))
        a = _xtrim(new)
    return a


def normalize(f: BiPoly) -> BiPoly:
    """Integer coefficients with gcd 1 and positive lex-leading coefficient."""
    if f.is_zero():
        return f
    denom = reduce(math.lcm, (c.denominator for c in f.terms.values()), 1)
    ints = [int(c * denom) for c in f.terms.values()]
    g = reduce(math.gcd, ints, 0)
    scale = Fraction(denom, g)
    if f.terms[f.leading_term()] < 0:
        scale = -scale
    return f.scale(scale)


def gcd_bipoly(f: BiPoly, g: BiPoly) -> BiPoly:
    """Greatest common divisor by primitive pseudo-remainder sequences in x."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("gcd_bipoly needs nonzero inputs")
    a, b = _as_x_poly(f), _as_x_poly(g)
    ca, cb = _content(a), _content(b)
    cont = _ygcd(ca, cb)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    if b:
        # b is a nonzero constant in x; its primitive part is 1
        a = [[Fraction(1)]]
    result = [_ymul(r, cont) for r in a]
    return normalize(_from_x_poly(result))


def divide_exact(f: BiPoly, h: BiPoly) -> BiPoly:
    """Quotient f / h; raises ValueError if h does not divide f."""
    if h.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lt = h.leading_term()
    lc = h.terms[lt]
    quotient: dict = {}
    rem = f
    while not rem.is_zero():
        i, j = rem.leading_term()
        if i < lt[0] or j < lt[1]:
            raise ValueError(f"{h} does not divide {f}")
        mono = BiPoly({(i - lt[0], j - lt[1]): rem.terms[(i, j)] / lc})
        quotient[(i - lt[0], j - lt[1])] = rem.terms[(i, j)] / lc
        rem = rem - mono * h
    return BiPoly(quotient)


def is_reduced(f: BiPoly) -> bool:
    """Square-free test: gcd(f, df/dx, df/dy) must be constant."""
    if f.is_zero():
        raise ZeroPolynomial("is_reduced of the zero polynomial")
    if f.is_constant():
        return True
    common = f
    for d in (f.diff_x(), f.diff_y()):
        if d.is_zero():
            continue
        common = gcd_bipoly(common, d)
        if common.is_constant():
            return True
    return common.is_constant()
