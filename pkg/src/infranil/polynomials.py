"""Exact univariate polynomial arithmetic over Q and Z.

Coefficients are stored ascending (index i holds the coefficient of x^i),
with trailing zeros stripped, so the zero polynomial has an empty
coefficient tuple and degree -1.  Everything here is exact: QPoly uses
`fractions.Fraction`, IntPoly uses Python ints.

The module also provides the real-root machinery (Sturm chains, root
isolation) and complete factorization over Q for the small degrees this
package needs (irreducible pieces of degree <= 3 occur naturally; a
Kronecker-style bounded search covers composite residues up to degree 16).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isinf

from .errors import InfranilError

Rational = Fraction  # arbitrary-precision rational scalar used across the package


def _strip(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class QPoly:
    """Polynomial with Fraction coefficients, ascending degree."""

    coeffs: tuple

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    @staticmethod
    def const(c) -> "QPoly":
        return QPoly([Fraction(c)])

    @staticmethod
    def x() -> "QPoly":
        return QPoly([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise InfranilError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        if len(rem) - 1 < d:
            return QPoly(), self
        quo = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            if c:
                quo[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return QPoly(quo), QPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return QPoly([c / lead for c in self.coeffs])

    def subs_neg_x(self) -> "QPoly":
        """The polynomial p(-x)."""
        return QPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def shift_mul_x(self, m: int = 1) -> "QPoly":
        """Multiply by x^m."""
        if self.is_zero():
            return self
        return QPoly([Fraction(0)] * m + list(self.coeffs))

    def gcd(self, other: "QPoly") -> "QPoly":
        """Monic gcd over Q."""
        a, b = self, _coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "QPoly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def to_int(self) -> tuple["IntPoly", Fraction]:
        """Split into (primitive integer polynomial with positive leading
        coefficient, rational content) so that content * primitive == self."""
        if self.is_zero():
            return IntPoly(()), Fraction(0)
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        sign = -1 if ints[-1] < 0 else 1
        prim = IntPoly([v // (sign * g) for v in ints])
        return prim, Fraction(sign * g, den)

    def __str__(self):
        return _poly_str(self.coeffs)

    __repr__ = __str__


def _coerce(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, IntPoly):
        return value.to_qpoly()
    if isinstance(value, (int, Fraction)):
        return QPoly([value])
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, ascending degree."""

    coeffs: tuple

    def __init__(self, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise InfranilError(f"non-integer coefficient {c} in IntPoly")
                c = c.numerator
            vals.append(int(c))
        object.__setattr__(self, "coeffs", _strip(vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero():
            raise InfranilError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def content(self) -> int:
        """gcd of the coefficients (non-negative; 0 only for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def is_primitive(self) -> bool:
        return self.content() == 1

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def subs_neg_x(self) -> "IntPoly":
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def to_qpoly(self) -> QPoly:
        return QPoly(self.coeffs)

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __str__(self):
        return _poly_str(self.coeffs)

    __repr__ = __str__


def _poly_str(coeffs, var: str = "z") -> str:
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        term = f"{mag}{var}" if i == 1 else f"{mag}{var}^{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Sturm chains and real-root counting/isolation
# ---------------------------------------------------------------------------


def _sturm_chain(p: QPoly):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_at(p: QPoly, x) -> int:
    """Sign of p at a finite rational x or at +/- infinity (float inf)."""
    if p.is_zero():
        return 0
    if isinstance(x, float) and isinf(x):
        lead = p.leading()
        if x > 0:
            return 1 if lead > 0 else -1
        s = 1 if lead > 0 else -1
        return s if p.degree % 2 == 0 else -s
    v = p(x)
    return (v > 0) - (v < 0)


def _variations(chain, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(poly: QPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of `poly` in the open interval (lo, hi).

    `lo`/`hi` may be rationals, None, or +/-float('inf'); None means
    unbounded on that side.  Multiplicities are ignored (the squarefree part
    is used), matching the convention that callers account for them via
    squarefree decomposition.
    """
    if poly.is_zero():
        raise InfranilError("sturm_count of the zero polynomial")
    if poly.degree == 0:
        return 0
    lo = float("-inf") if lo is None else lo
    hi = float("inf") if hi is None else hi
    if not isinstance(lo, float):
        lo = Fraction(lo)
    if not isinstance(hi, float):
        hi = Fraction(hi)
    sf = poly.squarefree_part()
    chain = _sturm_chain(sf)
    count = _variations(chain, lo) - _variations(chain, hi)
    # V(lo) - V(hi) counts roots in (lo, hi]; make the right end open.
    if not (isinstance(hi, float) and isinf(hi)) and sf(hi) == 0:
        count -= 1
    return count


def root_bound(poly: QPoly) -> Fraction:
    """Cauchy bound: every real root lies in (-B, B)."""
    lead = abs(poly.leading())
    m = max((abs(c) for c in poly.coeffs[:-1]), default=Fraction(0))
    return Fraction(1) + m / lead


def isolate_real_roots(poly: QPoly) -> list:
    """Disjoint open intervals (lo, hi), each containing exactly one distinct
    real root of `poly`, in increasing order.  Rational roots may be returned
    as degenerate intervals (r, r)."""
    sf = poly.squarefree_part()
    if sf.degree <= 0:
        return []
    chain = _sturm_chain(sf)

    def count_open(a, b):
        c = _variations(chain, a) - _variations(chain, b)
        if sf(b) == 0:
            c -= 1
        return c

    bound = root_bound(sf)
    out = []
    stack = [(-bound, bound, count_open(-bound, bound))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1 and sf(lo) != 0 and sf(hi) != 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if sf(mid) == 0:
            out.append((mid, mid))
            eps = (hi - lo) / 4
            while sturm_count(sf, mid - eps, mid + eps) > 1:
                eps /= 2
            stack.append((lo, mid - eps, count_open(lo, mid - eps)))
            stack.append((mid + eps, hi, count_open(mid + eps, hi)))
        else:
            stack.append((lo, mid, count_open(lo, mid)))
            stack.append((mid, hi, count_open(mid, hi)))
    return sorted(out)


def refine_root(poly: QPoly, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink an isolating interval of a simple root by sign-change bisection
    until hi - lo < width.  Degenerate (exact) intervals pass through."""
    if lo == hi:
        return lo, hi
    sf = poly.squarefree_part()
    slo = _sign_at(sf, lo)
    shi = _sign_at(sf, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise InfranilError("interval endpoints do not bracket a simple root")
    while hi - lo >= width:
        mid = (lo + hi) / 2
        sm = _sign_at(sf, mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# Factorization over Q
# ---------------------------------------------------------------------------


def _yun_squarefree(p: QPoly) -> list:
    """Yun's algorithm: [(g1, 1), (g2, 2), ...] with p = lc * prod gi^i,
    each gi monic squarefree, pairwise coprime."""
    p = p.monic()
    dp = p.derivative()
    g = p.gcd(dp)
    out = []
    if g.degree == 0:
        return [(p, 1)]
    w = p // g
    y = dp // g
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        h = w.gcd(z)
        if h.degree > 0:
            out.append((h.monic(), i))
        w = w // h
        y = z // h
        i += 1
    return out


def _divisors(n: int) -> list:
    """All positive divisors of |n| (n != 0), by trial division."""
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(p: IntPoly) -> list:
    """All rational roots of a squarefree integer polynomial with p(0) != 0."""
    roots = []
    for num in _divisors(p.constant()):
        for den in _divisors(p.leading()):
            if gcd(num, den) != 1:
                continue
            for r in (Fraction(num, den), Fraction(-num, den)):
                if p(r) == 0:
                    roots.append(r)
    return roots


def _int_divmod(p: IntPoly, q: IntPoly):
    quo, rem = divmod(p.to_qpoly(), q.to_qpoly())
    if not rem.is_zero():
        return None
    prim, content = quo.to_int()
    if content.denominator != 1:
        return None
    return IntPoly([c * int(content) for c in prim.coeffs])


def _interpolate(points: list) -> QPoly:
    """Lagrange interpolation through (x, y) rational pairs."""
    total = QPoly()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        term = QPoly([yi])
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = term * QPoly([-xj, 1]) * Fraction(1, xi - xj)
        total = total + term
    return total


def _kronecker_factor(p: IntPoly, max_deg: int):
    """Search for a nontrivial factor of degree 2..max_deg by divisor
    interpolation (Kronecker).  `p` is squarefree, primitive, has no
    rational roots and p(0) != 0.  Returns a factor or None."""
    for d in range(2, max_deg + 1):
        xs = []
        x = 0
        while len(xs) < d + 1:
            if p(x) != 0:
                xs.append(x)
            x = -x if x > 0 else -x + 1  # 0, 1, -1, 2, -2, ...
        value_choices = []
        for x in xs:
            divs = _divisors(p(x))
            value_choices.append([v for dd in divs for v in (dd, -dd)])
        for combo in itertools.product(*value_choices):
            cand = _interpolate(list(zip(xs, combo)))
            if cand.degree != d:
                continue
            ip, content = cand.to_int()
            if content.denominator != 1:
                continue
            q = _int_divmod(p, ip)
            if q is not None:
                return ip
    return None


def _factor_squarefree(p: IntPoly) -> list:
    """Irreducible factors of a squarefree primitive integer polynomial with
    positive leading coefficient; no multiplicities (all are 1)."""
    out = []
    # x^v factor
    v = 0
    while v < len(p.coeffs) and p.coeffs[v] == 0:
        v += 1
    if v:
        out.append(IntPoly([0, 1]))
        p = IntPoly(p.coeffs[v:])
    work = p
    for r in _rational_roots(work):
        lin = IntPoly([-r.numerator, r.denominator])
        work = _int_divmod(work, lin)
        out.append(lin)
    while work.degree >= 2:
        if work.degree <= 3:
            # no rational roots left, so quadratics and cubics are irreducible
            out.append(work)
            break
        fac = _kronecker_factor(work, work.degree // 2)
        if fac is None:
            out.append(work)
            break
        out.append(fac)
        work = _int_divmod(work, fac)
    return out


def factor_over_q(poly: IntPoly) -> list:
    """Complete factorization over Q into primitive irreducible integer
    polynomials with positive leading coefficients.

    Returns [(factor, multiplicity), ...].  The product of the factors with
    multiplicity, times the signed content of the input, reproduces the input
    exactly (asserted here).
    """
    if isinstance(poly, QPoly):
        poly = poly.to_int()[0]
    if poly.is_zero():
        raise InfranilError("cannot factor the zero polynomial")
    if poly.degree > 16:
        raise InfranilError("factor_over_q supports degree <= 16")
    if poly.degree == 0:
        return []
    prim, _ = poly.to_qpoly().to_int()
    out = []
    for sf, mult in _yun_squarefree(prim.to_qpoly()):
        sf_int, _ = sf.to_int()
        for fac in _factor_squarefree(sf_int):
            out.append((fac, mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    check = IntPoly([1])
    for fac, mult in out:
        for _ in range(mult):
            check = check * fac
    sign = -1 if poly.leading() < 0 else 1
    assert check == prim and IntPoly([c * sign * poly.content() for c in prim.coeffs]) == poly, (
        "factorization does not reproduce the input"
    )
    return out
