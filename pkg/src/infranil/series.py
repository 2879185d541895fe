"""Linear-recurrence reconstruction and canonical rational-function products.

A generating series S(z) = sum_{k>=1} c_k z^k built from exact fixed-point
data satisfies a short linear recurrence.  Berlekamp-Massey recovers the
minimal one, and `exponents_from_logderiv` inverts

    S(z) = sum_i e_i * z q_i'(z) / q_i(z)

to the canonical product  prod_i q_i(z)^{e_i}  with integer exponents and
irreducible integer factors normalized to q(0) = 1.  That product is the
zeta function of the sequence, since z (log Z)'(z) = S(z).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ReconstructionError
from .matrices import QMatrix
from .polynomials import IntPoly, QPoly, factor_over_q


def berlekamp_massey_q(seq, bound: int):
    """Minimal rational form of S(z) = sum_{k>=1} seq[k-1] z^k.

    Returns (num, den) with den(0) = 1, deg num <= deg den <= bound, and the
    expansion of num/den reproducing every supplied term (terms beyond the
    2*bound+2 fitting window act as held-out verification).  Raises
    ReconstructionError if the minimal recurrence order exceeds `bound`.
    """
    s = [Fraction(c) for c in seq]
    if len(s) < 2 * bound + 2:
        raise ReconstructionError(
            f"need at least {2 * bound + 2} terms for bound {bound}, got {len(s)}"
        )
    fit = s[: 2 * bound + 2]
    cur = [Fraction(1)]
    prev = [Fraction(1)]
    L = 0
    m = 1
    b = Fraction(1)
    for n, sn in enumerate(fit):
        d = sn + sum(cur[i] * fit[n - i] for i in range(1, L + 1))
        if d == 0:
            m += 1
            continue
        if 2 * L <= n:
            old = cur[:]
            coef = d / b
            cur = cur + [Fraction(0)] * (m + len(prev) - len(cur))
            for i, pv in enumerate(prev):
                cur[m + i] -= coef * pv
            L = n + 1 - L
            prev = old
            b = d
            m = 1
        else:
            coef = d / b
            cur = cur + [Fraction(0)] * max(0, m + len(prev) - len(cur))
            for i, pv in enumerate(prev):
                cur[m + i] -= coef * pv
            m += 1
    if L > bound:
        raise ReconstructionError(f"recurrence order {L} exceeds bound {bound}")
    den = QPoly(cur[: L + 1])
    # num = (S * den) truncated to degree L; S has no constant term
    num_coeffs = [Fraction(0)] * (L + 1)
    for k in range(1, L + 1):
        num_coeffs[k] = s[k - 1] + sum(den[i] * s[k - i - 1] for i in range(1, k))
    num = QPoly(num_coeffs)
    if expand_ratfunc(num, den, len(s)) != s:
        raise ReconstructionError("reconstructed series does not reproduce the data")
    return num, den


def expand_ratfunc(num: QPoly, den: QPoly, nterms: int):
    """Coefficients c_1..c_nterms of num/den as a power series (den(0) != 0)."""
    if den.is_zero() or den[0] == 0:
        raise ReconstructionError("series expansion needs den(0) != 0")
    inv0 = Fraction(1) / den[0]
    out = []
    prev = []  # c_0..c_{k-1}
    c0 = num[0] * inv0
    prev.append(c0)
    for k in range(1, nterms + 1):
        ck = num[k] - sum(den[i] * prev[k - i] for i in range(1, min(k, den.degree) + 1))
        ck *= inv0
        prev.append(ck)
        out.append(ck)
    return out


def _normalize_factor(q: IntPoly) -> IntPoly:
    c0 = q.constant()
    if c0 == 1:
        return q
    if c0 == -1:
        return IntPoly([-c for c in q.coeffs])
    raise ReconstructionError(f"factor {q} cannot be normalized to q(0) = 1")


@dataclass(frozen=True)
class RatFuncProduct:
    """Canonical product prod q_i(z)^{e_i}: q_i irreducible primitive integer
    polynomials with q_i(0) = 1, e_i nonzero integers, factors sorted by
    (degree, coefficients).  The empty product is the constant 1."""

    factors: tuple

    @staticmethod
    def one() -> "RatFuncProduct":
        return RatFuncProduct(())

    @staticmethod
    def from_irreducibles(pairs) -> "RatFuncProduct":
        """Build from (irreducible IntPoly with q(0)=1, exponent) pairs,
        merging duplicates and dropping zero exponents."""
        merged = {}
        for q, e in pairs:
            if q.constant() != 1:
                raise ReconstructionError(f"factor {q} does not satisfy q(0) = 1")
            if q.degree < 1:
                if q.coeffs == (1,):
                    continue
                raise ReconstructionError(f"constant factor {q} is not 1")
            merged[q] = merged.get(q, 0) + int(e)
        items = [(q, e) for q, e in merged.items() if e != 0]
        items.sort(key=lambda fe: fe[0].sort_key())
        return RatFuncProduct(tuple(items))

    @staticmethod
    def from_factors(pairs) -> "RatFuncProduct":
        """Build from arbitrary (polynomial, exponent) pairs.  Every
        polynomial must have constant term 1; each is factored over Q and the
        irreducible pieces are normalized to q(0) = 1."""
        out = []
        for poly, e in pairs:
            if isinstance(poly, IntPoly):
                poly = poly.to_qpoly()
            if poly.is_zero():
                raise ReconstructionError("zero polynomial in a product")
            if poly[0] != 1:
                raise ReconstructionError(f"product factor {poly} has constant term != 1")
            if poly.degree == 0:
                continue
            for q, mult in factor_over_q(poly.to_int()[0]):
                if q.coeffs == (0, 1):
                    raise ReconstructionError("factor divisible by z cannot appear")
                out.append((_normalize_factor(q), mult * int(e)))
        return RatFuncProduct.from_irreducibles(out)

    def is_one(self) -> bool:
        return not self.factors

    def __mul__(self, other: "RatFuncProduct") -> "RatFuncProduct":
        return RatFuncProduct.from_irreducibles(list(self.factors) + list(other.factors))

    def reciprocal(self) -> "RatFuncProduct":
        return RatFuncProduct(tuple((q, -e) for q, e in self.factors))

    def __truediv__(self, other: "RatFuncProduct") -> "RatFuncProduct":
        return self * other.reciprocal()

    def subs_neg_z(self) -> "RatFuncProduct":
        return RatFuncProduct.from_irreducibles(
            (q.subs_neg_x(), e) for q, e in self.factors
        )

    def num_den(self):
        """(numerator, denominator) as integer polynomials."""
        num = IntPoly([1])
        den = IntPoly([1])
        for q, e in self.factors:
            for _ in range(abs(e)):
                if e > 0:
                    num = num * q
                else:
                    den = den * q
        return num, den

    def logderiv_series(self, nterms: int):
        """Coefficients c_1..c_nterms of z * d/dz log(self)."""
        out = [Fraction(0)] * nterms
        for q, e in self.factors:
            qq = q.to_qpoly()
            series = expand_ratfunc(qq.derivative().shift_mul_x(), qq, nterms)
            for i, v in enumerate(series):
                out[i] += e * v
        return out

    def to_json(self):
        return [{"poly": list(q.coeffs), "exp": e} for q, e in self.factors]

    @staticmethod
    def from_json(data) -> "RatFuncProduct":
        return RatFuncProduct.from_irreducibles(
            (IntPoly(item["poly"]), item["exp"]) for item in data
        )

    def __str__(self):
        if not self.factors:
            return "1"
        num, den = self.num_den()
        if den.coeffs == (1,):
            return f"({num})"
        return f"({num}) / ({den})"

    __repr__ = __str__


def rfp_equal(a: RatFuncProduct, b: RatFuncProduct) -> bool:
    """Structural equality of canonical products."""
    return a.factors == b.factors


def rfp_transform(x: RatFuncProduct, op: str) -> RatFuncProduct:
    """Apply `negate-z` (z -> -z) or `reciprocal` to a canonical product."""
    if op == "negate-z":
        return x.subs_neg_z()
    if op == "reciprocal":
        return x.reciprocal()
    raise ValueError(f"unknown transform {op!r}")


def _factor_with_hints(p: IntPoly, hints):
    """Factor p given a list of known irreducible candidate divisors."""
    out = []
    work = p
    if hints:
        seen = set()
        for h in hints:
            if h.coeffs in seen or h.degree < 1:
                continue
            seen.add(h.coeffs)
            while True:
                quo, rem = divmod(work.to_qpoly(), h.to_qpoly())
                if not rem.is_zero():
                    break
                out.append((h, 1))
                work = quo.to_int()[0]
                if work.degree == 0:
                    break
    if work.degree > 0:
        out.extend(factor_over_q(work))
    merged = {}
    for q, m in out:
        merged[q] = merged.get(q, 0) + m
    return list(merged.items())


def exponents_from_logderiv(num: QPoly, den: QPoly, hints=None) -> RatFuncProduct:
    """Invert S = num/den (den(0)=1, den squarefree) to the canonical product
    Z with z (log Z)' = S.  Exponents are solved by exact linear algebra and
    must come out integral; the result is verified by cross-multiplication.

    `hints` may carry irreducible integer polynomials known to divide den
    (e.g. factors of det(I - z Lambda^j D)); they shortcut factorization.
    """
    if den.is_zero() or den[0] != 1:
        raise ReconstructionError("denominator must satisfy den(0) = 1")
    if num.is_zero():
        return RatFuncProduct.one()
    den_int, content = den.to_int()
    if content * Fraction(den_int.constant()) != 1:
        raise ReconstructionError("denominator is not an integer polynomial with den(0) = 1")
    factors = _factor_with_hints(den_int, hints)
    if any(m > 1 for _, m in factors):
        raise ReconstructionError("denominator is not squarefree")
    qs = [_normalize_factor(q) for q, _ in factors]
    # solve sum_i e_i * z q_i' * (den / q_i) = num
    d = den.degree
    cols = []
    for q in qs:
        qq = q.to_qpoly()
        basis = qq.derivative().shift_mul_x() * (den // qq)
        cols.append([basis[k] for k in range(1, d + 1)])
    rhs = QMatrix([[num[k]] for k in range(1, d + 1)])
    mat = QMatrix([[cols[j][k] for j in range(len(qs))] for k in range(d)])
    sol = mat.solve_columns(rhs)
    if sol is None:
        raise ReconstructionError("log-derivative system is inconsistent")
    exps = []
    for i in range(len(qs)):
        e = sol[i, 0]
        if e.denominator != 1:
            raise ReconstructionError(f"non-integer exponent {e} for factor {qs[i]}")
        exps.append(int(e))
    result = RatFuncProduct.from_irreducibles(zip(qs, exps))
    # verify: z (log result)' == num/den exactly
    check_num = QPoly()
    for q, e in result.factors:
        qq = q.to_qpoly()
        check_num = check_num + e * qq.derivative().shift_mul_x() * (den // qq)
    if not (check_num * QPoly([1]) == num or (check_num - num).is_zero()):
        raise ReconstructionError("reconstructed product does not match the series")
    return result
