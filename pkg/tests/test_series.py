import random

import pytest

from infranil.errors import ReconstructionError
from infranil.polynomials import IntPoly, QPoly
from infranil.series import (
    RatFuncProduct,
    berlekamp_massey_q,
    expand_ratfunc,
    exponents_from_logderiv,
    rfp_equal,
    rfp_transform,
)


def geometric_sum(terms, n):
    """c_k = sum of sign * base^k for (sign, base) pairs."""
    return [sum(s * b ** k for s, b in terms) for k in range(1, n + 1)]


def test_bm_power_sequence():
    # c_k = 3^k - 1  ->  S = 2z / ((1-z)(1-3z))
    seq = geometric_sum([(1, 3), (-1, 1)], 20)
    num, den = berlekamp_massey_q(seq, 4)
    assert den == QPoly([1, -4, 3])
    assert num == QPoly([0, 2])
    assert expand_ratfunc(num, den, 30) == geometric_sum([(1, 3), (-1, 1)], 30)


def test_bm_zero_and_geometric():
    num, den = berlekamp_massey_q([0] * 12, 2)
    assert num.is_zero() and den == QPoly([1])
    num, den = berlekamp_massey_q([1] * 12, 2)
    assert (num, den) == (QPoly([0, 1]), QPoly([1, -1]))


def test_bm_bound_violation():
    seq = geometric_sum([(1, 2), (1, 3), (1, 5)], 20)
    with pytest.raises(ReconstructionError):
        berlekamp_massey_q(seq, 2)


def test_bm_needs_enough_terms():
    with pytest.raises(ReconstructionError):
        berlekamp_massey_q([1, 2], 4)


def test_bm_roundtrip_random():
    rng = random.Random(23)
    for _ in range(20):
        terms = [(rng.choice([1, -1]), rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))]
        seq = geometric_sum(terms, 2 * 8 + 12)
        num, den = berlekamp_massey_q(seq, 8)
        assert expand_ratfunc(num, den, len(seq)) == seq


def test_exponents_klein_bottle_shape():
    # c_k = 3^k - 1 -> (1-z)/(1-3z)
    seq = geometric_sum([(1, 3), (-1, 1)], 20)
    num, den = berlekamp_massey_q(seq, 4)
    rfp = exponents_from_logderiv(num, den)
    assert rfp.factors == ((IntPoly([1, -3]), -1), (IntPoly([1, -1]), 1))
    assert str(rfp) == "(1 - z) / (1 - 3*z)"


def test_exponents_zero_series():
    rfp = exponents_from_logderiv(QPoly(), QPoly([1]))
    assert rfp.is_one()


def test_exponents_two_term_difference():
    # c_k = 15^k - 5^k -> (1-5z)/(1-15z)
    seq = geometric_sum([(1, 15), (-1, 5)], 24)
    num, den = berlekamp_massey_q(seq, 4)
    rfp = exponents_from_logderiv(num, den)
    assert rfp == RatFuncProduct.from_factors([(QPoly([1, -5]), 1), (QPoly([1, -15]), -1)])


def test_exponents_with_multiplicity_grouping():
    # c_k = 2 * 2^k: exponent -2 on (1-2z)
    seq = geometric_sum([(1, 2), (1, 2)], 20)
    num, den = berlekamp_massey_q(seq, 4)
    rfp = exponents_from_logderiv(num, den)
    assert rfp.factors == ((IntPoly([1, -2]), -2),)


def test_exponents_non_integer_rejected():
    # c_k = k 2^k has a double pole: not of the product form
    seq = [k * 2 ** k for k in range(1, 21)]
    num, den = berlekamp_massey_q(seq, 4)
    with pytest.raises(ReconstructionError):
        exponents_from_logderiv(num, den)


def test_logderiv_series_roundtrip():
    rfp = RatFuncProduct.from_factors([(QPoly([1, -5]), 1), (QPoly([1, -15]), -1)])
    assert rfp.logderiv_series(6) == geometric_sum([(1, 15), (-1, 5)], 6)


def test_rfp_canonical_and_transforms():
    a = RatFuncProduct.from_factors([(QPoly([1, -4, 3]), 1), (QPoly([1, -1]), -1)])
    # (1-z)(1-3z)/(1-z) = (1-3z)
    assert a.factors == ((IntPoly([1, -3]), 1),)
    neg = rfp_transform(a, "negate-z")
    assert neg.factors == ((IntPoly([1, 3]), 1),)
    assert rfp_equal(rfp_transform(neg, "negate-z"), a)
    rec = rfp_transform(a, "reciprocal")
    assert rec.factors == ((IntPoly([1, -3]), -1),)
    assert rfp_equal(rfp_transform(rec, "reciprocal"), a)
    assert rfp_equal(rfp_transform(RatFuncProduct.one(), "negate-z"), RatFuncProduct.one())


def test_rfp_mul_div():
    a = RatFuncProduct.from_factors([(QPoly([1, -3]), 1), (QPoly([1, -1]), -1)])
    b = RatFuncProduct.from_factors([(QPoly([1, -3]), 1)])
    assert (a / b).factors == ((IntPoly([1, -1]), -1),)
    assert rfp_equal(a / a, RatFuncProduct.one())


def test_rfp_inequality_example():
    a = RatFuncProduct.from_factors([(QPoly([1, -1]), 2), (QPoly([1, -3, 1]), -1)])
    b = rfp_transform(a, "reciprocal")
    assert not rfp_equal(a, b)


def test_rfp_rejects_bad_constant():
    with pytest.raises(ReconstructionError):
        RatFuncProduct.from_factors([(QPoly([2, -1]), 1)])


def test_rfp_json_roundtrip():
    a = RatFuncProduct.from_factors([(QPoly([1, -5]), 1), (QPoly([1, -15]), -1)])
    assert RatFuncProduct.from_json(a.to_json()) == a


def test_bm_heldout_terms_catch_corruption():
    seq = geometric_sum([(1, 3), (-1, 1)], 20)
    seq[-1] += 1  # corrupt a held-out tail term
    with pytest.raises(ReconstructionError):
        berlekamp_massey_q(seq, 4)


def test_rfp_canonicalization_idempotent():
    a = RatFuncProduct.from_factors([(QPoly([1, -5]), 1), (QPoly([1, -15]), -1)])
    again = RatFuncProduct.from_irreducibles(a.factors)
    assert again == a and again.factors == a.factors


def test_exponents_rejects_bad_denominator():
    with pytest.raises(ReconstructionError):
        exponents_from_logderiv(QPoly([0, 1]), QPoly([2, -1]))
    with pytest.raises(ReconstructionError):
        # squarefree violation: (1 - z)^2
        exponents_from_logderiv(QPoly([0, 1]), QPoly([1, -2, 1]))
