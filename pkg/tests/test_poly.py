import random

import pytest
from hypothesis import given, settings, strategies as st

from hecc.field import FieldElement
from hecc.poly import Polynomial, xgcd


def P(coeffs, p=7):
    return Polynomial(coeffs, p)


def rand_poly(rng, p, max_deg):
    return Polynomial([rng.randrange(p) for _ in range(rng.randrange(max_deg + 2))], p)


def test_normalization_and_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([]).degree == -1
    assert P([0, 0]).degree == -1
    assert P([1, 3, 0, 0, 0, 1]).degree == 5
    assert P([7]).is_zero()


def test_add_sub_examples():
    # (x+1) + (x+6) = 2x over F_7
    assert P([1, 1]) + P([6, 1]) == P([0, 2])
    a = P([3, 1, 4])
    assert (a - a).is_zero()
    assert P([0, 1]) * P([5, 1]) == P([0, 5, 1])  # x(x+5) = x^2 + 5x


def test_divmod_examples():
    # (x^2 + 1) / (x + 1) = (x + 6, 2)
    q, r = divmod(P([1, 0, 1]), P([1, 1]))
    assert q == P([6, 1]) and r == P([2])
    a = P([2, 0, 3, 1])
    q, r = divmod(a, a)
    assert q == P([1]) and r.is_zero()
    # (x^5 + 3x + 1) / (5x^4 + 3) = (3x, x + 1)
    q, r = divmod(P([1, 3, 0, 0, 0, 1]), P([3, 0, 0, 0, 5]))
    assert q == P([0, 3]) and r == P([1, 1])


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P([1, 1]), P([]))


def test_xgcd_examples():
    # gcd(x^2 - 1, x - 1) = x - 1 = x + 6, made monic
    a, b = P([6, 0, 1]), P([6, 1])
    d, s, t = xgcd(a, b)
    assert d == P([6, 1])
    assert s * a + t * b == d
    # gcd(a, 0) = monic(a), with s = 1/lc(a)
    a = P([1, 0, 3])
    d, s, t = xgcd(a, P([]))
    assert d == a.monic() and t.is_zero()
    assert s * a == d
    # the curve and its derivative are coprime: certifies squarefreeness
    d, s, t = xgcd(P([1, 3, 0, 0, 0, 1]), P([3, 0, 0, 0, 5]))
    assert d == P([1])
    with pytest.raises(ValueError):
        xgcd(P([]), P([]))


def test_eval():
    f = P([1, 3, 0, 0, 0, 1])
    assert f(0) == 1
    assert f(2) == 4  # 32 + 6 + 1 = 39 = 4 (mod 7)
    assert P([])(5) == 0
    assert f(FieldElement(2, 7)) == FieldElement(4, 7)


def test_derivative_and_monic():
    f = P([1, 3, 0, 0, 0, 1])
    assert f.derivative() == P([3, 0, 0, 0, 5])
    assert P([3, 3]).monic() == P([1, 1])
    assert P([4]).derivative().is_zero()
    with pytest.raises(ZeroDivisionError):
        P([]).monic()


def test_modulus_mismatch():
    with pytest.raises(ValueError):
        P([1], 7) + P([1], 11)


coeff_lists = st.lists(st.integers(min_value=0, max_value=12), max_size=7)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_distributivity(xs, ys, zs):
    p = 13
    a, b, c = Polynomial(xs, p), Polynomial(ys, p), Polynomial(zs, p)
    assert (a + b) * c == a * c + b * c


@given(coeff_lists, coeff_lists)
def test_degree_of_product(xs, ys):
    p = 13
    a, b = Polynomial(xs, p), Polynomial(ys, p)
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert (a * b).degree == a.degree + b.degree


def test_divmod_roundtrip_bulk():
    rng = random.Random(0xD1)
    for p in (7, 13, 10007):
        for _ in range(4000):
            a = rand_poly(rng, p, 6)
            b = rand_poly(rng, p, 4)
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


def test_xgcd_certificate_bulk():
    rng = random.Random(0xD2)
    for _ in range(2500):
        p = rng.choice((7, 13, 101))
        a = rand_poly(rng, p, 5)
        b = rand_poly(rng, p, 5)
        if a.is_zero() and b.is_zero():
            continue
        d, s, t = xgcd(a, b)
        assert s * a + t * b == d
        assert d.is_monic()
        if not a.is_zero():
            assert (a % d).is_zero()
        if not b.is_zero():
            assert (b % d).is_zero()
