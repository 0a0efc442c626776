import pytest
from hypothesis import given, strategies as st

from hecc.field import FieldElement, legendre_symbol, sqrt_mod

PRIMES = [3, 5, 7, 11, 13, 17, 97, 997, (1 << 61) - 1]


def fe(v, p=7):
    return FieldElement(v, p)


def test_basic_arithmetic_mod_7():
    assert fe(5) + fe(4) == fe(2)
    assert fe(0) - fe(1) == fe(6)
    assert fe(3) * fe(5) == fe(1)
    assert -fe(3) == fe(4)


def test_int_coercion():
    assert fe(5) + 4 == 2
    assert 4 + fe(5) == fe(2)
    assert fe(3) * 5 == fe(1)
    assert 1 / fe(3) == fe(5)


def test_modulus_mismatch_rejected():
    with pytest.raises(ValueError):
        fe(1, 7) + fe(1, 11)
    with pytest.raises(ValueError):
        fe(2, 7) * fe(2, 13)


def test_inverse():
    assert fe(3).inverse() == fe(5)
    assert fe(1, 97).inverse() == fe(1, 97)
    with pytest.raises(ZeroDivisionError):
        fe(0).inverse()


def test_pow_conventions():
    assert fe(3) ** 6 == fe(1)  # Fermat
    assert fe(0) ** 0 == fe(1)
    assert fe(2) ** 5 == fe(4)
    assert fe(3) ** -1 == fe(5)


def test_sqrt_examples():
    assert fe(2).sqrt() == fe(3)  # 3^2 = 9 = 2, and 3 < 4
    assert fe(0).sqrt() == fe(0)
    assert fe(5).sqrt() is None  # squares mod 7 are {0, 1, 2, 4}


def test_legendre_examples():
    assert fe(0).legendre() == 0
    assert fe(4).legendre() == 1
    assert fe(5).legendre() == -1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 41, 97, 229, 577, 997])
def test_legendre_matches_exhaustive_squares(p):
    squares = {x * x % p for x in range(p)}
    for a in range(p):
        expected = 0 if a == 0 else (1 if a in squares else -1)
        assert legendre_symbol(a, p) == expected


@pytest.mark.parametrize("p", [13, 17, 97, 997])  # includes p = 1 (mod 4)
def test_sqrt_all_residues(p):
    for a in range(p):
        y = sqrt_mod(a, p)
        if legendre_symbol(a, p) >= 0:
            assert y is not None and y * y % p == a
            assert y <= p - y  # canonical smaller root
        else:
            assert y is None


@given(st.integers(min_value=0, max_value=10**9), st.sampled_from(PRIMES))
def test_canonical_range(v, p):
    x = FieldElement(v, p)
    assert 0 <= x.value < p


@given(st.integers(min_value=1, max_value=10**9), st.sampled_from(PRIMES))
def test_mul_inverse_is_one(v, p):
    a = FieldElement(v, p)
    if a.is_zero():
        return
    assert a * a.inverse() == FieldElement(1, p)


@given(st.integers(min_value=1, max_value=10**9), st.sampled_from(PRIMES))
def test_fermat_little(v, p):
    a = FieldElement(v, p)
    if a.is_zero():
        return
    assert a ** (p - 1) == FieldElement(1, p)


@given(st.integers(min_value=0, max_value=10**9), st.sampled_from(PRIMES))
def test_sqrt_squares_back(v, p):
    a = FieldElement(v, p)
    root = a.sqrt()
    if root is not None:
        assert root * root == a


@given(st.integers(), st.integers())
def test_add_commutes(x, y):
    p = 997
    assert FieldElement(x, p) + FieldElement(y, p) == FieldElement(y, p) + FieldElement(x, p)
