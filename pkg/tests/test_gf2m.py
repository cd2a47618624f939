import random

import pytest
from hypothesis import given, strategies as st

from iterder.gf2m import MODULI, BinaryField, GFElem, get_field, is_irreducible, least_irreducible


def slow_mul(a, b, modulus):
    """Shift-and-add with reduction after every step; no tables."""
    m = modulus.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus
    return r


def brute_irreducible(p):
    d = p.bit_length() - 1
    for q in range(2, 1 << d):
        # polynomial remainder of p by q
        r = p
        while r and r.bit_length() >= q.bit_length():
            r ^= q << (r.bit_length() - q.bit_length())
        if r == 0:
            return False
    return True


@pytest.mark.parametrize("m", range(2, 9))
def test_moduli_are_least_irreducible(m):
    p = MODULI[m]
    assert p.bit_length() == m + 1
    assert brute_irreducible(p)
    assert not any(brute_irreducible(q) for q in range(1 << m, p))
    assert least_irreducible(m) == p
    assert is_irreducible(p)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 8])
def test_mul_matches_shift_and_add(m):
    F = get_field(m)
    rng = random.Random(m)
    for _ in range(500):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.mul(a, b) == slow_mul(a, b, F.modulus)


@pytest.mark.parametrize("m", range(1, 9))
def test_inverse_and_frobenius(m):
    F = get_field(m)
    for a in range(1, F.order):
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.order) == a


def test_gf4_generator_relation():
    F = get_field(2)
    w = GFElem(F, 2)
    assert w * w + w + w.one_like() == w.zero_like()
    assert str(w * w) == "w+1"


def test_elem_ops_and_render():
    F = get_field(3)
    a, b = F(3), F(6)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a ** 7 == a.one_like()
    assert a.sqr() == a * a
    assert str(F(0)) == "0" and str(F(5)) == "w^2+1"
    with pytest.raises(ZeroDivisionError):
        F(0).inv()


def test_invalid_degree():
    with pytest.raises(ValueError):
        BinaryField(0)


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_field_axioms_gf256(a, b, c):
    F = get_field(8)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
    assert F.mul(a, b) == F.mul(b, a)
