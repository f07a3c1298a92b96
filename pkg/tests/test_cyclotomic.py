import random

import pytest

from galois_span.cyclotomic import (
    CycloPoly,
    CyclotomicInt,
    cyclotomic_polynomial,
    reverse_mult_vector,
)
from galois_span.polynomials import IntPoly


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1).coeffs == (-1, 1)
    assert cyclotomic_polynomial(2).coeffs == (1, 1)
    assert cyclotomic_polynomial(3).coeffs == (1, 1, 1)
    assert cyclotomic_polynomial(4).coeffs == (1, 0, 1)
    assert cyclotomic_polynomial(6).coeffs == (1, -1, 1)
    assert cyclotomic_polynomial(12).coeffs == (1, 0, -1, 0, 1)
    # product of Phi_d over d | n is x^n - 1
    for n in (6, 8, 12, 30):
        prod = IntPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        assert prod == IntPoly([-1] + [0] * (n - 1) + [1])


def test_root_powers_and_relations():
    z = CyclotomicInt.root(4)
    assert z * z == CyclotomicInt.from_int(4, -1)
    assert z * z * z * z == 1
    w = CyclotomicInt.root(6)
    # 1 + zeta_6^2 + zeta_6^4 = 0
    assert w.galois(2) + w.galois(4) + 1 == 0
    # zeta_6 - zeta_6^5 is not rational; zeta_6 + zeta_6^5 = 1
    assert not (w - w.conjugate()).is_rational_integer()
    assert (w + w.conjugate()).as_int() == 1


def test_sum_of_all_roots_vanishes():
    for e in (2, 3, 4, 5, 6, 8, 12):
        total = CyclotomicInt.zero(e)
        for k in range(e):
            total = total + CyclotomicInt.root(e, k)
        assert total == 0


def test_mult_vector_roundtrip_and_conjugation():
    rng = random.Random(1)
    for e in (3, 4, 6, 12):
        for _ in range(20):
            mult = tuple(rng.randrange(4) for _ in range(e))
            value = CyclotomicInt.from_mult_vector(e, mult)
            conj = CyclotomicInt.from_mult_vector(e, reverse_mult_vector(mult))
            assert value.conjugate() == conj
            assert (value * value.conjugate()).conjugate() == value * value.conjugate()


def test_norm_is_nonnegative_integer():
    rng = random.Random(5)
    for e in (4, 6, 12):
        for _ in range(20):
            mult = tuple(rng.randrange(3) for _ in range(e))
            value = CyclotomicInt.from_mult_vector(e, mult)
            diff = 2 - value - value.conjugate()
            prod = diff * diff.conjugate()
            assert prod == prod.conjugate()


def test_mixed_conductor_rejected():
    with pytest.raises(ValueError):
        CyclotomicInt.root(4) + CyclotomicInt.root(6)


def test_equality_against_int():
    assert CyclotomicInt.from_int(12, 7) == 7
    assert CyclotomicInt.root(12) != 1
    z = CyclotomicInt.root(2)
    assert z == -1


def test_cyclopoly_arithmetic():
    e = 4
    z = CyclotomicInt.root(e)
    p = CycloPoly(e, (CyclotomicInt.one(e), z))  # 1 + z u
    q = CycloPoly(e, (z,))
    assert (p * q).coeffs == (z, z * z)
    assert (p - p).degree == -1
    assert p(1) == 1 + z
    ip = p * CycloPoly(e, (CyclotomicInt.one(e), z.conjugate()))
    # (1 + z u)(1 + z^-1 u) = 1 + (z + z^-1) u + u^2 = 1 + 0u + u^2 over e=4
    assert ip.to_int_poly() == IntPoly([1, 0, 1])


def test_cyclopoly_to_int_poly_rejects_irrational():
    e = 4
    p = CycloPoly(e, (CyclotomicInt.root(e),))
    with pytest.raises(ArithmeticError):
        p.to_int_poly()
