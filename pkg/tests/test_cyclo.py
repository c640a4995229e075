import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicsym.cyclo import (CycNum, common_conductor, cyclotomic_polynomial,
                            multiplicative_order, reduce, zeta)

CONDUCTORS = (3, 4, 8, 12, 24, 43)


def rand_cyc(rng, n):
    ctx_len = len(cyclotomic_polynomial(n)) - 1
    nums = [rng.randint(-9, 9) for _ in range(ctx_len)]
    return CycNum.from_vector(n, nums, rng.randint(1, 7))


def test_reduce_examples():
    assert zeta(4, 2) == CycNum.rational(-1, 4)
    assert zeta(3) + zeta(3, 2) == CycNum.rational(-1, 3)
    root2 = zeta(8) + zeta(8, 7)
    assert root2 * root2 == CycNum.rational(2, 8)


def test_reduce_rejects_zero_conductor():
    with pytest.raises(ValueError):
        reduce({0: 1}, 0)


def test_mul_and_inverse_examples():
    assert (1 + zeta(8)) * (1 - zeta(8)) == 1 - zeta(8, 2)
    for n in CONDUCTORS:
        assert zeta(n).inv() == zeta(n, n - 1)
    a = 1 + zeta(3)
    inv = a.inv()
    assert inv * a == CycNum.one(3)
    assert inv == -zeta(3)
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(8).inv()


def test_conductor_mismatch_is_an_error():
    with pytest.raises(ValueError):
        zeta(3) + zeta(4)
    with pytest.raises(ValueError):
        zeta(3) * zeta(4)


def test_embed_examples():
    assert zeta(3).embed(12) == zeta(12, 4)
    for k in (1, 2, 3, 5):
        minus = CycNum.rational(-1, 2)
        assert minus.embed(2 * k) == CycNum.rational(-1, 2 * k)
    s2 = (zeta(8) + zeta(8, 7)).embed(24)
    assert s2 * s2 == CycNum.rational(2, 24)
    with pytest.raises(ValueError):
        zeta(8).embed(12)


def test_field_axioms_1000_random_pairs():
    rng = random.Random(20240811)
    trials_per_n = 1000 // len(CONDUCTORS) + 1
    for n in CONDUCTORS:
        for _ in range(trials_per_n):
            a, b, c = (rand_cyc(rng, n) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert a * a.inv() == CycNum.one(n)


def test_embed_is_ring_homomorphism():
    rng = random.Random(7)
    for n, m in ((3, 12), (4, 8), (8, 24), (12, 24), (4, 24)):
        for _ in range(40):
            a, b = rand_cyc(rng, n), rand_cyc(rng, n)
            assert (a * b).embed(m) == a.embed(m) * b.embed(m)
            assert (a + b).embed(m) == a.embed(m) + b.embed(m)


def test_root_of_unity_orders():
    for n in CONDUCTORS + (96,):
        assert multiplicative_order(zeta(n)) == n


@settings(max_examples=60, deadline=None)
@given(st.integers(-50, 50), st.integers(1, 40), st.sampled_from(CONDUCTORS))
def test_encoding_round_trip(num, den, n):
    phi = len(cyclotomic_polynomial(n)) - 1
    value = CycNum.from_vector(n, [num] + [3] * (phi - 1), den)
    assert CycNum.parse(value.encode()) == value


def test_power_basis_is_reduced():
    for n in CONDUCTORS:
        phi = len(cyclotomic_polynomial(n)) - 1
        x = zeta(n, n - 1)
        assert len(x.num) == phi


def test_rational_detection():
    q = CycNum.rational(Fraction(-21, 14), 12)
    assert q.is_rational() and q.rational_value() == Fraction(-3, 2)
    assert not zeta(12).is_rational()


def test_common_conductor():
    assert common_conductor(3, 4, 8) == 24
    assert common_conductor(43) == 43
