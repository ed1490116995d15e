from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tautorder.bernoulli_zeta import proportionality
from tautorder.group_orders import (
    degree_integrality,
    factorize,
    koblitz_coefficient,
    sp_order,
)


def _direct_local_order(g: int, p: int, k: int) -> int:
    # |matrices preserving the standard form over Z/p^k|, written out plainly
    order = p ** ((k - 1) * g * (2 * g + 1)) * p ** (g * g)
    for i in range(1, g + 1):
        order *= p ** (2 * i) - 1
    return order


def test_factorize_round_trip() -> None:
    rng = random.Random(987123)
    for _ in range(200):
        n = rng.randint(1, 10**7)
        fac = factorize(n)
        prod = 1
        for p, e in fac.items():
            prod *= p**e
        assert prod == n
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_sp_order_small_group_orders() -> None:
    # 2x2 cases are the classical matrix groups of determinant one
    assert sp_order(1, 3).order == 24
    assert sp_order(1, 2).order == 6
    assert sp_order(2, 2).order == 720
    assert sp_order(1, 4).order == 48
    assert sp_order(1, 5).order == 120


def test_sp_order_against_direct_formula() -> None:
    for g in range(1, 5):
        for p, k in ((2, 1), (2, 3), (3, 2), (5, 1), (7, 1)):
            expected = _direct_local_order(g, p, k)
            assert sp_order(g, p**k).local_factors[p] == expected


def test_sp_order_multiplicative_over_coprime_parts() -> None:
    for g in (1, 2, 3):
        for a, b in ((2, 3), (4, 5), (3, 8), (5, 9)):
            combined = sp_order(g, a * b).order
            assert combined == sp_order(g, a).order * sp_order(g, b).order


def test_sp_order_local_factors_multiply_to_order() -> None:
    for g in (1, 2):
        for n in (6, 12, 60):
            r = sp_order(g, n)
            prod = 1
            for v in r.local_factors.values():
                prod *= v
            assert prod == r.order
            assert sorted(r.local_factors) == sorted(factorize(n))


def test_sp_order_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        sp_order(0, 3)
    with pytest.raises(ValueError):
        sp_order(1, 1)


def test_degree_spot_values() -> None:
    assert degree_integrality(1, 3).degree == 1
    assert degree_integrality(2, 3).degree == 9
    assert degree_integrality(1, 4).degree == 2
    assert degree_integrality(3, 3).degree == 3159


def test_degree_is_order_times_absolute_constant() -> None:
    for g in (1, 2, 3):
        for n in (3, 4, 5):
            r = degree_integrality(g, n)
            assert r.degree == sp_order(g, n).order * proportionality(g).absolute_value


def test_degree_integral_in_claimed_range() -> None:
    for g in range(1, 6):
        for n in range(3, 8):
            r = degree_integrality(g, n)
            assert r.integral
            assert isinstance(r.degree, Fraction)
            assert r.degree.denominator == 1


def test_degree_rejects_small_level() -> None:
    with pytest.raises(ValueError, match="n >= 3"):
        degree_integrality(1, 2)


def test_koblitz_spot_values() -> None:
    assert koblitz_coefficient(1, 2) == 1
    assert koblitz_coefficient(2, 2) == 3
    assert koblitz_coefficient(3, 3) == 416


def test_koblitz_product_structure() -> None:
    for g in range(1, 6):
        for p in (2, 3, 5, 7):
            expected = 1
            for i in range(1, g + 1):
                expected *= p**i - 1
            value = koblitz_coefficient(g, p)
            assert value == expected
            # each factor is -1 mod p
            assert value % p == (-1) ** g % p
