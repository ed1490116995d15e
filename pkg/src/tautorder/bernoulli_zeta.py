"""Bernoulli numbers, zeta values at negative odd integers, and the
proportionality constant built from them.

Conventions: B_1 = -1/2 (the convolution recurrence's own value); all odd
Bernoulli numbers beyond B_1 vanish.  zeta_neg(g) means the value of the zeta
function at 1-2g, computed exactly as -B_{2g}/2g.

The proportionality constant is the alternating product
(-1)^g * prod_{j<=g} zeta_neg(j)/2.  The literal product is negative for
g = 2,3 mod 4, although the constant is usually quoted positive; both the
signed and the absolute value are exposed, and every divisibility statement
downstream consumes the absolute value.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact_arith import primes_upto

__all__ = [
    "BernoulliTable",
    "ProportionalityResult",
    "bernoulli",
    "bernoulli_table",
    "zeta_neg",
    "proportionality",
    "todd_inverse_series",
    "von_staudt_denominator",
]

# Monotone cache: entries are appended, never changed, so a returned value can
# never be invalidated by later growth.  The lock only serializes extension.
_cache: list[Fraction] = [Fraction(1)]
_cache_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """B_m via the defining convolution recurrence, cached monotonically."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    if m < len(_cache):
        return _cache[m]
    with _cache_lock:
        while len(_cache) <= m:
            n = len(_cache)
            acc = Fraction(0)
            for j in range(n):
                acc += comb(n + 1, j) * _cache[j]
            _cache.append(-acc / (n + 1))
    return _cache[m]


@dataclass(frozen=True)
class BernoulliTable:
    """Frozen view of B_0, B_1, and the even-index values up to max_index."""

    max_index: int
    values: dict[int, Fraction]


def bernoulli_table(max_index: int) -> BernoulliTable:
    if max_index < 0:
        raise ValueError("index must be nonnegative")
    keys = [0, 1] if max_index >= 1 else [0]
    keys += [m for m in range(2, max_index + 1, 2)]
    return BernoulliTable(max_index, {m: bernoulli(m) for m in keys})


def von_staudt_denominator(m: int) -> int:
    """Product of the primes p with (p-1) | m; the denominator of B_m for even m."""
    if m <= 0 or m % 2:
        raise ValueError("defined for positive even m")
    out = 1
    for p in primes_upto(m + 1):
        if m % (p - 1) == 0:
            out *= p
    return out


def zeta_neg(g: int) -> Fraction:
    """zeta(1-2g) = -B_{2g}/2g, exact."""
    if g < 1:
        raise ValueError("g must be positive")
    return -bernoulli(2 * g) / (2 * g)


@dataclass(frozen=True)
class ProportionalityResult:
    g: int
    signed_value: Fraction
    absolute_value: Fraction
    denominator: int


def proportionality(g: int) -> ProportionalityResult:
    """(-1)^g * prod_{j=1}^{g} zeta_neg(j)/2, with its absolute value and denominator."""
    if g < 1:
        raise ValueError("g must be positive")
    acc = Fraction(1)
    for j in range(1, g + 1):
        acc *= zeta_neg(j) / 2
    signed = -acc if g % 2 else acc
    return ProportionalityResult(g, signed, abs(signed), abs(signed).denominator)


def todd_inverse_series(depth: int) -> list[Fraction]:
    """Coefficients of t/(e^t - 1) through degree `depth`, i.e. B_k/k!."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    return [bernoulli(k) / factorial(k) for k in range(depth + 1)]
