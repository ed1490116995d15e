"""Mod-l polynomial identities for the cyclic-cover construction, and the
exact cyclotomic trace pairing.

The cover bookkeeping: for odd l the branched cover of the line with l^k-th
root structure has genus g with 2g = l^{k-1}(l-1); for l = 2 the construction
needs k > 2 and gives genus 2^{k-3}.

The unit-indexed Chern product prod_{gcd(i,l)=1} (1 + i x) over F_l has the
closed form (1 - x^{l-1})^{l^{k-1}}: the product of the units of F_l is -1,
so the constant in each degree-(l-1) block is -1, not +1.  The +1 variant
(which coincides mod 2) is reported alongside for comparison.

The trace pairing B(a, b) = Tr(a * conj(b) * w) on Z[zeta], zeta of order
l^k, twists by w = (zeta - zeta^{-1})^{-d} where d = l^{k-1}(k(l-1)-1) is the
valuation of the different (for k = 1 this is the familiar l - 2).  With that
twist the Gram matrix on the power basis is integral, antisymmetric,
zeta-invariant, and unimodular.  The exponent l^k - l^{k-1} - 1 sometimes
quoted agrees only for k = 1; the report carries both, and for the quoted
variant the determinant picks up a power of l (l^4 for l^k = 9).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact_arith import is_prime

__all__ = [
    "ModPPolynomial",
    "CyclotomicElement",
    "CyclotomicChernReport",
    "SymplecticPairingReport",
    "hurwitz_genus",
    "cyclotomic_chern_product",
    "cyclotomic_chern_check",
    "symplectic_pairing_check",
    "different_exponent",
]


class ModPPolynomial:
    """Dense univariate polynomial over Z/l, coefficients canonical in 0..l-1."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs) -> None:
        if not is_prime(modulus):
            raise ValueError(f"{modulus} is not prime")
        cs = [c % modulus for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ModPPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other: "ModPPolynomial") -> "ModPPolynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ModPPolynomial(
            self.modulus,
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
        )

    def __mul__(self, other: "ModPPolynomial") -> "ModPPolynomial":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return ModPPolynomial(self.modulus, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ModPPolynomial(self.modulus, out)

    def __pow__(self, k: int) -> "ModPPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = ModPPolynomial(self.modulus, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _check(self, other: "ModPPolynomial") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mismatched moduli")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModPPolynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                parts.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ModPPolynomial(mod {self.modulus}: {self})"


def hurwitz_genus(l: int, k: int) -> int:
    """Genus of the l^k cyclic cover: l^{k-1}(l-1)/2 for odd l, 2^{k-3} for l=2."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    if l == 2:
        if k < 3:
            raise ValueError("the construction requires k > 2 when l = 2")
        return 2 ** (k - 3)
    two_g = l ** (k - 1) * (l - 1)
    # cover bookkeeping: 2g - 2 = -2 l^k + 2(l^k - 1) + l^{k-1}(l - 1)
    if two_g - 2 != -2 * l**k + 2 * (l**k - 1) + l ** (k - 1) * (l - 1):
        raise ArithmeticError("genus bookkeeping broken")
    return two_g // 2


def cyclotomic_chern_product(l: int, k: int) -> ModPPolynomial:
    """prod over 1 <= i <= l^k with gcd(i, l) = 1 of (1 + i x), mod l."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    out = ModPPolynomial(l, [1])
    for i in range(1, l**k + 1):
        if gcd(i, l) == 1:
            out = out * ModPPolynomial(l, [1, i])
    return out


@dataclass(frozen=True)
class CyclotomicChernReport:
    l: int
    k: int
    product: ModPPolynomial
    closed_form: ModPPolynomial
    plus_sign_form: ModPPolynomial
    equal: bool
    plus_sign_form_matches: bool
    top_degree: int
    top_coefficient_nonzero: bool


def cyclotomic_chern_check(l: int, k: int) -> CyclotomicChernReport:
    """Compare the unit product with (1 -/+ x^{l-1})^{l^{k-1}} and inspect the top term."""
    product = cyclotomic_chern_product(l, k)
    block = [1] + [0] * (l - 2) + [-1] if l > 2 else [1, 1]
    closed = ModPPolynomial(l, block) ** (l ** (k - 1))
    plus_block = [1] + [0] * (l - 2) + [1] if l > 2 else [1, 1]
    plus_form = ModPPolynomial(l, plus_block) ** (l ** (k - 1))
    top = l ** (k - 1) * (l - 1)
    return CyclotomicChernReport(
        l=l,
        k=k,
        product=product,
        closed_form=closed,
        plus_sign_form=plus_form,
        equal=product == closed,
        plus_sign_form_matches=product == plus_form,
        top_degree=top,
        top_coefficient_nonzero=product.coefficient(top) != 0,
    )


# -- exact cyclotomic arithmetic -------------------------------------------


def _cyclotomic_modulus(l: int, k: int) -> tuple[Fraction, ...]:
    # (x^{l^k} - 1)/(x^{l^{k-1}} - 1) = sum_{j=0}^{l-1} x^{j l^{k-1}}, monic
    step = l ** (k - 1)
    deg = step * (l - 1)
    coeffs = [Fraction(0)] * (deg + 1)
    for j in range(l):
        coeffs[j * step] = Fraction(1)
    return tuple(coeffs)


class CyclotomicElement:
    """Element of Q(zeta), zeta a primitive l^k-th root of unity, on the power basis."""

    __slots__ = ("l", "k", "coeffs")

    def __init__(self, l: int, k: int, coeffs) -> None:
        if not is_prime(l):
            raise ValueError(f"{l} is not prime")
        if k < 1:
            raise ValueError("k must be positive")
        deg = l ** (k - 1) * (l - 1)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _poly_rem(cs, list(_cyclotomic_modulus(l, k)))
        cs += [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @property
    def level(self) -> int:
        return self.l ** self.k

    @property
    def degree(self) -> int:
        return self.l ** (self.k - 1) * (self.l - 1)

    @classmethod
    def zeta_power(cls, l: int, k: int, m: int) -> "CyclotomicElement":
        m = m % (l**k)
        return cls(l, k, [0] * m + [1])

    def _check(self, other: "CyclotomicElement") -> None:
        if (self.l, self.k) != (other.l, other.k):
            raise ValueError("mismatched cyclotomic fields")

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(
            self.l, self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        return CyclotomicElement(
            self.l, self.k, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._check(other)
        n = self.degree
        raw = [Fraction(0)] * (2 * n - 1 if n else 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[i + j] += a * b
        return CyclotomicElement(self.l, self.k, raw)

    def __pow__(self, m: int) -> "CyclotomicElement":
        if m < 0:
            return (self ** (-m)).inverse()
        result = CyclotomicElement(self.l, self.k, [1])
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def conj(self) -> "CyclotomicElement":
        """The automorphism zeta -> zeta^{-1}."""
        n = self.level
        out = CyclotomicElement(self.l, self.k, [0])
        for i, c in enumerate(self.coeffs):
            if c:
                term = CyclotomicElement.zeta_power(self.l, self.k, (n - i) % n)
                out = out + CyclotomicElement(
                    self.l, self.k, [c * x for x in term.coeffs]
                )
        return out

    def inverse(self) -> "CyclotomicElement":
        """Field inverse via the extended Euclidean algorithm over Q[x]."""
        if all(c == 0 for c in self.coeffs):
            raise ZeroDivisionError("zero has no inverse")
        a = list(self.coeffs)
        b = list(_cyclotomic_modulus(self.l, self.k))
        s = _poly_modinv(a, b)
        return CyclotomicElement(self.l, self.k, s)

    def trace(self) -> Fraction:
        """Field trace, as the trace of the multiplication-by-self matrix."""
        n = self.degree
        total = Fraction(0)
        for j in range(n):
            col = self * CyclotomicElement.zeta_power(self.l, self.k, j)
            total += col.coeffs[j]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return (self.l, self.k, self.coeffs) == (other.l, other.k, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.l, self.k, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicElement(l={self.l}, k={self.k}, {list(self.coeffs)})"


def _poly_strip(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_rem(a: list, b: list) -> list[Fraction]:
    # remainder of a modulo monic-led b, over Q
    a = _poly_strip([Fraction(c) for c in a])
    b = _poly_strip([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _poly_strip(a)
    return a


def _poly_modinv(a: list, modulus: list) -> list[Fraction]:
    # s with s*a = 1 mod modulus, by the extended Euclidean algorithm
    r0 = _poly_strip([Fraction(c) for c in modulus])
    r1 = _poly_strip([Fraction(c) for c in a])
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise ArithmeticError("element not invertible modulo the cyclotomic polynomial")
    lead = r0[0]
    return [c / lead for c in s0]


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _poly_strip(a)
    return _poly_strip(q), a


def _poly_mul(a: list, b: list) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_strip(out)


def _poly_sub(a: list, b: list) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]
    return _poly_strip(out)


# -- the pairing -----------------------------------------------------------


def different_exponent(l: int, k: int) -> int:
    """Valuation of the different of Z[zeta_{l^k}] at the prime above l."""
    return l ** (k - 1) * (k * (l - 1) - 1)


@dataclass(frozen=True)
class SymplecticPairingReport:
    l: int
    k: int
    rank: int
    gram_determinant: int
    integral: bool
    skew: bool
    invariant: bool
    exponent: int
    quoted_exponent: int
    exponent_matches_quoted: bool
    quoted_exponent_determinant: "int | None"


def _pairing_gram(l: int, k: int, exponent: int) -> list[list[Fraction]]:
    n = l ** (k - 1) * (l - 1)
    zeta = CyclotomicElement.zeta_power(l, k, 1)
    twist = ((zeta - zeta.conj()) ** exponent).inverse()
    # Gram[i][j] = Tr(zeta^i conj(zeta^j) twist) = Tr(zeta^{i-j} twist)
    traces = {
        m: (CyclotomicElement.zeta_power(l, k, m) * twist).trace()
        for m in range(-(n - 1), n)
    }
    return [[traces[i - j] for j in range(n)] for i in range(n)]


def _det(matrix: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def symplectic_pairing_check(l: int, k: int, max_rank: int = 16) -> SymplecticPairingReport:
    """Gram matrix of B(a,b) = Tr(a conj(b) (zeta-zeta^{-1})^{-d}) on the power basis.

    d is the different valuation, so the form is integral, antisymmetric,
    zeta-invariant and unimodular.  The quoted exponent l^k - l^{k-1} - 1 is
    also reported (identical for k = 1); when it differs, its determinant is
    computed for comparison.
    """
    if l == 2:
        raise ValueError("the pairing is built for odd l")
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if k < 1:
        raise ValueError("k must be positive")
    rank = l ** (k - 1) * (l - 1)
    if rank > max_rank:
        raise ValueError(f"rank {rank} exceeds the cap {max_rank}")
    d = different_exponent(l, k)
    quoted = l**k - l ** (k - 1) - 1
    gram = _pairing_gram(l, k, d)
    integral = all(c.denominator == 1 for row in gram for c in row)
    skew = all(gram[j][i] == -gram[i][j] for i in range(rank) for j in range(rank))
    # multiplication by zeta on the power basis must preserve the form
    zcols = [
        CyclotomicElement.zeta_power(l, k, j + 1).coeffs for j in range(rank)
    ]
    transformed = [
        [
            sum(
                zcols[i][a] * gram[a][b] * zcols[j][b]
                for a in range(rank)
                for b in range(rank)
            )
            for j in range(rank)
        ]
        for i in range(rank)
    ]
    invariant = transformed == [list(row) for row in gram]
    det = _det(gram)
    if det.denominator != 1:
        raise ArithmeticError("determinant of an integral form must be an integer")
    quoted_det = None
    if quoted != d:
        qd = _det(_pairing_gram(l, k, quoted))
        quoted_det = int(qd) if qd.denominator == 1 else None
    return SymplecticPairingReport(
        l=l,
        k=k,
        rank=rank,
        gram_determinant=int(det),
        integral=integral,
        skew=skew,
        invariant=invariant,
        exponent=d,
        quoted_exponent=quoted,
        exponent_matches_quoted=quoted == d,
        quoted_exponent_determinant=quoted_det,
    )
