"""Truncated graded polynomial algebra over exact rationals, and the
characteristic-class identities computed in it.

Two generator contexts appear: g "root" variables x1..xg of weight 1 (splitting
a rank-g bundle into line elements), and g "class" variables c1..cg (or l1..lg)
of weights 1..g.  Every product truncates at the ring's fixed total weighted
degree, zero coefficients are pruned, and equality is equality of term maps.

Conventions fixed here and relied on throughout:

* The virtual exterior-power class means the alternating sum
  sum_i (-1)^i [Lambda^i E].  Its total Chern class is assembled by
  multiplicativity over the line elements of each Lambda^i, with formal
  inversion (geometric series in the truncated ring) for the odd-degree
  summands.  The payload is the degree-g coefficient -(g-1)! c_g; the opposite
  sign convention for the alternating sum would flip it.

* The Todd factor attached to a root x is x/(e^x - 1) = sum_k b_k/k! x^k
  (dual convention).  This is the convention under which the product
  prod_i (1 - e^{x_i}) equals (-1)^g (x1...xg) Td^{-1} identically; with the
  opposite convention x/(1 - e^{-x}) the two sides differ by a unit e^{-c1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .bernoulli_zeta import todd_inverse_series

__all__ = [
    "GradedPolynomial",
    "SymmetricReduction",
    "root_variables",
    "class_variables",
    "symmetric_reduce",
    "substitute_elementary",
    "elementary_symmetric",
    "chern_character",
    "todd_class",
    "lambda_star_class",
    "borel_serre_check",
    "newton_special_case",
    "fundamental_relations",
]

Coefficient = "int | Fraction"


class GradedPolynomial:
    """Sparse polynomial with weighted generators and hard degree truncation.

    Instances are treated as immutable; every operation returns a new object.
    Coefficients are exact (int or Fraction, freely mixed).
    """

    __slots__ = ("names", "weights", "truncation", "terms")

    def __init__(self, names, weights, truncation, terms):
        names = tuple(names)
        weights = tuple(int(w) for w in weights)
        if len(names) != len(weights):
            raise ValueError("names and weights must align")
        if any(w < 1 for w in weights):
            raise ValueError("weights must be positive")
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        clean = {}
        for mon, coeff in dict(terms).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != len(names):
                raise ValueError("exponent vector length mismatch")
            if any(e < 0 for e in mon):
                raise ValueError("exponents must be nonnegative")
            if coeff == 0:
                continue
            if sum(e * w for e, w in zip(mon, weights)) > truncation:
                continue
            clean[mon] = coeff
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "truncation", int(truncation))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPolynomial is immutable")

    @classmethod
    def _raw(cls, names, weights, truncation, terms):
        # internal: terms already normalized (no zeros, nothing over truncation)
        self = object.__new__(cls)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "terms", terms)
        return self

    # -- ring bookkeeping -------------------------------------------------

    def _check_ring(self, other: "GradedPolynomial") -> None:
        if (
            self.names != other.names
            or self.weights != other.weights
            or self.truncation != other.truncation
        ):
            raise ValueError("polynomials live in different rings")

    def ring_constant(self, value) -> "GradedPolynomial":
        if value == 0:
            return GradedPolynomial._raw(self.names, self.weights, self.truncation, {})
        zero_mon = (0,) * len(self.names)
        return GradedPolynomial._raw(
            self.names, self.weights, self.truncation, {zero_mon: value}
        )

    def ring_variable(self, index: int) -> "GradedPolynomial":
        n = len(self.names)
        if not 0 <= index < n:
            raise ValueError("variable index out of range")
        if self.weights[index] > self.truncation:
            return self.ring_constant(0)
        mon = tuple(1 if i == index else 0 for i in range(n))
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, {mon: 1})

    def _wdeg(self, mon) -> int:
        return sum(e * w for e, w in zip(mon, self.weights))

    def _buckets(self) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for mon, coeff in self.terms.items():
            out.setdefault(self._wdeg(mon), {})[mon] = coeff
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring_constant(other)
        self._check_ring(other)
        terms = dict(self.terms)
        for mon, coeff in other.terms.items():
            acc = terms.get(mon, 0) + coeff
            if acc:
                terms[mon] = acc
            else:
                terms.pop(mon, None)
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial._raw(
            self.names,
            self.weights,
            self.truncation,
            {mon: -coeff for mon, coeff in self.terms.items()},
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring_constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring_constant(0)
            return GradedPolynomial._raw(
                self.names,
                self.weights,
                self.truncation,
                {mon: coeff * other for mon, coeff in self.terms.items()},
            )
        self._check_ring(other)
        res: dict = {}
        limit = self.truncation
        for da, ba in self._buckets().items():
            room = limit - da
            for db, bb in other._buckets().items():
                if db > room:
                    continue
                for ma, ca in ba.items():
                    for mb, cb in bb.items():
                        mon = tuple(x + y for x, y in zip(ma, mb))
                        acc = res.get(mon, 0) + ca * cb
                        if acc:
                            res[mon] = acc
                        else:
                            res.pop(mon, None)
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, res)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers go through inverse()")
        result = self.ring_constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def inverse(self) -> "GradedPolynomial":
        """Multiplicative inverse in the truncated ring; needs a unit constant term."""
        n = len(self.names)
        zero_mon = (0,) * n
        c0 = self.terms.get(zero_mon, 0)
        if c0 == 0:
            raise ValueError("inverse requires a nonzero constant term")
        if c0 == 1:
            inv0 = 1
        elif c0 == -1:
            inv0 = -1
        else:
            inv0 = Fraction(1) / c0
        sb = self._buckets()
        inv_buckets: dict[int, dict] = {0: {zero_mon: inv0}}
        for d in range(1, self.truncation + 1):
            acc: dict = {}
            for e in range(1, d + 1):
                be = sb.get(e)
                qd = inv_buckets.get(d - e)
                if not be or not qd:
                    continue
                for ma, ca in be.items():
                    for mb, cb in qd.items():
                        mon = tuple(x + y for x, y in zip(ma, mb))
                        prev = acc.get(mon, 0) + ca * cb
                        if prev:
                            acc[mon] = prev
                        else:
                            acc.pop(mon, None)
            bucket = {mon: -inv0 * c for mon, c in acc.items()}
            if bucket:
                inv_buckets[d] = bucket
        terms = {mon: c for b in inv_buckets.values() for mon, c in b.items()}
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, terms)

    # fast paths for multiplying/dividing by (1 + sum of distinct variables);
    # the exterior-power product is nothing but a long chain of these
    def _times_one_plus_sum(self, indices) -> "GradedPolynomial":
        buckets = self._buckets()
        out = {d: dict(b) for d, b in buckets.items()}
        for d, b in buckets.items():
            if d + 1 > self.truncation:
                continue
            tgt = out.setdefault(d + 1, {})
            for mon, coeff in b.items():
                for j in indices:
                    m2 = mon[:j] + (mon[j] + 1,) + mon[j + 1 :]
                    acc = tgt.get(m2, 0) + coeff
                    if acc:
                        tgt[m2] = acc
                    else:
                        tgt.pop(m2, None)
        terms = {mon: c for b in out.values() for mon, c in b.items() if c}
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, terms)

    def _div_one_plus_sum(self, indices) -> "GradedPolynomial":
        # triangular solve for Q in Q * (1 + sum x_j) = self, degree by degree
        pb = self._buckets()
        qb: dict[int, dict] = {}
        for d in range(self.truncation + 1):
            cur = dict(pb.get(d, {}))
            prev = qb.get(d - 1)
            if prev:
                for mon, coeff in prev.items():
                    for j in indices:
                        m2 = mon[:j] + (mon[j] + 1,) + mon[j + 1 :]
                        acc = cur.get(m2, 0) - coeff
                        if acc:
                            cur[m2] = acc
                        else:
                            cur.pop(m2, None)
            if cur:
                qb[d] = cur
        terms = {mon: c for b in qb.values() for mon, c in b.items()}
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, terms)

    # -- structure --------------------------------------------------------

    def homogeneous_component(self, degree: int) -> "GradedPolynomial":
        terms = {
            mon: c for mon, c in self.terms.items() if self._wdeg(mon) == degree
        }
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, terms)

    def substitute_zero(self, indices) -> "GradedPolynomial":
        kill = set(indices)
        terms = {
            mon: c
            for mon, c in self.terms.items()
            if all(mon[i] == 0 for i in kill)
        }
        return GradedPolynomial._raw(self.names, self.weights, self.truncation, terms)

    def coefficient(self, mon) -> "int | Fraction":
        return self.terms.get(tuple(mon), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return (
            self.names == other.names
            and self.weights == other.weights
            and self.truncation == other.truncation
            and self.terms == other.terms
        )

    __hash__ = None

    # -- canonical rendering ----------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms sorted by (degree, exponents), exact coefficients."""
        if not self.terms:
            return "0"
        pieces = []
        order = lambda m: (self._wdeg(m), tuple(-e for e in m))
        for mon in sorted(self.terms, key=order):
            coeff = self.terms[mon]
            factors = []
            for name, e in zip(self.names, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(coeff)
            mag_str = str(mag)  # Fraction renders as n/d, int as n
            if body and mag == 1:
                text = body
            elif body:
                text = f"{mag_str}*{body}"
            else:
                text = mag_str
            pieces.append(("-" if coeff < 0 else "+", text))
        sign, text = pieces[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"GradedPolynomial({self.render()!r})"


# -- generator factories ---------------------------------------------------


def root_variables(g: int, truncation: int) -> tuple[GradedPolynomial, ...]:
    """Weight-1 generators x1..xg."""
    if g < 1:
        raise ValueError("g must be positive")
    names = tuple(f"x{i}" for i in range(1, g + 1))
    weights = (1,) * g
    proto = GradedPolynomial(names, weights, truncation, {})
    return tuple(proto.ring_variable(i) for i in range(g))


def class_variables(g: int, truncation: int, symbol: str = "c") -> tuple[GradedPolynomial, ...]:
    """Generators of weights 1..g named symbol1..symbolg."""
    if g < 1:
        raise ValueError("g must be positive")
    names = tuple(f"{symbol}{i}" for i in range(1, g + 1))
    weights = tuple(range(1, g + 1))
    proto = GradedPolynomial(names, weights, truncation, {})
    return tuple(proto.ring_variable(i) for i in range(g))


def _series_in_root(g: int, index: int, coeffs, truncation: int) -> GradedPolynomial:
    # sum_k coeffs[k] * x_index^k, directly as a term map
    names = tuple(f"x{i}" for i in range(1, g + 1))
    terms = {}
    for k, c in enumerate(coeffs):
        if k > truncation:
            break
        if c == 0:
            continue
        terms[tuple(k if i == index else 0 for i in range(g))] = c
    return GradedPolynomial._raw(names, (1,) * g, truncation, terms)


# -- symmetric function machinery ------------------------------------------


@lru_cache(maxsize=None)
def elementary_symmetric(g: int, i: int, truncation: int) -> GradedPolynomial:
    """e_i(x1..xg) in the weight-1 root ring.  Cached; treat as immutable."""
    if not 0 <= i <= g:
        raise ValueError("need 0 <= i <= g")
    names = tuple(f"x{j}" for j in range(1, g + 1))
    if i == 0:
        return GradedPolynomial(names, (1,) * g, truncation, {(0,) * g: 1})
    terms = {}
    if i <= truncation:
        for subset in combinations(range(g), i):
            terms[tuple(1 if j in subset else 0 for j in range(g))] = 1
    return GradedPolynomial._raw(names, (1,) * g, truncation, terms)


@lru_cache(maxsize=None)
def _elementary_monomial(g: int, exps: tuple, truncation: int) -> GradedPolynomial:
    # prod_i e_i^{exps[i-1]}, exps indexed from e_1
    out = elementary_symmetric(g, 0, truncation)
    for i, e in enumerate(exps, start=1):
        if e:
            out = out * (elementary_symmetric(g, i, truncation) ** e)
    return out


@dataclass(frozen=True)
class SymmetricReduction:
    """A symmetric root polynomial together with its expression in c1..cg."""

    input: GradedPolynomial
    output: GradedPolynomial


def symmetric_reduce(poly: GradedPolynomial) -> SymmetricReduction:
    """Rewrite a symmetric polynomial in the roots as a polynomial in c1..cg.

    Classical leading-term elimination: the lex-greatest monomial of a
    symmetric polynomial has weakly decreasing exponents (a1 >= a2 >= ...),
    and prod_i e_i^{a_i - a_{i+1}} has that same leading monomial with
    coefficient 1.  Works one homogeneous component at a time, so truncation
    never interferes.  Raises ValueError on non-symmetric input.
    """
    g = len(poly.names)
    if poly.weights != (1,) * g:
        raise ValueError("symmetric reduction expects weight-1 root variables")
    out_terms: dict = {}
    for degree, bucket in sorted(poly._buckets().items()):
        comp = dict(bucket)
        while comp:
            lead = max(comp)
            if any(lead[i] < lead[i + 1] for i in range(g - 1)):
                raise ValueError("polynomial is not symmetric in the roots")
            coeff = comp.pop(lead)
            exps = tuple(
                lead[i] - (lead[i + 1] if i + 1 < g else 0) for i in range(g)
            )
            expansion = _elementary_monomial(g, exps, poly.truncation)
            for mon, c in expansion.terms.items():
                if mon == lead:
                    continue
                acc = comp.get(mon, 0) - coeff * c
                if acc:
                    comp[mon] = acc
                else:
                    comp.pop(mon, None)
            acc = out_terms.get(exps, 0) + coeff
            if acc:
                out_terms[exps] = acc
            else:
                out_terms.pop(exps, None)
    out_names = tuple(f"c{i}" for i in range(1, g + 1))
    output = GradedPolynomial._raw(
        out_names, tuple(range(1, g + 1)), poly.truncation, out_terms
    )
    return SymmetricReduction(poly, output)


def substitute_elementary(class_poly: GradedPolynomial) -> GradedPolynomial:
    """Substitute e_i(x1..xg) for the i-th generator; inverse of symmetric_reduce."""
    g = len(class_poly.names)
    if class_poly.weights != tuple(range(1, g + 1)):
        raise ValueError("expects class variables of weights 1..g")
    trunc = class_poly.truncation
    acc: dict = {}
    for mon, coeff in class_poly.terms.items():
        expansion = _elementary_monomial(g, mon, trunc)
        for m, c in expansion.terms.items():
            v = acc.get(m, 0) + coeff * c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
    names = tuple(f"x{i}" for i in range(1, g + 1))
    return GradedPolynomial._raw(names, (1,) * g, trunc, acc)


# -- characteristic-class operations ---------------------------------------


def chern_character(g: int, depth: int) -> GradedPolynomial:
    """sum_i e^{x_i} through total degree `depth`; constant term is the rank g."""
    if g < 1:
        raise ValueError("g must be positive")
    if depth < 1:
        raise ValueError("depth must be positive")
    names = tuple(f"x{i}" for i in range(1, g + 1))
    terms: dict = {(0,) * g: g}
    fact = 1
    for k in range(1, depth + 1):
        fact *= k
        c = Fraction(1, fact)
        for i in range(g):
            terms[tuple(k if j == i else 0 for j in range(g))] = c
    return GradedPolynomial._raw(names, (1,) * g, depth, terms)


def todd_class(g: int, depth: int, dual: bool = True) -> GradedPolynomial:
    """prod_i f(x_i) with f = t/(e^t - 1) (dual) or t/(1 - e^{-t}).

    The two differ by t -> -t, i.e. by the sign of every odd coefficient.
    """
    if g < 1:
        raise ValueError("g must be positive")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    base = todd_inverse_series(depth)
    if not dual:
        base = [(-c if k % 2 else c) for k, c in enumerate(base)]
    out = _series_in_root(g, 0, base, depth)
    for i in range(1, g):
        out = out * _series_in_root(g, i, base, depth)
    return out


def lambda_star_class(g: int, depth: int) -> GradedPolynomial:
    """Total Chern class of sum_i (-1)^i [Lambda^i E], in c1..cg.

    Multiplicative over the line elements of each Lambda^i E (Chern roots
    x_{j1}+...+x_{ji} over i-element subsets), with formal inversion for the
    odd exterior powers.  Vanishes in degrees 1..g-1; the degree-g term is
    -(g-1)! c_g.
    """
    if g < 1:
        raise ValueError("g must be positive")
    if depth < g:
        raise ValueError("depth must reach g: the degree-g coefficient is the payload")
    names = tuple(f"x{i}" for i in range(1, g + 1))
    poly = GradedPolynomial._raw(names, (1,) * g, depth, {(0,) * g: 1})
    for size in range(1, g + 1):
        invert = size % 2 == 1
        for subset in combinations(range(g), size):
            if invert:
                poly = poly._div_one_plus_sum(subset)
            else:
                poly = poly._times_one_plus_sum(subset)
    return symmetric_reduce(poly).output


def borel_serre_check(g: int, depth: int) -> bool:
    """prod_i (1 - e^{x_i}) == (-1)^g (x1...xg) Td^{-1} in the truncated ring.

    Td is the dual-convention Todd class; since it is a unit, the identity is
    checked by cross-multiplying instead of inverting.
    """
    if g < 1:
        raise ValueError("g must be positive")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    names = tuple(f"x{i}" for i in range(1, g + 1))
    coeffs = [0] + [-Fraction(1, _factorial(k)) for k in range(1, depth + 1)]
    lhs = _series_in_root(g, 0, coeffs, depth)
    for i in range(1, g):
        lhs = lhs * _series_in_root(g, i, coeffs, depth)
    td = todd_class(g, depth, dual=True)
    sign = -1 if g % 2 else 1
    target_terms = {(1,) * g: sign} if g <= depth else {}
    target = GradedPolynomial._raw(names, (1,) * g, depth, target_terms)
    return lhs * td == target


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def newton_special_case(g: int) -> bool:
    """With c1..c_{g-1} killed, the g-th Newton power sum is (-1)^{g-1} g c_g."""
    if g < 1:
        raise ValueError("g must be positive")
    cs = class_variables(g, g)
    power_sums: list[GradedPolynomial] = [cs[0].ring_constant(0)]  # index 0 unused
    for k in range(1, g + 1):
        acc = cs[0].ring_constant(0)
        for i in range(1, k):
            term = cs[i - 1] * power_sums[k - i]
            acc = acc + (term if i % 2 else -term)
        tail = k * cs[k - 1]
        acc = acc + (tail if k % 2 else -tail)
        power_sums.append(acc)
    reduced = power_sums[g].substitute_zero(range(g - 1))
    expected = ((-1) ** (g - 1) * g) * cs[g - 1]
    return reduced == expected


def fundamental_relations(g: int, max_degree: int) -> list[GradedPolynomial]:
    """Homogeneous components (degrees 1..max_degree) of
    (1 + l1 + ... + lg)(1 - l1 + l2 - ...) - 1.

    Each component is a relation; the odd ones vanish identically.
    """
    if g < 1:
        raise ValueError("g must be positive")
    if not 1 <= max_degree <= 2 * g:
        raise ValueError("max_degree must lie in 1..2g")
    ls = class_variables(g, 2 * g, symbol="l")
    plus = ls[0].ring_constant(1)
    minus = ls[0].ring_constant(1)
    for i, li in enumerate(ls, start=1):
        plus = plus + li
        minus = minus + (-li if i % 2 else li)
    product = plus * minus - 1
    return [product.homogeneous_component(d) for d in range(1, max_degree + 1)]
