"""Exact modular, finite-field and truncated p-adic arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable

from sympy import ZZ, Poly, Symbol, isprime, primerange

from .errors import NonResidue, NotAUnit, PrecisionExhausted

DEFAULT_NODE_BUDGET = 10**6
_X = Symbol("x")


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, ascending."""
    return [int(q) for q in primerange(max(lo, 2), hi + 1)]


def ord_p(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or Fraction."""
    if isinstance(n, Fraction):
        return ord_p(n.numerator, p) - ord_p(n.denominator, p)
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def strip_p(n: int, p: int) -> int:
    """Prime-to-p part of a nonzero integer, sign kept."""
    while n % p == 0:
        n //= p
    return n


@total_ordering
@dataclass(frozen=True)
class ResidueClass:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ResidueClass):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ResidueClass(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ResidueClass(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ResidueClass(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ResidueClass(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueClass(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ResidueClass(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> ResidueClass:
        if gcd(self.value, self.modulus) != 1:
            raise NotAUnit(f"{self.value} is not invertible mod {self.modulus}")
        return ResidueClass(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ResidueClass(o, self.modulus).inverse()

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, ResidueClass):
            return (self.value, self.modulus) == (other.value, other.modulus)
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, ResidueClass):
            return NotImplemented
        return (self.modulus, self.value) < (other.modulus, other.value)

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"


@dataclass(frozen=True)
class TruncatedPadic:
    """A p-adic integer known modulo p**precision.

    Zero carries valuation == precision (saturated), not an infinity marker.
    """
    prime: int
    precision: int
    value: ResidueClass
    valuation: int

    @classmethod
    def from_int(cls, x: int, p: int, precision: int) -> TruncatedPadic:
        if precision < 1:
            raise ValueError("precision must be >= 1")
        mod = p**precision
        r = ResidueClass(x, mod)
        v = precision if r.value == 0 else min(ord_p(r.value, p), precision)
        return cls(p, precision, r, v)

    def is_zero(self) -> bool:
        return self.value.value == 0

    def unit_part(self) -> ResidueClass:
        """value / p**valuation, as a unit modulo p**(precision - valuation)."""
        if self.is_zero():
            raise NotAUnit("zero has no unit part")
        rest = self.precision - self.valuation
        return ResidueClass(self.value.value // self.prime**self.valuation, self.prime**rest)

    def __mul__(self, other: TruncatedPadic) -> TruncatedPadic:
        if (self.prime, self.precision) != (other.prime, other.precision):
            raise ValueError("incompatible p-adic parameters")
        return TruncatedPadic.from_int(self.value.value * other.value.value, self.prime, self.precision)

    def __add__(self, other: TruncatedPadic) -> TruncatedPadic:
        if (self.prime, self.precision) != (other.prime, other.precision):
            raise ValueError("incompatible p-adic parameters")
        return TruncatedPadic.from_int(self.value.value + other.value.value, self.prime, self.precision)


class IntegerPolynomial:
    """Dense polynomial over Z, coefficients lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def x(cls) -> IntegerPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, m: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * x + c) % m
        return acc

    def derivative(self) -> IntegerPolynomial:
        return IntegerPolynomial(i * c for i, c in enumerate(self.coefficients) if i)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntegerPolynomial([other])
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntegerPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntegerPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntegerPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntegerPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, IntegerPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntegerPolynomial:
        g = self.content()
        if g == 0:
            return self
        sign = -1 if self.coefficients[-1] < 0 else 1
        return IntegerPolynomial(sign * c // g for c in self.coefficients)

    def squarefree_part(self) -> IntegerPolynomial:
        """f / gcd(f, f') made primitive; same roots as f, all simple."""
        if self.degree < 1:
            return self.primitive()
        # sympy's modular gcd; plain Euclid over Q blows up past degree ~50
        poly = Poly(list(reversed(self.coefficients)), _X, domain=ZZ)
        sqf = poly.sqf_part()
        return IntegerPolynomial(int(c) for c in reversed(sqf.all_coeffs())).primitive()

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coefficients)})"


def _check_odd_prime(l: int):
    if l == 2:
        raise ValueError("l must be an odd prime")
    if __debug__ and not is_prime(l):
        raise ValueError(f"{l} is not prime")


def legendre_symbol(a: int, l: int) -> int:
    """(a/l) for an odd prime l, by the reciprocity (Jacobi) algorithm."""
    _check_odd_prime(l)
    a %= l
    if a == 0:
        return 0
    result = 1
    n = l
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre_euler(a: int, l: int) -> int:
    """(a/l) by Euler's criterion; second route for legendre_symbol."""
    _check_odd_prime(l)
    t = pow(a, (l - 1) // 2, l)
    return -1 if t == l - 1 else t


def sqrt_mod_prime(a: int, l: int) -> ResidueClass:
    """The smaller square root of a modulo the odd prime l."""
    a %= l
    s = legendre_symbol(a, l)
    if s == 0:
        return ResidueClass(0, l)
    if s == -1:
        raise NonResidue(f"{a} is not a square mod {l}")
    if l % 4 == 3:
        r = pow(a, (l + 1) // 4, l)
    else:
        # Tonelli-Shanks
        q, e = l - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        z = 2
        while legendre_symbol(z, l) != -1:
            z += 1
        m, c, t, r = e, pow(z, q, l), pow(a, q, l), pow(a, (q + 1) // 2, l)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % l
                i += 1
            b = pow(c, 1 << (m - i - 1), l)
            m, c = i, b * b % l
            t, r = t * c % l, r * b % l
    assert r * r % l == a
    return ResidueClass(min(r, l - r), l)


def unit_is_pth_power(u, p: int) -> bool:
    """Whether the unit u of Z_p (read mod p**2) is a p-th power; p odd."""
    v = u.value if isinstance(u, ResidueClass) else int(u)
    if v % p == 0:
        raise NotAUnit(f"{v} is divisible by {p}")
    return pow(v, p - 1, p * p) == 1


@dataclass(frozen=True)
class PadicRoot:
    """A root of f in Z_p, isolated by the Hensel condition.

    ``approx`` is congruent to the root modulo p**precision.
    """
    approx: int
    precision: int
    prime: int

    def refine(self, f: IntegerPolynomial, precision: int) -> PadicRoot:
        p, x = self.prime, self.approx
        df = f.derivative()
        while True:
            fx = f(x)
            if fx == 0:
                break
            m = ord_p(df(x), p)
            if ord_p(fx, p) - m >= precision:
                break
            d = df(x) // p**m
            x = (x - (fx // p**m) * pow(d, -1, p**precision)) % p ** (precision + 2 * m + 1)
        return PadicRoot(x % p**precision, precision, p)


def padic_roots(f: IntegerPolynomial, p: int, precision: int,
                node_budget: int = DEFAULT_NODE_BUDGET) -> list[PadicRoot]:
    """All roots of f in Z_p, each to the given precision.

    Branch-and-lift: residues mod p are found by exhaustive scan, then each
    surviving disc is split into its p sub-discs until Hensel's condition
    v(f(r)) > 2 v(f'(r)) isolates exactly one root or f stops vanishing.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has every element as a root")
    g = f.squarefree_part()
    if g.degree < 1:
        return []
    dg = g.derivative()
    roots: dict[int, PadicRoot] = {}
    frontier = [(r, 1) for r in range(p) if g.eval_mod(r, p) == 0]
    nodes = p
    while frontier:
        nxt = []
        for r, k in frontier:
            fr = g(r)
            dr = dg(r)
            m = ord_p(dr, p) if dr else None
            vf = ord_p(fr, p) if fr else None
            if m is not None and m < k and (vf is None or vf > 2 * m):
                # the disc r + p^k Z_p holds at most one root, and holds one
                # iff v(f(r)) - v(f'(r)) >= k
                if vf is None or vf - m >= k:
                    root = PadicRoot(r, k, p).refine(g, precision)
                    roots[root.approx] = root
                continue
            mod = p ** (k + 1)
            for t in range(p):
                s = r + t * p**k
                if g.eval_mod(s, mod) == 0:
                    nxt.append((s, k + 1))
            nodes += p
            if nodes > node_budget:
                raise PrecisionExhausted(f"branching exceeded {node_budget} nodes")
        frontier = nxt
    return [roots[k] for k in sorted(roots)]


def lift_roots_padic(f: IntegerPolynomial, p: int, N: int,
                     node_budget: int = DEFAULT_NODE_BUDGET) -> set[ResidueClass]:
    """Residues mod p**N of the roots of f in Z_p."""
    if N < 1:
        raise ValueError("precision must be >= 1")
    mod = p**N
    return {ResidueClass(r.approx, mod) for r in padic_roots(f, p, N, node_budget)}


def is_square_qp(x: int, p: int) -> bool:
    """Whether the nonzero integer x is a square in Q_p, p odd."""
    v = ord_p(x, p)
    return v % 2 == 0 and legendre_symbol(strip_p(x, p), p) == 1
