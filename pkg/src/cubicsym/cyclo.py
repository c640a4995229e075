"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are stored in the power basis {zeta_N^0, ..., zeta_N^(phi(N)-1)} after
reduction modulo the N-th cyclotomic polynomial, as an integer coefficient
vector over a common positive denominator.  Everything is immutable and
canonical, so equality and hashing are plain tuple comparisons.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic, division is exact over Z
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree, monic."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    if n == 1:
        return (-1, 1)
    p = [0] * (n + 1)
    p[0], p[n] = -1, 1
    for d in divisors(n)[:-1]:
        p = _polydiv_exact(p, cyclotomic_polynomial(d))
    return tuple(p)


class CycContext:
    """Reduction data for one conductor: Phi_N and the table of zeta^i mod Phi_N."""

    __slots__ = ("conductor", "phi", "cyclo", "table")

    def __init__(self, n: int):
        self.conductor = n
        self.cyclo = cyclotomic_polynomial(n)
        self.phi = len(self.cyclo) - 1
        rows: list[tuple[int, ...]] = []
        if self.phi < n:
            base = tuple(-c for c in self.cyclo[: self.phi])
            rows.append(base)
            for _ in range(self.phi + 1, n):
                prev = rows[-1]
                top = prev[-1]
                shifted = [0] + list(prev[:-1])
                if top:
                    for j in range(self.phi):
                        shifted[j] += top * base[j]
                rows.append(tuple(shifted))
        self.table = tuple(rows)


@lru_cache(maxsize=None)
def context(n: int) -> CycContext:
    if n < 1:
        raise ValueError("conductor must be >= 1")
    return CycContext(n)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _polydivmod(a: list[Fraction], b: list[Fraction]):
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for j, bc in enumerate(b):
            r[shift + j] -= c * bc
        _trim(r)
    return q, r


def _polymulsub(s0: list[Fraction], q: list[Fraction], s1: list[Fraction]):
    # s0 - q*s1
    out = list(s0) + [Fraction(0)] * max(len(q) + len(s1) - 1 - len(s0), 0)
    for i, qc in enumerate(q):
        if qc:
            for j, sc in enumerate(s1):
                if sc:
                    out[i + j] -= qc * sc
    return _trim(out)


def _xgcd_poly(a: list[Fraction], b: list[Fraction]):
    # returns (g, s) with s*a = g mod b; g is a nonzero constant when gcd(a, b) = 1
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _polydivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _polymulsub(s0, q, s1)
    return r0, s0


class CycNum:
    """Element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int):
        # use the factory functions; this constructor trusts its input
        self.conductor = conductor
        self.num = num
        self.den = den

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(n: int, nums: list[int], den: int) -> "CycNum":
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        g = den
        for c in nums:
            if c:
                g = gcd(g, c)
        if g == 0:
            return CycNum(n, tuple(nums), 1)
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        if not any(nums):
            den = 1
        return CycNum(n, tuple(nums), den)

    @staticmethod
    def from_vector(n: int, nums: Iterable[int], den: int = 1) -> "CycNum":
        ctx = context(n)
        vec = list(nums)
        if len(vec) != ctx.phi:
            raise ValueError("coefficient vector must have length phi(N)")
        return CycNum._make(n, vec, den)

    @staticmethod
    def rational(value, n: int = 1) -> "CycNum":
        q = Fraction(value)
        ctx = context(n)
        vec = [0] * ctx.phi
        vec[0] = q.numerator
        return CycNum._make(n, vec, q.denominator)

    @staticmethod
    def zero(n: int = 1) -> "CycNum":
        return CycNum.rational(0, n)

    @staticmethod
    def one(n: int = 1) -> "CycNum":
        return CycNum.rational(1, n)

    @staticmethod
    def root(n: int, k: int = 1) -> "CycNum":
        """zeta_N^k."""
        return reduce({k: 1}, n)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return Fraction(self.num[0], self.den)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.conductor != self.conductor:
                raise ValueError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(other, self.conductor)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        da, db = self.den, b.den
        nums = [x * db + y * da for x, y in zip(self.num, b.num)]
        return CycNum._make(self.conductor, nums, da * db)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        da, db = self.den, b.den
        nums = [x * db - y * da for x, y in zip(self.num, b.num)]
        return CycNum._make(self.conductor, nums, da * db)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return CycNum(self.conductor, tuple(-c for c in self.num), self.den)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        n = self.conductor
        ctx = context(n)
        phi = ctx.phi
        out = [0] * n
        bnum = b.num
        for i, x in enumerate(self.num):
            if x:
                for j, y in enumerate(bnum):
                    if y:
                        k = i + j
                        if k >= n:
                            k -= n
                        out[k] += x * y
        if phi < n:
            table = ctx.table
            for k in range(phi, n):
                c = out[k]
                if c:
                    row = table[k - phi]
                    for j in range(phi):
                        if row[j]:
                            out[j] += c * row[j]
        return CycNum._make(n, out[:phi], self.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def inv(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        n = self.conductor
        if self.is_rational():
            q = 1 / self.rational_value()
            return CycNum.rational(q, n)
        ctx = context(n)
        a = [Fraction(c, self.den) for c in self.num]
        b = [Fraction(c) for c in ctx.cyclo]
        g, s = _xgcd_poly(a, b)
        if len(g) != 1:
            raise ArithmeticError("xgcd failed on cyclotomic modulus")
        scale = 1 / g[0]
        raw = {i: c * scale for i, c in enumerate(s)}
        return reduce(raw, n)

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            return self.inv() ** (-e)
        result = CycNum.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- conversion --------------------------------------------------------

    def embed(self, m: int) -> "CycNum":
        """Rewrite in Q(zeta_M); requires conductor | M, value unchanged."""
        n = self.conductor
        if m == n:
            return self
        if m % n != 0:
            raise ValueError(f"cannot embed conductor {n} into {m}")
        step = m // n
        raw = {i * step: Fraction(c, self.den) for i, c in enumerate(self.num) if c}
        return reduce(raw, m)

    def approx(self) -> complex:
        """Floating-point embedding, for debugging only."""
        n = self.conductor
        return sum(
            c * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(self.num) if c
        ) / self.den

    def encode(self) -> str:
        """Textual form `N d c0 c1 ... c_{phi(N)-1}` meaning (sum c_i zeta^i)/d."""
        return " ".join([str(self.conductor), str(self.den)] + [str(c) for c in self.num])

    @staticmethod
    def parse(text: str) -> "CycNum":
        parts = text.split()
        if len(parts) < 2:
            raise ValueError(f"bad cyclotomic number encoding: {text!r}")
        n, den = int(parts[0]), int(parts[1])
        if den <= 0:
            raise ValueError("denominator must be positive")
        nums = [int(p) for p in parts[2:]]
        return CycNum.from_vector(n, nums, den)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other, self.conductor)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (
            self.conductor == other.conductor
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        return hash((self.conductor, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            q = self.rational_value()
            return f"Cyc({q}, N={self.conductor})"
        return f"Cyc([{' '.join(map(str, self.num))}]/{self.den}, N={self.conductor})"


def reduce(raw: Mapping[int, object], n: int) -> CycNum:
    """Canonical CycNum equal to sum_k raw[k] * zeta_N^k (exponents arbitrary)."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    ctx = context(n)
    acc = [Fraction(0)] * n
    for k, coeff in raw.items():
        acc[k % n] += Fraction(coeff)
    den = 1
    for f in acc:
        den = den * f.denominator // gcd(den, f.denominator)
    vec = [int(f * den) for f in acc]
    phi = ctx.phi
    if phi < n:
        table = ctx.table
        for k in range(phi, n):
            c = vec[k]
            if c:
                row = table[k - phi]
                for j in range(phi):
                    if row[j]:
                        vec[j] += c * row[j]
    return CycNum._make(n, vec[:phi], den)


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.root(n, k)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def common_conductor(*conductors: int) -> int:
    n = 1
    for c in conductors:
        n = lcm(n, c)
    return n


def multiplicative_order(a: CycNum, cap: int = 10_000) -> int | None:
    """Smallest k >= 1 with a^k = 1, or None if it exceeds cap."""
    one = CycNum.one(a.conductor)
    x = a
    for k in range(1, cap + 1):
        if x == one:
            return k
        x = x * a
    return None
