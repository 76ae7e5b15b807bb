"""Exact arithmetic in cyclotomic fields.

A value of order ``n`` is stored as its coefficient vector in the power basis
``1, z, ..., z^(d-1)`` of Q(z), ``z = exp(2 pi i / n)``, ``d = phi(n)``,
i.e. reduced modulo the n-th cyclotomic polynomial.  That normal form is
unique, so equality at a common order is structural.  Values of different
orders are lifted to the lcm before combining.  Rational values are always
stored at order 1.

Printing: rationals as ``num/den``; otherwise the nonzero power-basis terms in
increasing exponent, ``c*E(n)^k`` (``E(n)`` for k = 1, bare ``c`` for k = 0).
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = ["Cyclotomic", "E", "cyclotomic_polynomial", "as_cyclotomic", "parse_cyclotomic"]


def _mobius_int(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num, den):
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        q = num[i]  # den is monic
        out[i - dn] = q
        if q:
            for j in range(dn + 1):
                num[i - dn + j] -= q * den[j]
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _reduce(vec, n):
    """Reduce a coefficient list (any length) modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    vec = list(vec)
    for i in range(len(vec) - 1, d - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - d
            for j in range(d):
                pj = phi[j]
                if pj:
                    vec[base + j] -= c * pj
    vec = vec[:d] + [0] * (d - len(vec))
    return vec


class Cyclotomic:
    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs):
        """Trusted constructor: ``coeffs`` already reduced, length phi(n)."""
        coeffs = tuple(Fraction(x) for x in coeffs)
        if n > 1 and not any(coeffs[1:]):
            n, coeffs = 1, coeffs[:1]
        self.n = n
        self.c = coeffs

    # construction ---------------------------------------------------------
    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        return cls(1, (Fraction(q),))

    @classmethod
    def from_exponents(cls, n: int, terms) -> "Cyclotomic":
        """Sum of ``c * z^k`` for ``(k, c)`` in ``terms`` (mapping or pairs)."""
        items = terms.items() if hasattr(terms, "items") else terms
        vec = [Fraction(0)] * n
        for k, c in items:
            vec[k % n] += Fraction(c)
        return cls(n, _reduce(vec, n))

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls.from_exponents(n, {k: 1})

    # structure ------------------------------------------------------------
    def is_rational(self) -> bool:
        return self.n == 1

    def to_rational(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def is_integer(self) -> bool:
        return self.n == 1 and self.c[0].denominator == 1

    def to_int(self) -> int:
        q = self.to_rational()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def lift(self, m: int) -> tuple:
        """Coefficient vector at order ``m`` (a multiple of ``self.n``)."""
        if m == self.n:
            return self.c
        if m % self.n:
            raise ValueError(f"order {m} is not a multiple of {self.n}")
        step = m // self.n
        vec = [Fraction(0)] * m
        for k, c in enumerate(self.c):
            if c:
                vec[(k * step) % m] += c
        return tuple(_reduce(vec, m))

    def _common(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return None, None, None
        if self.n == other.n:
            return self.n, self.c, other.c
        m = self.n * other.n // math.gcd(self.n, other.n)
        return m, self.lift(m), other.lift(m)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and self.n == 1:
            return Cyclotomic(1, (self.c[0] + other,))
        m, a, b = self._common(other)
        if m is None:
            return NotImplemented
        return Cyclotomic(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-x for x in self.c])

    def __sub__(self, other):
        m, a, b = self._common(other)
        if m is None:
            return NotImplemented
        return Cyclotomic(m, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.n, [x * other for x in self.c])
        if isinstance(other, Cyclotomic) and other.n == 1:
            q = other.c[0]
            return Cyclotomic(self.n, [x * q for x in self.c])
        if self.n == 1 and isinstance(other, Cyclotomic):
            q = self.c[0]
            return Cyclotomic(other.n, [x * q for x in other.c])
        m, a, b = self._common(other)
        if m is None:
            return NotImplemented
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(m, _reduce(prod, m))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.n == 1:
            if not self.c[0]:
                raise ZeroDivisionError("cyclotomic zero")
            return Cyclotomic(1, (1 / self.c[0],))
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero")
        # x^-1 = prod_{sigma != 1} sigma(x) / N(x)
        units = [a for a in range(2, self.n) if math.gcd(a, self.n) == 1]
        prod = Cyclotomic.rational(1)
        for a in units:
            prod = prod * self.galois(a)
        norm = (self * prod).to_rational()
        return prod * (1 / norm)

    def __truediv__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_cyclotomic(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, a: int) -> "Cyclotomic":
        """Image under z -> z^a (``gcd(a, n) = 1``)."""
        if self.n == 1:
            return self
        return Cyclotomic.from_exponents(self.n, {(k * a) % self.n: c for k, c in enumerate(self.c) if c})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.n == 1 and self.c[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.n == 1 or other.n == 1:
            return self.n == other.n and self.c == other.c
        m, a, b = self._common(other)
        return a == b

    def __hash__(self):
        if self.n == 1:
            return hash(self.c[0])
        # normalized trace Tr(x)/[Q(z):Q] does not depend on the ambient order
        total = Fraction(0)
        for k, c in enumerate(self.c):
            if c:
                g = self.n // math.gcd(self.n, k)
                total += c * _mobius_int(g) / _phi(g)
        return hash(("cyc", total))

    def __complex__(self):
        return complex(sum(float(c) * cmath.exp(2j * math.pi * k / self.n) for k, c in enumerate(self.c) if c))

    def __float__(self):
        return float(self.to_rational())

    # text -----------------------------------------------------------------
    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        if self.n == 1:
            return _fmt_q(self.c[0])
        parts = []
        for k, c in enumerate(self.c):
            if not c:
                continue
            if k == 0:
                parts.append(_fmt_q(c))
                continue
            root = f"E({self.n})" if k == 1 else f"E({self.n})^{k}"
            if c == 1:
                parts.append(root)
            elif c == -1:
                parts.append("-" + root)
            else:
                parts.append(f"{_fmt_q(c)}*{root}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out

    def to_record(self) -> dict:
        return {"order": self.n, "coeffs": [_fmt_q(c) for c in self.c]}

    @classmethod
    def from_record(cls, rec) -> "Cyclotomic":
        n = int(rec["order"])
        coeffs = [Fraction(c) for c in rec["coeffs"]]
        if len(coeffs) != _phi(n):
            coeffs = _reduce(coeffs, n)
        return cls(n, coeffs)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_cyclotomic(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return Cyclotomic(1, (Fraction(x),))
    return NotImplemented


def E(n: int) -> Cyclotomic:
    """Primitive n-th root of unity exp(2 pi i / n)."""
    return Cyclotomic.root_of_unity(n, 1)


ZERO = Cyclotomic(1, (Fraction(0),))
ONE = Cyclotomic(1, (Fraction(1),))

_TERM = re.compile(r"^(?:(?P<c>[+-]?\d+(?:/\d+)?)\*)?(?P<sign>-)?E\((?P<n>\d+)\)(?:\^(?P<k>\d+))?$")


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Inverse of ``str(Cyclotomic)``."""
    text = text.strip()
    if not text:
        raise ValueError("empty cyclotomic literal")
    tokens = re.split(r"\s+([+-])\s+", text)
    terms = [(1, tokens[0])]
    for i in range(1, len(tokens), 2):
        terms.append((1 if tokens[i] == "+" else -1, tokens[i + 1]))
    total = ZERO
    for sign, tok in terms:
        m = _TERM.match(tok)
        if m is None:
            total = total + sign * Fraction(tok)
            continue
        c = Fraction(m.group("c")) if m.group("c") else Fraction(1)
        if m.group("sign"):
            c = -c
        n = int(m.group("n"))
        k = int(m.group("k") or 1)
        total = total + Cyclotomic.from_exponents(n, {k: sign * c})
    return total
