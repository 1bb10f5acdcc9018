"""Polynomials over GF(2) packed into Python ints (bit i = coefficient of X^i)."""

from __future__ import annotations

import re
from dataclasses import dataclass


def pdeg(a: int) -> int:
    """Degree of a packed polynomial; -1 for the zero polynomial."""
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    """Carry-less product."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    shift = 0
    while b:
        if b & 1:
            out ^= a << shift
        b >>= 1
        shift += 1
    return out


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = pdeg(b)
    q = 0
    while a and pdeg(a) >= db:
        s = pdeg(a) - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def pmod(a: int, b: int) -> int:
    return pdivmod(a, b)[1]


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pmulmod(a: int, b: int, mod: int) -> int:
    dm = pdeg(mod)
    a = pmod(a, mod)
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> dm & 1:
            a ^= mod
    return out


def ppowmod(a: int, e: int, mod: int) -> int:
    result = 1
    a = pmod(a, mod)
    while e:
        if e & 1:
            result = pmulmod(result, a, mod)
        a = pmulmod(a, a, mod)
        e >>= 1
    return result


_TERM = re.compile(r"^(?:(\d+)|X(?:\^(\d+))?)$")


@dataclass(frozen=True)
class BinaryPolynomial:
    """Polynomial in GF(2)[X]; ``bits`` holds the coefficient vector."""

    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient mask must be nonnegative")

    @classmethod
    def from_exponents(cls, exps) -> BinaryPolynomial:
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def parse(cls, text: str, var: str = "X") -> BinaryPolynomial:
        """Parse forms like ``X^16 + X^{12} + X + 1`` (LaTeX braces allowed)."""
        s = text.replace("{", "").replace("}", "").replace(" ", "")
        s = s.replace(var, "X").replace(var.lower(), "X")
        if not s:
            raise ValueError("empty polynomial")
        bits = 0
        for term in s.split("+"):
            mt = _TERM.match(term)
            if mt is None:
                raise ValueError(f"cannot parse term {term!r}")
            if mt.group(1) is not None:
                if int(mt.group(1)) % 2:
                    bits ^= 1
            else:
                bits ^= 1 << int(mt.group(2) or 1)
        return cls(bits)

    @property
    def degree(self) -> int:
        return pdeg(self.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def exponents(self) -> list[int]:
        """Exponents with nonzero coefficient, ascending."""
        b = self.bits
        out = []
        i = 0
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return out

    def coefficients(self, length: int | None = None) -> list[int]:
        n = self.degree + 1 if length is None else length
        return [(self.bits >> i) & 1 for i in range(n)]

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(pmul(self.bits, other.bits))

    def __divmod__(self, other: BinaryPolynomial):
        q, r = pdivmod(self.bits, other.bits)
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __mod__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(pmod(self.bits, other.bits))

    def __floordiv__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(pdivmod(self.bits, other.bits)[0])

    def format(self, var: str = "X") -> str:
        """Descending monomial form, e.g. ``X^5 + X^3 + 1``."""
        if self.bits == 0:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{e}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.format()

    def hex(self) -> str:
        return hex(self.bits)


def x_n_minus_1(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)
