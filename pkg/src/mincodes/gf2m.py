"""Arithmetic in GF(2^m) for 2 <= m <= 16 via log/antilog tables.

Elements are ints whose bits are coordinates in the power basis of the root
of the field's modulus. The field also fixes a primitive element ``alpha``;
every code in the package indexes its coordinates by the enumeration
``P_0 = 0, P_j = alpha^(j-1)``.
"""

from __future__ import annotations

from functools import cached_property
from math import gcd

import numpy as np

from .errors import BadParams, NotIrreducible, NotPrimitive
from .poly2 import pdeg, pgcd, pmod, ppowmod

M_MIN, M_MAX = 2, 16


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: int) -> bool:
    """Rabin's test over GF(2)."""
    m = pdeg(poly)
    if m < 1:
        return False
    if m == 1:
        return True
    x = 0b10
    if ppowmod(x, 1 << m, poly) != x:
        return False
    for p in prime_factors(m):
        h = ppowmod(x, 1 << (m // p), poly) ^ x
        if pgcd(poly, pmod(h, poly)) != 1:
            return False
    return True


def is_primitive(poly: int) -> bool:
    """True iff ``poly`` is irreducible and X has order 2^m - 1 modulo it."""
    if not is_irreducible(poly):
        return False
    m = pdeg(poly)
    n = (1 << m) - 1
    return all(ppowmod(0b10, n // p, poly) != 1 for p in prime_factors(n))


def smallest_primitive_poly(m: int) -> int:
    for poly in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_primitive(poly):
            return poly
    raise AssertionError("no primitive polynomial found")  # pragma: no cover


class FieldSpec:
    """GF(2^m) with a fixed primitive element.

    ``modulus`` is the polynomial used for the bit representation. ``alpha``
    is ``x^generator_exponent`` reduced modulo it; for fields made by
    :func:`build_field` the exponent is 1, so ``alpha`` is the root of
    ``modulus`` and ``primitive_poly == modulus``. Instances are immutable.
    """

    def __init__(self, m, modulus, generator_exponent, exp, log, trace_mask):
        self.m = m
        self.modulus = modulus
        self.generator_exponent = generator_exponent
        self.exp = exp
        self.log = log
        self.trace_mask = trace_mask
        self.exp.setflags(write=False)
        self.log.setflags(write=False)
        self._exp = exp.tolist()
        self._log = log.tolist()

    def __repr__(self):
        return (f"FieldSpec(m={self.m}, modulus={hex(self.modulus)}, "
                f"alpha=x^{self.generator_exponent})")

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def order(self) -> int:
        """Order of the multiplicative group, 2^m - 1."""
        return (1 << self.m) - 1

    @property
    def alpha(self) -> int:
        return self._exp[1]

    @cached_property
    def primitive_poly(self) -> int:
        """Minimal polynomial of ``alpha`` as a bit mask."""
        if self.generator_exponent == 1:
            return self.modulus
        return minimal_polynomial(self, self.alpha)

    def alpha_pow(self, e: int) -> int:
        return self._exp[e % self.order]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(-self._log[a]) % self.order]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self.order]

    def sqrt(self, a: int) -> int:
        return self.power(a, 1 << (self.m - 1))

    def discrete_log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def subfield_trace(self, a: int, d: int) -> int:
        """Absolute trace of ``a`` viewed in the subfield GF(2^d)."""
        if self.m % d:
            raise BadParams(f"GF(2^{d}) is not a subfield of GF(2^{self.m})")
        s = 0
        x = a
        for _ in range(d):
            s ^= x
            x = self.mul(x, x)
        if s not in (0, 1):
            raise ValueError("element does not lie in the subfield")
        return s

    # vectorized helpers -------------------------------------------------

    @cached_property
    def trace_table(self) -> np.ndarray:
        vals = np.arange(self.q, dtype=np.int64) & self.trace_mask
        t = (np.bitwise_count(vals) & 1).astype(np.uint8)
        t.setflags(write=False)
        return t

    @cached_property
    def points(self) -> np.ndarray:
        """P_0 = 0, P_j = alpha^(j-1) as an int64 array of length 2^m."""
        p = np.concatenate(([0], self.exp)).astype(np.int64)
        p.setflags(write=False)
        return p

    @cached_property
    def point_index(self) -> np.ndarray:
        """Inverse of :attr:`points`: element value -> enumeration index."""
        idx = np.empty(self.q, dtype=np.int64)
        idx[self.points] = np.arange(self.q)
        idx.setflags(write=False)
        return idx

    def index_of(self, a: int) -> int:
        return 0 if a == 0 else self._log[a] + 1

    def mul_vec(self, xs: np.ndarray, a: int) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if a == 0:
            return np.zeros_like(xs)
        la = self._log[a]
        out = self.exp[(self.log[xs] + la) % self.order].astype(np.int64)
        out[xs == 0] = 0
        return out

    def pow_vec(self, xs: np.ndarray, e: int) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        out = self.exp[(self.log[xs] * e) % self.order].astype(np.int64)
        out[xs == 0] = 0 if e else 1
        return out

    def with_primitive_exponent(self, e: int) -> FieldSpec:
        """Same field, with ``alpha`` replaced by ``alpha^e`` (gcd(e, 2^m-1) = 1)."""
        n = self.order
        if gcd(e, n) != 1:
            raise NotPrimitive(f"alpha^{e} is not primitive (gcd with {n} is {gcd(e, n)})")
        exp = self.exp[(np.arange(n, dtype=np.int64) * (e % n)) % n].astype(self.exp.dtype)
        log = np.full(self.q, -1, dtype=np.int64)
        log[exp] = np.arange(n)
        ge = (self.generator_exponent * e) % n
        return FieldSpec(self.m, self.modulus, ge, exp, log, self.trace_mask)

    def subfield_basis(self, d: int) -> list[int]:
        """Power basis 1, b, ..., b^(d-1) of GF(2^d), b = alpha^((2^m-1)/(2^d-1))."""
        if self.m % d:
            raise BadParams(f"GF(2^{d}) is not a subfield of GF(2^{self.m})")
        b = self.alpha_pow(self.order // ((1 << d) - 1))
        return [self.power(b, i) for i in range(d)]


def build_field(m: int, primitive_poly: int | None = None) -> FieldSpec:
    """Construct GF(2^m) whose primitive element is a root of ``primitive_poly``.

    With no polynomial, the smallest primitive polynomial of degree m (by
    integer value of its bit mask) is used.
    """
    if not M_MIN <= m <= M_MAX:
        raise BadParams(f"m must lie in [{M_MIN}, {M_MAX}], got {m}")
    if primitive_poly is None:
        primitive_poly = smallest_primitive_poly(m)
    primitive_poly = int(primitive_poly)
    if pdeg(primitive_poly) != m:
        raise BadParams(f"polynomial {hex(primitive_poly)} does not have degree {m}")
    if not is_irreducible(primitive_poly):
        raise NotIrreducible(f"{hex(primitive_poly)} is reducible over GF(2)")
    n = (1 << m) - 1
    exp = [0] * n
    log = [-1] * (1 << m)
    x = 1
    top = 1 << m
    for i in range(n):
        if log[x] != -1:
            raise NotPrimitive(f"root of {hex(primitive_poly)} has order {i} < {n}")
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & top:
            x ^= primitive_poly
    if x != 1:  # pragma: no cover - implied by the loop above
        raise NotPrimitive(hex(primitive_poly))

    # Tr(x^i) for the power-basis vectors x^i = exp[i], i < m.
    mask = 0
    for i in range(m):
        s, y = 0, exp[i]
        for _ in range(m):
            s ^= y
            y = exp[(2 * log[y]) % n]
        if s not in (0, 1):  # pragma: no cover
            raise AssertionError("trace left GF(2)")
        mask |= s << i
    return FieldSpec(m, primitive_poly, 1,
                     np.array(exp, dtype=np.int64), np.array(log, dtype=np.int64), mask)


def trace(field: FieldSpec, a: int) -> int:
    return field.trace(a)


def point_enumeration(field: FieldSpec) -> list[int]:
    return field.points.tolist()


def cyclotomic_coset(s: int, n: int) -> list[int]:
    out = []
    x = s % n
    while x not in out:
        out.append(x)
        x = (2 * x) % n
    return out


def primitive_conjugacy_classes(field_or_m) -> list[list[int]]:
    """Doubling orbits of the exponents e with gcd(e, 2^m - 1) = 1.

    Each class is sorted, and classes are ordered by their smallest member.
    """
    m = field_or_m if isinstance(field_or_m, int) else field_or_m.m
    n = (1 << m) - 1
    seen = set()
    classes = []
    for e in range(1, n):
        if e in seen or gcd(e, n) != 1:
            continue
        cls = sorted(cyclotomic_coset(e, n))
        seen.update(cls)
        classes.append(cls)
    if n == 1:  # pragma: no cover - m >= 2
        classes.append([0])
    return classes


def expand_roots(field: FieldSpec, roots) -> list[int]:
    """Coefficients (low degree first) of prod (X - r) over GF(2^m)."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= field.mul(c, r)
        coeffs = nxt
    return coeffs


def minimal_polynomial(field: FieldSpec, a: int) -> int:
    """Minimal polynomial of ``a`` over GF(2), as a bit mask."""
    conj = []
    x = a
    while x not in conj:
        conj.append(x)
        x = field.mul(x, x)
    coeffs = expand_roots(field, conj)
    bits = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):  # pragma: no cover
            raise AssertionError("minimal polynomial coefficient outside GF(2)")
        bits |= c << i
    return bits
