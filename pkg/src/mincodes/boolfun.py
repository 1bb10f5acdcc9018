"""Boolean and vectorial Boolean functions on GF(2^m).

Truth tables are Python ints with bit ``i`` equal to ``f(P_i)`` in the
field's point enumeration. Algebraic degree and annihilators use the ANF in
the bit coordinates of the field elements (the modulus power basis); degree
does not depend on that choice.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import gf2
from .errors import (BadBreakpoints, BadParams, BadSize, ConstantFunction,
                     DependentMasks, FieldMismatch)
from .gf2m import FieldSpec


@functools.total_ordering
class _Infinite:
    """Signed infinity used for AI(empty set), AI(whole field) and deg(0)."""

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "-inf" if self.sign < 0 else "+inf"

    __str__ = __repr__

    def __eq__(self, other):
        return isinstance(other, _Infinite) and other.sign == self.sign

    def __hash__(self):
        return hash(("_Infinite", self.sign))

    def __lt__(self, other):
        if isinstance(other, _Infinite):
            return self.sign < other.sign
        if isinstance(other, (int, float)):
            return self.sign < 0
        return NotImplemented


NEG_INF = _Infinite(-1)
POS_INF = _Infinite(+1)


def is_finite(v) -> bool:
    return not isinstance(v, _Infinite)


def same_field(a: FieldSpec, b: FieldSpec) -> bool:
    return a is b or (a.m == b.m and a.modulus == b.modulus
                      and a.generator_exponent == b.generator_exponent)


def bits_from_values(values) -> int:
    v = np.asarray(values, dtype=np.uint8) & 1
    return int.from_bytes(np.packbits(v, bitorder="little").tobytes(), "little")


def values_from_bits(bits: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


def _index_bits(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


@dataclass(frozen=True, eq=False)
class SupportSet:
    """Subset of GF(2^m) as a membership mask over the point enumeration."""

    field: FieldSpec
    mask: int

    @classmethod
    def from_indices(cls, field, indices) -> SupportSet:
        return cls(field, _index_bits(indices))

    @classmethod
    def from_elements(cls, field, elements) -> SupportSet:
        return cls(field, _index_bits(field.index_of(int(x)) for x in elements))

    @classmethod
    def full(cls, field) -> SupportSet:
        return cls(field, (1 << field.q) - 1)

    @classmethod
    def nonzero(cls, field) -> SupportSet:
        return cls(field, (1 << field.q) - 2)

    def __eq__(self, other):
        return (isinstance(other, SupportSet) and same_field(self.field, other.field)
                and self.mask == other.mask)

    def __hash__(self):
        return hash((self.field.m, self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, element: int) -> bool:
        return bool(self.mask >> self.field.index_of(element) & 1)

    def __or__(self, other: SupportSet) -> SupportSet:
        return SupportSet(self.field, self.mask | other.mask)

    def __and__(self, other: SupportSet) -> SupportSet:
        return SupportSet(self.field, self.mask & other.mask)

    def __le__(self, other: SupportSet) -> bool:
        return self.mask & ~other.mask == 0

    def indices(self) -> np.ndarray:
        return np.flatnonzero(values_from_bits(self.mask, self.field.q))

    def elements(self) -> np.ndarray:
        return self.field.points[self.indices()]

    def complement(self) -> SupportSet:
        return SupportSet(self.field, ((1 << self.field.q) - 1) & ~self.mask)

    def with_zero(self) -> SupportSet:
        return SupportSet(self.field, self.mask | 1)

    def without_zero(self) -> SupportSet:
        return SupportSet(self.field, self.mask & ~1)

    def characteristic(self) -> BooleanFunction:
        return BooleanFunction(self.field, self.mask)


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    field: FieldSpec
    bits: int

    @classmethod
    def from_values(cls, field, values) -> BooleanFunction:
        values = np.asarray(values)
        if values.shape != (field.q,):
            raise BadSize(f"truth table must have length {field.q}")
        return cls(field, bits_from_values(values))

    @classmethod
    def constant(cls, field, c: int) -> BooleanFunction:
        return cls(field, (1 << field.q) - 1 if c & 1 else 0)

    @classmethod
    def trace_form(cls, field, a: int, exponent: int = 1) -> BooleanFunction:
        """x -> Tr(a x^exponent)."""
        y = field.pow_vec(field.points, exponent)
        return cls(field, bits_from_values(field.trace_table[field.mul_vec(y, a)]))

    @classmethod
    def subfield_trace_form(cls, field, a: int, exponent: int, d: int) -> BooleanFunction:
        """x -> Tr^d_1(a x^exponent); a x^exponent must lie in GF(2^d) for all x."""
        z = field.mul_vec(field.pow_vec(field.points, exponent), a)
        s = z.copy()
        y = z
        for _ in range(d - 1):
            y = field.pow_vec(y, 2)
            s ^= y
        if np.any(s > 1):
            raise BadParams("values do not lie in the subfield")
        return cls(field, bits_from_values(s))

    @classmethod
    def from_hex(cls, field, text: str) -> BooleanFunction:
        return cls(field, int.from_bytes(bytes.fromhex(text), "little"))

    def hex(self) -> str:
        return self.bits.to_bytes((self.field.q + 7) // 8, "little").hex()

    def __eq__(self, other):
        return (isinstance(other, BooleanFunction) and same_field(self.field, other.field)
                and self.bits == other.bits)

    def __hash__(self):
        return hash((self.field.m, self.bits))

    def _check(self, other):
        if not same_field(self.field, other.field):
            raise FieldMismatch("functions live on different fields")

    def __add__(self, other: BooleanFunction) -> BooleanFunction:
        self._check(other)
        return BooleanFunction(self.field, self.bits ^ other.bits)

    def __mul__(self, other: BooleanFunction) -> BooleanFunction:
        self._check(other)
        return BooleanFunction(self.field, self.bits & other.bits)

    def complement(self) -> BooleanFunction:
        """1 + f."""
        return BooleanFunction(self.field, ((1 << self.field.q) - 1) ^ self.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> SupportSet:
        return SupportSet(self.field, self.bits)

    def values(self) -> np.ndarray:
        return values_from_bits(self.bits, self.field.q)

    def is_constant(self) -> bool:
        return self.bits in (0, (1 << self.field.q) - 1)

    def restrict(self, indices) -> int:
        """Values at the given point indices, packed as a row vector."""
        vals = self.values()[np.asarray(indices, dtype=np.int64)]
        return bits_from_values(vals)

    def compose_affine(self, a: int, b: int) -> BooleanFunction:
        """x -> f(a x + b)."""
        field = self.field
        arg = field.mul_vec(field.points, a) ^ b
        return BooleanFunction(field, bits_from_values(self.values()[field.point_index[arg]]))

    @property
    def degree(self):
        return algebraic_degree(self)


@dataclass(frozen=True)
class VectorialFunction:
    field: FieldSpec
    components: tuple

    def __post_init__(self):
        if not 1 <= len(self.components) <= self.field.m:
            raise BadParams("need 1 <= r <= m components")
        for c in self.components:
            if not same_field(c.field, self.field):
                raise FieldMismatch("component on another field")

    @property
    def r(self) -> int:
        return len(self.components)

    def labels(self) -> np.ndarray:
        """F(P_i) as integers sum_j f_j(P_i) 2^j."""
        out = np.zeros(self.field.q, dtype=np.int64)
        for j, c in enumerate(self.components):
            out |= c.values().astype(np.int64) << j
        return out

    def component(self, v: int) -> BooleanFunction:
        """v . F for the mask v (bit j selects f_j)."""
        bits = 0
        for j, c in enumerate(self.components):
            if v >> j & 1:
                bits ^= c.bits
        return BooleanFunction(self.field, bits)

    def preimage(self, y: int) -> SupportSet:
        return SupportSet(self.field, bits_from_values(self.labels() == y))


@dataclass(frozen=True)
class AnnihilatorBasis:
    degree_bound: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def monomials(m: int, t: int) -> list[int]:
    """Monomial masks of degree <= t, ordered by (degree, mask value)."""
    out = []
    for d in range(0, min(t, m) + 1):
        out.extend(sorted(sum(1 << i for i in c) for c in combinations(range(m), d)))
    return out


def interval_support(field: FieldSpec, h: int, delta: int) -> SupportSet:
    """{alpha^h, ..., alpha^(h+delta-1)} with exponents mod 2^m - 1."""
    n = field.order
    if not 1 <= delta <= n:
        raise BadSize(f"delta must lie in [1, {n}], got {delta}")
    idx = 1 + (h + np.arange(delta)) % n
    return SupportSet(field, bits_from_values(np.bincount(idx, minlength=field.q)))


def anf(f: BooleanFunction) -> np.ndarray:
    """ANF coefficients indexed by monomial mask (binary Moebius transform)."""
    field = f.field
    a = f.values()[field.point_index].copy()  # now indexed by element value
    m = field.m
    for i in range(m):
        v = a.reshape(-1, 2, 1 << i)
        v[:, 1, :] ^= v[:, 0, :]
    return a


def algebraic_degree(f: BooleanFunction):
    coeffs = anf(f)
    nz = np.flatnonzero(coeffs)
    if nz.size == 0:
        return NEG_INF
    return int(np.bitwise_count(nz).max())


def _monomial_columns(xs: np.ndarray, monos) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.int64)[:, None]
    s = np.asarray(monos, dtype=np.int64)[None, :]
    return ((xs & s) == s).astype(np.uint8)


def annihilator_space(D: SupportSet, t: int) -> AnnihilatorBasis:
    """Basis of {g : deg g <= t, g = 0 on D} via the nullspace of the evaluation matrix."""
    field = D.field
    m = field.m
    if not 0 <= t <= m:
        raise BadParams(f"degree bound must lie in [0, {m}]")
    monos = monomials(m, t)
    evalm = _monomial_columns(D.elements(), monos)
    rows = [bits_from_values(r) for r in evalm]
    kernel = gf2.nullspace(rows, len(monos))
    full = _monomial_columns(field.points, monos)
    basis = []
    for c in kernel:
        coeff = values_from_bits(c, len(monos)).astype(np.int64)
        vals = (full.astype(np.int64) @ coeff) & 1
        basis.append(BooleanFunction(field, bits_from_values(vals)))
    return AnnihilatorBasis(t, tuple(basis))


def ai_of_set(D: SupportSet):
    """Algebraic immunity of D: least degree of a nonzero annihilator.

    Monomial columns restricted to D are inserted in (degree, mask) order; the
    first column dependent on earlier ones yields an annihilator of exactly
    that degree.
    """
    field = D.field
    if D.mask == 0:
        return NEG_INF
    if len(D) == field.q:
        return POS_INF
    xs = D.elements().astype(np.int64)
    basis = gf2.XorBasis()
    m = field.m
    for d in range(m + 1):
        for c in combinations(range(m), d):
            s = sum(1 << i for i in c)
            col = bits_from_values((xs & s) == s)
            if not basis.insert(col):
                return d
    raise AssertionError("all monomials independent on a proper subset")  # pragma: no cover


def _cumulative(m: int, start: int, upto: int) -> int:
    return sum(comb(m, i) for i in range(start, upto + 1))


def ai_of_interval(m: int, delta: int, include_zero: bool = False):
    """Closed-form AI of [h; delta]_alpha, optionally with 0 adjoined.

    Does not depend on h or alpha.
    """
    n = (1 << m) - 1
    if not 1 <= delta <= n:
        raise BadSize(f"delta must lie in [1, {n}], got {delta}")
    start = 1 if include_zero else 0
    if include_zero and delta == n:
        return POS_INF
    t = 0
    while _cumulative(m, start, t + 1) <= delta:
        t += 1
    return t + 1


def ai_of_function(f: BooleanFunction) -> int:
    if f.is_constant():
        raise ConstantFunction("AI of a constant function is not defined")
    return min(ai_of_set(f.support()), ai_of_set(f.complement().support()))


def ai_of_vectorial(F: VectorialFunction):
    return min(ai_of_set(F.preimage(y)) for y in range(1 << F.r))


def pairwise_preimage_ai_bound_check(F: VectorialFunction, v1: int, v2: int,
                                     e1: int, e2: int):
    """AI of {x : v1.F = e1, v2.F = e2}, checked to be at least AI(F)."""
    full = (1 << F.r) - 1
    if v1 == v2 or not (0 < v1 <= full and 0 < v2 <= full):
        raise DependentMasks("masks must be distinct and nonzero")
    c1, c2 = F.component(v1), F.component(v2)
    if not e1 & 1:
        c1 = c1.complement()
    if not e2 & 1:
        c2 = c2.complement()
    ai = ai_of_set((c1 * c2).support())
    if ai < ai_of_vectorial(F):
        raise AssertionError(f"AI(D) = {ai} below AI(F)")
    return ai


def partition_vectorial(field: FieldSpec, breakpoints, labels=None) -> VectorialFunction:
    """(m, r)-function constant on consecutive runs of powers of alpha.

    Block i is {alpha^j : n_i <= j < n_(i+1)} and receives ``labels[i]``
    (component j of F is bit j of the label); 0 receives ``labels[0]``.
    Labels default to 0, 1, 2, ....
    """
    n = list(breakpoints)
    blocks = len(n) - 1
    r = blocks.bit_length() - 1
    if blocks < 2 or blocks != 1 << r:
        raise BadBreakpoints("need 2^r + 1 breakpoints with r >= 1")
    if n[0] != 0 or n[-1] != field.order or any(a >= b for a, b in zip(n, n[1:])):
        raise BadBreakpoints("breakpoints must increase strictly from 0 to 2^m - 1")
    labels = list(range(blocks)) if labels is None else list(labels)
    if sorted(labels) != list(range(blocks)):
        raise BadBreakpoints("labels must be a permutation of GF(2)^r")
    if labels[0] != 0:
        raise BadBreakpoints("the first block (and 0) must map to the zero vector")
    lab = np.zeros(field.q, dtype=np.int64)
    for i in range(blocks):
        lab[1 + n[i]:1 + n[i + 1]] = labels[i]
    lab[0] = labels[0]
    comps = tuple(BooleanFunction(field, bits_from_values((lab >> j) & 1)) for j in range(r))
    return VectorialFunction(field, comps)


def partition_ai(m: int, breakpoints) -> int:
    """Closed-form AI of :func:`partition_vectorial` output."""
    n = list(breakpoints)
    gaps = [b - a for a, b in zip(n, n[1:])]
    t = 1
    while (_cumulative(m, 1, t) <= gaps[0]
           and all(_cumulative(m, 0, t) <= g for g in gaps[1:])):
        t += 1
    return t


def hamming_distance(f: BooleanFunction, g: BooleanFunction) -> int:
    if not same_field(f.field, g.field):
        raise FieldMismatch("functions live on different fields")
    return (f.bits ^ g.bits).bit_count()
