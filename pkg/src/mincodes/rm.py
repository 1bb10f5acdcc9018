"""Reed-Muller codes, their cyclic generator polynomials, and quadratic subcodes.

Cyclic-code convention: a vector of length N = 2^m - 1 is the polynomial
sum c_i X^i, and coordinate i sits at the point alpha^i (enumeration index
i + 1). Polynomial bit masks are therefore directly codeword rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import gf2
from .boolfun import BooleanFunction, SupportSet, bits_from_values, monomials
from .codes import LinearCode, code_from_functions, puncture, shorten
from .errors import BadEpsilon, BadOrder, BadParams, EvenM, MTooSmall
from .gf2m import FieldSpec, cyclotomic_coset, minimal_polynomial
from .poly2 import BinaryPolynomial, pdivmod, pmul

DIRECT_EXPANSION_MAX_N = 1023


# Reed-Muller codes by evaluation --------------------------------------------

def monomial_function(field: FieldSpec, mask: int) -> BooleanFunction:
    """x -> prod_{i in mask} x_i, with x_i the i-th power-basis coordinate."""
    pts = field.points
    return BooleanFunction(field, bits_from_values((pts & mask) == mask))


def rm_functions(field: FieldSpec, order: int) -> list[BooleanFunction]:
    return [monomial_function(field, s) for s in monomials(field.m, order)]


def _check_order(field: FieldSpec, order: int, top: int):
    if not 0 <= order <= top:
        raise BadOrder(f"order must lie in [0, {top}], got {order}")


def rm_code(field: FieldSpec, order: int) -> LinearCode:
    """RM(order, m) on all 2^m points."""
    _check_order(field, order, field.m)
    return code_from_functions(field, rm_functions(field, order))


def prm_code(field: FieldSpec, order: int) -> LinearCode:
    """RM(order, m) punctured at P_0 = 0."""
    _check_order(field, order, field.m - 1)
    return puncture(rm_code(field, order), range(1, field.q))


def srm_code(field: FieldSpec, order: int) -> LinearCode:
    """RM(order, m) shortened at P_0 = 0."""
    _check_order(field, order, field.m - 1)
    return shorten(rm_code(field, order), [0])


# generator polynomials -----------------------------------------------------

def _expand_direct(field: FieldSpec, exponents) -> int:
    """prod (X - alpha^s) expanded over GF(2^m); every coefficient must be 0 or 1."""
    exps = list(exponents)
    coeffs = np.zeros(len(exps) + 1, dtype=np.int64)
    coeffs[0] = 1
    for d, s in enumerate(exps, start=1):
        r = field.alpha_pow(s)
        shifted = coeffs[:d].copy()
        coeffs[:d] = field.mul_vec(coeffs[:d], r)
        coeffs[1:d + 1] ^= shifted
    if np.any(coeffs > 1):
        raise AssertionError("generator polynomial has a coefficient outside GF(2)")
    return bits_from_values(coeffs)


def _expand_by_cosets(field: FieldSpec, exponents) -> int:
    n = field.order
    todo = set(exponents)
    g = 1
    while todo:
        s = min(todo)
        coset = set(cyclotomic_coset(s, n))
        if not coset <= todo:
            raise AssertionError("root set not closed under conjugation")
        todo -= coset
        g = pmul(g, minimal_polynomial(field, field.alpha_pow(s)))
    return g


def poly_from_exponents(field: FieldSpec, exponents) -> BinaryPolynomial:
    """Binary polynomial with roots alpha^s for the given (conjugation-closed) exponents."""
    exps = sorted(set(exponents))
    if field.order <= DIRECT_EXPANSION_MAX_N:
        return BinaryPolynomial(_expand_direct(field, exps))
    return BinaryPolynomial(_expand_by_cosets(field, exps))


def _root_exponents(field: FieldSpec, lo: int, hi: int) -> list[int]:
    return [s for s in range(field.order) if lo <= s.bit_count() <= hi]


def prm_generator_poly(field: FieldSpec, order: int) -> BinaryPolynomial:
    """Generator of PRM(order, m): roots alpha^s with 1 <= wt2(s) <= m-1-order."""
    _check_order(field, order, field.m - 1)
    return poly_from_exponents(field, _root_exponents(field, 1, field.m - 1 - order))


def srm_generator_poly(field: FieldSpec, order: int) -> BinaryPolynomial:
    """Generator of SRM(order, m): additionally has the root 1."""
    _check_order(field, order, field.m - 1)
    return poly_from_exponents(field, _root_exponents(field, 0, field.m - 1 - order))


def _cofactor(field: FieldSpec, g: BinaryPolynomial) -> BinaryPolynomial:
    q, r = pdivmod((1 << field.order) | 1, g.bits)
    if r:
        raise AssertionError("generator does not divide X^N - 1")
    return BinaryPolynomial(q)


def prm_check_poly(field: FieldSpec, order: int) -> BinaryPolynomial:
    return _cofactor(field, prm_generator_poly(field, order))


def srm_check_poly(field: FieldSpec, order: int) -> BinaryPolynomial:
    return _cofactor(field, srm_generator_poly(field, order))


def cyclic_shift(row: int, i: int, n: int) -> int:
    """X^i * row mod X^n - 1."""
    i %= n
    full = (1 << n) - 1
    return ((row << i) | (row >> (n - i))) & full


def cyclic_code(field: FieldSpec, g: BinaryPolynomial, dim: int | None = None) -> LinearCode:
    """Code with rows X^i g(X), i < dim (default: N - deg g)."""
    n = field.order
    k = n - g.degree if dim is None else dim
    rows = [cyclic_shift(g.bits, i, n) for i in range(k)]
    return LinearCode.from_rows(n, rows, coordinates=range(1, field.q), field=field)


def divides_codeword(g: BinaryPolynomial, row: int) -> bool:
    return pdivmod(row, g.bits)[1] == 0


def subcode_c_epsilon(field: FieldSpec, eps: int) -> LinearCode:
    """Span of X^i g*_2(X) for i < eps, a subcode of SRM(2, m)."""
    m = field.m
    if m < 3:
        raise MTooSmall("need m >= 3")
    if not 1 <= eps < m * (m - 1) // 2:
        raise BadEpsilon(f"eps must lie in [1, {m * (m - 1) // 2 - 1}], got {eps}")
    return cyclic_code(field, srm_generator_poly(field, 2), eps)


# quadratic forms -----------------------------------------------------------

@dataclass(frozen=True)
class QuadraticForm:
    """sum_i Tr(a_i x^(2^i+1)) + Tr(a_0 x) + c.

    ``quad`` maps i to a_i for 1 <= i <= floor(m/2). For even m the i = m/2
    term uses a_{m/2} in GF(2^{m/2}) and the trace from that subfield.
    """

    field: FieldSpec
    quad: dict = dc_field(default_factory=dict)
    linear: int = 0
    const: int = 0

    def function(self) -> BooleanFunction:
        fld = self.field
        m = fld.m
        bits = BooleanFunction.trace_form(fld, self.linear).bits if self.linear else 0
        for i, a in self.quad.items():
            if not 1 <= i <= m // 2:
                raise BadParams(f"quadratic index {i} outside [1, {m // 2}]")
            if not a:
                continue
            bits ^= quadratic_term(fld, i, a).bits
        if self.const & 1:
            bits ^= (1 << fld.q) - 1
        return BooleanFunction(fld, bits)


def quadratic_term(field: FieldSpec, i: int, a: int) -> BooleanFunction:
    m = field.m
    if 2 * i == m:
        return BooleanFunction.subfield_trace_form(field, a, (1 << i) + 1, m // 2)
    return BooleanFunction.trace_form(field, a, (1 << i) + 1)


def _quad_block(field: FieldSpec, i: int) -> list[BooleanFunction]:
    m = field.m
    basis = field.subfield_basis(m // 2) if 2 * i == m else [field.alpha_pow(j) for j in range(m)]
    return [quadratic_term(field, i, a) for a in basis]


def _assert_rank(code: LinearCode, k: int):
    if code.k != k:
        raise AssertionError(f"expected dimension {k}, got {code.k}")


def quad_functions_odd(field: FieldSpec) -> list[BooleanFunction]:
    m = field.m
    if m < 3:
        raise MTooSmall("need m >= 3")
    if m % 2 == 0:
        raise EvenM(f"the pure quadratic code needs odd m, got {m}")
    out = []
    for i in range(1, (m - 1) // 2 + 1):
        out.extend(_quad_block(field, i))
    return out


def quad_functions_mixed(field: FieldSpec) -> list[BooleanFunction]:
    m = field.m
    if m < 3:
        raise MTooSmall("need m >= 3")
    out = []
    for i in range(2, m // 2 + 1):
        out.extend(_quad_block(field, i))
    out.extend(BooleanFunction.trace_form(field, field.alpha_pow(j)) for j in range(m))
    return out


def quad_code_odd(field: FieldSpec) -> LinearCode:
    """Tr(a x^(2^i+1)), 1 <= i <= (m-1)/2, on GF(2^m)*."""
    code = code_from_functions(field, quad_functions_odd(field), SupportSet.nonzero(field))
    _assert_rank(code, field.m * (field.m - 1) // 2)
    return code


def quad_code_mixed(field: FieldSpec) -> LinearCode:
    """Tr(a x^(2^i+1)), 2 <= i <= m/2, plus Tr(b x), on GF(2^m)*."""
    code = code_from_functions(field, quad_functions_mixed(field), SupportSet.nonzero(field))
    _assert_rank(code, field.m * (field.m - 1) // 2)
    return code


# flats ------------------------------------------------------------------------

def is_affine_flat(elements, dim: int) -> bool:
    """True iff the field elements form a coset of a dim-dimensional subspace."""
    els = sorted(int(e) for e in elements)
    if len(els) != 1 << dim:
        return False
    base = els[0]
    diffs = [e ^ base for e in els]
    if gf2.rank(diffs) != dim:
        return False
    return True


def support_elements(code: LinearCode, word: int) -> list[int]:
    """Field elements at the support of a codeword of a code with point labels."""
    pts = code.field.points
    return [int(pts[code.coordinates[j]]) for j in range(code.n) if word >> j & 1]
