from math import comb

import pytest

from mincodes import build_field
from mincodes.boolfun import BooleanFunction, algebraic_degree
from mincodes.codes import (code_from_functions, codewords, contains, is_minimal_ab, same_code,
                            unpack_row, weight_distribution)
from mincodes.errors import BadEpsilon, BadOrder, EvenM, MTooSmall
from mincodes.poly2 import BinaryPolynomial, pmul
from mincodes.rm import (QuadraticForm, cyclic_code, cyclic_shift, divides_codeword,
                         is_affine_flat, prm_check_poly, prm_code, prm_generator_poly,
                         quad_code_mixed, quad_code_odd, quad_functions_mixed, quadratic_term,
                         rm_code, srm_check_poly, srm_code, srm_generator_poly,
                         subcode_c_epsilon, support_elements, _expand_by_cosets, _expand_direct,
                         _root_exponents)

F5 = build_field(5, 0b101001)


def test_rm_dimensions():
    for m in range(2, 7):
        fld = build_field(m)
        for r in range(m + 1):
            assert rm_code(fld, r).k == sum(comb(m, i) for i in range(r + 1))


def test_bad_order():
    with pytest.raises(BadOrder):
        prm_code(F5, 5)
    with pytest.raises(BadOrder):
        prm_generator_poly(F5, -1)


def test_prm_generator_degree():
    assert prm_generator_poly(F5, 4).bits == 1
    assert prm_generator_poly(F5, 2).degree == 15
    for m in range(3, 8):
        fld = build_field(m)
        for r in range(m):
            g = prm_generator_poly(fld, r)
            assert g.degree == fld.order - sum(comb(m, j) for j in range(r + 1))
            assert srm_generator_poly(fld, r) == g * BinaryPolynomial(0b11)


def test_generator_roots():
    for r in range(4):
        g = prm_generator_poly(F5, r)
        for s in range(1, 31):
            if s.bit_count() == 4 - r:
                # evaluate g at alpha^s
                acc = 0
                for e in g.exponents():
                    acc ^= F5.alpha_pow(e * s)
                assert acc == 0


def test_check_polys():
    for m in (4, 5, 6):
        fld = build_field(m)
        for r in range(m):
            full = (1 << fld.order) | 1
            assert pmul(prm_generator_poly(fld, r).bits, prm_check_poly(fld, r).bits) == full
            assert pmul(srm_generator_poly(fld, r).bits, srm_check_poly(fld, r).bits) == full


def test_two_expansions_agree():
    for m in (5, 6, 8, 10):
        fld = build_field(m)
        exps = _root_exponents(fld, 0, m - 3)
        assert _expand_direct(fld, exps) == _expand_by_cosets(fld, exps)


def test_large_field_generator():
    fld = build_field(11)
    g = srm_generator_poly(fld, 2)
    assert g.degree == fld.order - (comb(11, 0) + comb(11, 1) + comb(11, 2)) + 1


def test_cyclic_codes_equal_evaluation_codes():
    for m in (4, 5, 6):
        fld = build_field(m)
        for r in range(m):
            pc = cyclic_code(fld, prm_generator_poly(fld, r))
            sc = cyclic_code(fld, srm_generator_poly(fld, r))
            assert same_code(pc, prm_code(fld, r))
            assert same_code(sc, srm_code(fld, r))
            assert all(divides_codeword(srm_generator_poly(fld, r), row)
                       for row in srm_code(fld, r).generators)


def test_cyclic_shift():
    assert cyclic_shift(0b1001, 1, 4) == 0b0011
    assert cyclic_shift(0b1001, 5, 4) == 0b0011


def test_minimum_weights():
    for m in (3, 4, 5):
        fld = build_field(m)
        for r in range(1, m - 1):
            assert weight_distribution(prm_code(fld, r)).w_min == (1 << (m - r)) - 1
            assert weight_distribution(srm_code(fld, r)).w_min == 1 << (m - r)


def test_srm_min_weight_words_are_flats():
    for m in (3, 4, 5):
        fld = build_field(m)
        for r in (1, 2):
            if r >= m:
                continue
            code = srm_code(fld, r)
            d = 1 << (m - r)
            for w in codewords(code):
                row = unpack_row(w)
                if row.bit_count() == d:
                    els = support_elements(code, row)
                    assert 0 not in els and is_affine_flat(els, m - r)


def test_is_affine_flat():
    assert is_affine_flat([1, 2, 3, 0], 2)
    assert is_affine_flat([5, 6], 1)
    assert not is_affine_flat([1, 2, 4, 7 ^ 1], 2)
    assert not is_affine_flat([1, 2, 3], 2)


def test_c_epsilon():
    c1 = subcode_c_epsilon(F5, 1)
    assert c1.generators == (srm_generator_poly(F5, 2).bits,)
    assert weight_distribution(c1).w_min == 8
    srm2 = srm_code(F5, 2)
    for eps in range(1, 10):
        c = subcode_c_epsilon(F5, eps)
        assert c.k == eps and contains(srm2, c)
    with pytest.raises(BadEpsilon):
        subcode_c_epsilon(F5, 10)
    with pytest.raises(BadEpsilon):
        subcode_c_epsilon(F5, 0)


def test_c_epsilon_in_quadratic_forms_code():
    # SRM(2, m) from all Tr(a x^(2^i+1)) and Tr(b x) with f(0) = 0 on GF(2^m)*
    for m in (5, 6):
        fld = build_field(m)
        funcs = [BooleanFunction.trace_form(fld, fld.alpha_pow(j), e)
                 for j in range(m) for e in [1] + [(1 << i) + 1 for i in range(1, m // 2 + 1)]]
        pts = list(range(1, fld.q))
        big = code_from_functions(fld, funcs, pts)
        for eps in (1, 3, m * (m - 1) // 2 - 1):
            c = subcode_c_epsilon(fld, eps)
            assert contains(big, c)


def test_m6_weights():
    g = srm_generator_poly(build_field(6, 0b1101101), 2)
    assert (g.weight, (g * BinaryPolynomial(0b11)).weight) == (24, 16)
    g = srm_generator_poly(build_field(6, 0b1110011), 2)
    assert (g.weight, (g * BinaryPolynomial(0b11)).weight) == (24, 28)


def test_quadratic_form_degree():
    fld = build_field(7)
    f = QuadraticForm(fld, {1: 3, 2: 5}, linear=9, const=1).function()
    assert algebraic_degree(f) == 2
    assert f.values()[0] == 1


def test_even_m_top_term_in_subfield():
    fld = build_field(6)
    b = fld.subfield_basis(3)
    for a in b:
        f = quadratic_term(fld, 3, a)
        assert algebraic_degree(f) == 2
    # Tr^6_1 of a x^9 with a in GF(8) vanishes: only the subfield trace is meaningful
    assert BooleanFunction.trace_form(fld, b[1], 9).bits == 0


@pytest.mark.parametrize("m", [5, 7])
def test_quad_code_odd(m):
    code = quad_code_odd(build_field(m))
    assert (code.n, code.k) == ((1 << m) - 1, m * (m - 1) // 2)
    wd = weight_distribution(code)
    assert is_minimal_ab(code, distribution=wd).is_minimal
    assert wd.w_min >= 3 << (m - 3)


def test_quad_code_odd_m3_is_simplex():
    code = quad_code_odd(build_field(3))
    assert code.k == 3 and weight_distribution(code).as_dict() == {0: 1, 4: 7}


def test_quad_code_odd_m5_distribution():
    wd = weight_distribution(quad_code_odd(F5))
    assert wd.as_dict() == {0: 1, 12: 310, 16: 527, 20: 186}


def test_quad_code_odd_refuses_even():
    with pytest.raises(EvenM):
        quad_code_odd(build_field(4))
    with pytest.raises(MTooSmall):
        quad_code_odd(build_field(2))


@pytest.mark.parametrize("m", [4, 5, 6, 7, 8])
def test_quad_code_mixed(m):
    fld = build_field(m)
    code = quad_code_mixed(fld)
    assert code.k == m * (m - 1) // 2
    assert all(algebraic_degree(f) <= 2 for f in quad_functions_mixed(fld))


def test_quad_mixed_m6():
    wd = weight_distribution(quad_code_mixed(build_field(6)))
    ws = wd.nonzero_weights()
    assert 16 not in ws and 48 not in ws
    assert min(ws) >= 24 and max(ws) <= 40
