import random
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mincodes import build_field
from mincodes.boolfun import (NEG_INF, POS_INF, BooleanFunction, SupportSet, VectorialFunction,
                              ai_of_function, ai_of_interval, ai_of_set, ai_of_vectorial,
                              algebraic_degree, anf, annihilator_space, hamming_distance,
                              interval_support, monomials, pairwise_preimage_ai_bound_check,
                              partition_ai, partition_vectorial)
from mincodes.errors import (BadBreakpoints, BadSize, ConstantFunction, DependentMasks,
                             FieldMismatch)

FIELDS = {m: build_field(m) for m in range(2, 9)}


def brute_ai(D):
    if len(D) == D.field.q:
        return POS_INF
    for t in range(D.field.m + 1):
        if annihilator_space(D, t).dim:
            return t


def from_anf(fld, monos):
    """Evaluate sum of monomials (masks over power-basis coordinates)."""
    pts = fld.points
    v = np.zeros(fld.q, dtype=np.int64)
    for s in monos:
        v ^= ((pts & s) == s).astype(np.int64)
    return BooleanFunction.from_values(fld, v)


@st.composite
def sets(draw, lo=3, hi=7):
    m = draw(st.integers(lo, hi))
    fld = FIELDS[m]
    mask = draw(st.integers(0, (1 << fld.q) - 1))
    return SupportSet(fld, mask)


@st.composite
def low_degree(draw, fld, top):
    ms = [s for s in monomials(fld.m, top)]
    pick = draw(st.lists(st.sampled_from(ms), min_size=1, max_size=8))
    return from_anf(fld, pick)


def test_interval_support_shape():
    fld = build_field(7, 0x83)
    D = interval_support(fld, 63, 64)
    assert len(D) == 64 and 0 not in D
    assert set(D.elements().tolist()) == {fld.alpha_pow(63 + j) for j in range(64)}
    with pytest.raises(BadSize):
        interval_support(fld, 0, 0)


def test_support_characteristic_round_trip():
    fld = FIELDS[5]
    D = SupportSet.from_indices(fld, [0, 3, 7])
    assert D.characteristic().support() == D
    assert SupportSet.from_elements(fld, D.elements()) == D
    assert D.with_zero().without_zero() == SupportSet.from_indices(fld, [3, 7])


def test_degree_examples():
    fld = FIELDS[5]
    assert algebraic_degree(SupportSet.from_indices(fld, [0]).characteristic()) == 5
    assert algebraic_degree(BooleanFunction.constant(fld, 0)) is NEG_INF
    assert algebraic_degree(BooleanFunction.constant(fld, 1)) == 0
    assert algebraic_degree(BooleanFunction.trace_form(fld, 1)) == 1
    assert algebraic_degree(BooleanFunction.trace_form(fld, 1, 3)) == 2


def test_anf_of_monomials():
    fld = FIELDS[4]
    for s in range(16):
        c = anf(from_anf(fld, [s]))
        assert np.flatnonzero(c).tolist() == [s]


def test_annihilator_examples():
    fld = FIELDS[5]
    D = interval_support(fld, 0, 6)
    assert annihilator_space(D, 1).dim == 0
    basis = annihilator_space(D, 2).basis
    assert basis
    assert all((g.bits & D.mask) == 0 for g in basis)


def test_ai_examples():
    fld = FIELDS[5]
    for h in range(31):
        assert ai_of_set(interval_support(fld, h, 6)) == 2
    assert ai_of_set(SupportSet.from_elements(fld, [1])) == 1
    assert ai_of_set(SupportSet(fld, 0)) is NEG_INF
    assert ai_of_set(SupportSet.full(fld)) is POS_INF
    assert ai_of_interval(5, 6) == 2
    assert ai_of_interval(5, 5, include_zero=True) == 2
    assert ai_of_interval(5, 31, include_zero=True) is POS_INF


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_ai_of_interval_exhaustive(m):
    fld = FIELDS[m]
    for h in range(fld.order):
        for delta in range(1, fld.order + 1):
            D = interval_support(fld, h, delta)
            assert ai_of_interval(m, delta) == brute_ai(D)
            assert ai_of_interval(m, delta, include_zero=True) == brute_ai(D.with_zero())


def test_ai_of_interval_m6_all_lengths():
    fld = FIELDS[6]
    rng = random.Random(66)
    for delta in range(1, 64):
        D = interval_support(fld, rng.randrange(63), delta)
        assert ai_of_interval(6, delta) == ai_of_set(D) == brute_ai(D)


def test_ai_infinity_ordering():
    assert NEG_INF < 0 < POS_INF
    assert not POS_INF < 5
    assert max(3, POS_INF) is POS_INF


@settings(max_examples=60, deadline=None)
@given(sets(), st.integers(0, 2**64))
def test_ai_monotone(D, salt):
    E = SupportSet(D.field, D.mask | (salt % (1 << D.field.q)))
    assert ai_of_set(D) <= ai_of_set(E)


@settings(max_examples=60, deadline=None)
@given(sets(3, 6))
def test_ai_matches_nullspace_search(D):
    assert ai_of_set(D) == (NEG_INF if D.mask == 0 else brute_ai(D))


@settings(max_examples=60, deadline=None)
@given(sets(3, 7))
def test_weight_bounds_from_ai(D):
    f = D.characteristic()
    if f.is_constant():
        return
    m = D.field.m
    t = ai_of_function(f)
    assert sum(comb(m, i) for i in range(t)) <= f.weight <= sum(comb(m, i) for i in range(m - t + 1))


def test_ai_at_most_half_m():
    fld = FIELDS[6]
    rng = random.Random(5)
    for _ in range(40):
        idx = rng.sample(range(64), 32)
        f = SupportSet.from_indices(fld, idx).characteristic()
        assert 1 <= ai_of_function(f) <= 3


def test_ai_of_constant_refused():
    with pytest.raises(ConstantFunction):
        ai_of_function(BooleanFunction.constant(FIELDS[4], 1))


@pytest.mark.parametrize("m", [5, 6, 7, 8])
def test_ai_of_interval_function(m):
    fld = FIELDS[m]
    N = fld.order
    for delta in range(1, N, max(1, N // 40)):
        f = interval_support(fld, 0, delta).characteristic()
        want = min(ai_of_interval(m, delta), ai_of_interval(m, N - delta, include_zero=True))
        assert ai_of_function(f) == want


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_annihilator_dimension_bound(data):
    m = data.draw(st.integers(3, 6))
    fld = FIELDS[m]
    tau = data.draw(st.integers(1, m - 1))
    g = data.draw(low_degree(fld, tau))
    if g.is_constant():
        return
    tau = int(algebraic_degree(g))
    t = data.draw(st.integers(tau + 1, m))
    dim = annihilator_space(g.complement().support(), t - 1).dim
    assert dim >= sum(comb(m - tau, i) for i in range(t - tau))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_weight_of_product_vs_annihilator_dim(data):
    D = data.draw(sets(3, 6))
    t = ai_of_set(D)
    if t in (NEG_INF, POS_INF) or t < 2:
        return
    fld = D.field
    g = data.draw(low_degree(fld, t - 1))
    if g.bits == 0:
        return
    prod = g * D.characteristic()
    assert prod.weight >= annihilator_space(g.complement().support(), t - 1).dim


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_degree_affine_invariant(data):
    m = data.draw(st.integers(3, 7))
    fld = FIELDS[m]
    f = BooleanFunction(fld, data.draw(st.integers(0, (1 << fld.q) - 1)))
    a = data.draw(st.integers(1, fld.q - 1))
    b = data.draw(st.integers(0, fld.q - 1))
    assert algebraic_degree(f.compose_affine(a, b)) == algebraic_degree(f)


def test_hamming_distance():
    fld = FIELDS[5]
    f = BooleanFunction.trace_form(fld, 1)
    g = BooleanFunction.trace_form(fld, fld.alpha)
    assert hamming_distance(f, f) == 0
    assert hamming_distance(f, f.complement()) == 32
    assert hamming_distance(f, g) == 16
    inter = (f * g).weight
    assert 2 * inter == f.weight + g.weight - hamming_distance(f, g)
    with pytest.raises(FieldMismatch):
        hamming_distance(f, BooleanFunction.trace_form(FIELDS[4], 1))


def test_hex_round_trip():
    fld = FIELDS[6]
    f = BooleanFunction.trace_form(fld, 7, 3)
    assert BooleanFunction.from_hex(fld, f.hex()) == f


def m7_F():
    fld = build_field(7, 0x83)
    f1 = interval_support(fld, 63, 64).characteristic()
    f2 = (interval_support(fld, 31, 32) | interval_support(fld, 95, 32)).characteristic()
    return VectorialFunction(fld, (f1, f2))


def test_m7_vectorial_ai():
    F = m7_F()
    assert ai_of_vectorial(F) == 3
    assert pairwise_preimage_ai_bound_check(F, 1, 2, 1, 1) >= 3
    with pytest.raises(DependentMasks):
        pairwise_preimage_ai_bound_check(F, 1, 1, 1, 1)


def test_pairwise_preimages_random_partition():
    fld = FIELDS[6]
    rng = random.Random(8)
    for _ in range(5):
        cuts = sorted(rng.sample(range(1, 63), 3))
        F = partition_vectorial(fld, [0, *cuts, 63], [0, *rng.sample([1, 2, 3], 3)])
        for v1 in range(1, 4):
            for v2 in range(1, 4):
                if v1 != v2:
                    for e1 in (0, 1):
                        for e2 in (0, 1):
                            pairwise_preimage_ai_bound_check(F, v1, v2, e1, e2)


def test_partition_equal_blocks_m7():
    fld = build_field(7, 0x83)
    bp = [0, 31, 63, 95, 127]
    F = partition_vectorial(fld, bp)
    assert ai_of_vectorial(F) == partition_ai(7, bp) == 3
    sizes = sorted(len(F.preimage(y)) for y in range(4))
    assert sizes == [32, 32, 32, 32]


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_partition_ai_closed_form(m):
    fld = FIELDS[m]
    rng = random.Random(m)
    for _ in range(25):
        r = rng.choice([1, 2])
        cuts = sorted(rng.sample(range(1, fld.order), (1 << r) - 1))
        bp = [0, *cuts, fld.order]
        assert ai_of_vectorial(partition_vectorial(fld, bp)) == partition_ai(m, bp)


def test_partition_r1_is_interval_function():
    fld = FIELDS[6]
    F = partition_vectorial(fld, [0, 20, 63])
    f = F.components[0]
    assert f.support() == interval_support(fld, 20, 43)


def test_partition_validation():
    fld = FIELDS[5]
    with pytest.raises(BadBreakpoints):
        partition_vectorial(fld, [0, 10, 20, 31])
    with pytest.raises(BadBreakpoints):
        partition_vectorial(fld, [0, 10, 31], labels=[1, 0])
    with pytest.raises(BadBreakpoints):
        partition_vectorial(fld, [0, 31, 31])
