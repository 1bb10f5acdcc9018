"""Minimal-code constructions from sets, Boolean functions and vectorial functions.

Each builder returns a :class:`ConstructionResult`: the code, the lower
bounds its construction guarantees, a minimality report and, when the
dimension allows enumeration, the measured minimum distance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import combinations

import numpy as np

from . import bounds as B
from . import gf2
from .boolfun import (NEG_INF, POS_INF, BooleanFunction, SupportSet, VectorialFunction,
                      ai_of_set, ai_of_vectorial, algebraic_degree, bits_from_values,
                      interval_support, partition_vectorial)
from .codes import (PAIRWISE_BUDGET_K, WEIGHT_BUDGET_K, LinearCode, MinimalityReport,
                    Verdict, code_from_functions, find_containment, gray_span,
                    is_minimal_ab, is_minimal_exact, pack_rows, weight_distribution,
                    weights_of)
from .errors import (AiTooSmall, BadParams, DeltaOutOfRange, DependentComponents,
                     DimensionOne, MTooSmall, ZeroInD)
from .gf2m import FieldSpec, primitive_conjugacy_classes
from .rm import (quad_functions_mixed, quad_functions_odd, srm_generator_poly,
                 subcode_c_epsilon)
from .poly2 import BinaryPolynomial


@dataclass
class ConstructionResult:
    code: LinearCode
    claimed_bounds: list
    minimality: MinimalityReport | None
    provenance: str
    measured_distance: int | None = None
    details: dict = dc_field(default_factory=dict)

    def bound_violations(self) -> list:
        if self.measured_distance is None:
            return []
        return [b for b in self.claimed_bounds if b.value > self.measured_distance]

    @property
    def parameters(self) -> tuple:
        return self.code.n, self.code.k, self.measured_distance

    def to_dict(self) -> dict:
        return {
            "provenance": self.provenance,
            "n": self.code.n,
            "k": self.code.k,
            "measured_distance": self.measured_distance,
            "claimed_bounds": [b.to_dict() for b in self.claimed_bounds],
            "minimality": None if self.minimality is None else self.minimality.to_dict(),
            "details": self.details,
            "code": self.code.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def trace_basis_functions(field: FieldSpec) -> list[BooleanFunction]:
    """Tr(alpha^i x), i < m: the Simplex generators."""
    return [BooleanFunction.trace_form(field, field.alpha_pow(i)) for i in range(field.m)]


def _measure(code: LinearCode, budget_k: int = WEIGHT_BUDGET_K):
    if code.k > budget_k:
        return None, None
    wd = weight_distribution(code, budget_k)
    return wd, wd.w_min


def _verify(code: LinearCode, wd=None, budget_k: int = PAIRWISE_BUDGET_K):
    if code.k <= budget_k:
        return is_minimal_exact(code, budget_k)
    if wd is not None:
        return is_minimal_ab(code, distribution=wd)
    return None


def _t_effective(m: int, ai) -> int:
    if ai is POS_INF:
        return m + 1
    if ai is NEG_INF:
        return 0
    return int(ai)


# trace codes on sets ---------------------------------------------------------

def code_C_of_D(field: FieldSpec, D: SupportSet, budget_k: int = PAIRWISE_BUDGET_K) -> ConstructionResult:
    """(Tr(a x))_{x in D}; minimal with a distance bound when AI(D + {0}) >= 3."""
    if 0 in D:
        raise ZeroInD("D must avoid the zero element")
    code = code_from_functions(field, trace_basis_functions(field), D)
    ai = ai_of_set(D.with_zero())
    t = _t_effective(field.m, ai)
    wd, d = _measure(code)
    rep = _verify(code, wd, budget_k)
    details = {"ai_with_zero": str(ai)}
    if t < 3:
        res = ConstructionResult(code, [], rep, "trace-code-on-set", d, details)
        raise AiTooSmall(f"AI(D + {{0}}) = {ai} < 3; minimality not guaranteed", result=res)
    bound = B.lb_code_of_set(field.m, t)
    return ConstructionResult(code, [bound], rep, "trace-code-on-set", d, details)


def code_interval(field: FieldSpec, h: int, delta: int,
                  budget_k: int = PAIRWISE_BUDGET_K) -> ConstructionResult:
    """Trace code on [h; delta]: minimal for 3 <= t <= m, with the better of two bounds."""
    m = field.m
    t = B.interval_t(m, delta, 1)
    if not 3 <= t <= m:
        raise DeltaOutOfRange(f"delta={delta} gives t={t}, outside [3, {m}]")
    D = interval_support(field, h, delta)
    code = code_from_functions(field, trace_basis_functions(field), D)
    wd, d = _measure(code)
    rep = _verify(code, wd, budget_k)
    claims = [B.lb_code_of_set(m, t), B.gauss_log_bound(m, delta), B.lb_interval(m, delta)]
    return ConstructionResult(code, claims, rep, "trace-code-on-interval", d,
                              {"h": h, "delta": delta, "t": t})


def half_pascal_length(m: int) -> int:
    return m * (m + 1) // 2


def code_half_pascal(field: FieldSpec) -> ConstructionResult:
    """Trace code on alpha^0 .. alpha^(m(m+1)/2 - 1)."""
    if field.m < 5:
        raise MTooSmall("need m >= 5")
    res = code_interval(field, 0, half_pascal_length(field.m))
    res.provenance = "half-pascal-prefix"
    return res


def code_supp_f(f: BooleanFunction, budget_k: int = PAIRWISE_BUDGET_K) -> ConstructionResult:
    """Trace code on Supp(f) minus 0, for wt(f) >= 2^(m-1) and AI(f) >= 3."""
    from .boolfun import ai_of_function
    field = f.field
    t = ai_of_function(f)
    D = f.support().without_zero()
    res = code_C_of_D(field, D, budget_k)
    if t >= 3 and f.weight >= 1 << (field.m - 1):
        res.claimed_bounds.append(B.lb_cor_supp_f(field.m, t, f.weight))
    res.provenance = "trace-code-on-support"
    res.details["ai_f"] = t
    return res


# prefix trace codes: fast paths over primitive elements ---------------------

def prefix_elements(field: FieldSpec, e: int, length: int) -> np.ndarray:
    """(alpha^e)^j for j < length, with alpha the field's primitive element."""
    return field.exp[(e * np.arange(length, dtype=np.int64)) % field.order]


def prefix_code_words(field: FieldSpec, e: int, length: int) -> np.ndarray:
    """All 2^m codewords of the trace code on the first ``length`` powers of alpha^e.

    Rows are the coordinate bit-planes of the points, which span the same code
    as the trace forms Tr(a x).
    """
    xs = prefix_elements(field, e, length)
    rows = [bits_from_values((xs >> i) & 1) for i in range(field.m)]
    return gray_span(pack_rows(rows, length))


def _prefix_mask(length: int, words: int) -> np.ndarray:
    v = (1 << length) - 1
    return np.array([(v >> (64 * j)) & ((1 << 64) - 1) for j in range(words)], dtype=np.uint64)


def _prefix_is_minimal(words: np.ndarray, length: int) -> bool:
    """m-dimensional and minimal after truncation to the first ``length`` coordinates."""
    cut = words & _prefix_mask(length, words.shape[1])
    if np.count_nonzero(np.any(cut != 0, axis=1)) != words.shape[0] - 1:
        return False
    return find_containment(cut) is None


def half_pascal_distance(field: FieldSpec, e: int = 1) -> int:
    L = half_pascal_length(field.m)
    w = weights_of(prefix_code_words(field, e, L))
    return int(w[1:].min())


def epsilon_max(field: FieldSpec, e: int = 1) -> int:
    """Largest eps in [0, m(m-1)/2 - 1] whose length-(m(m+1)/2 - eps) prefix code is minimal.

    Every eps in the range is tested; no monotonicity is assumed.
    """
    m = field.m
    if m < 5:
        raise MTooSmall("need m >= 5")
    L = half_pascal_length(m)
    words = prefix_code_words(field, e, L)
    best = -1
    for eps in range(0, m * (m - 1) // 2):
        if _prefix_is_minimal(words, L - eps):
            best = eps
    return best


def prefix_minimal_by_subcode(field: FieldSpec, eps: int) -> bool:
    """Minimality of the length-(m(m+1)/2 - eps) prefix code via d(c_eps) > 2^(m-2)."""
    if eps == 0:
        return True
    d = weight_distribution(subcode_c_epsilon(field, eps)).w_min
    return d > 1 << (field.m - 2)


def epsilon_max_via_subcode(field: FieldSpec) -> int:
    m = field.m
    if m < 5:
        raise MTooSmall("need m >= 5")
    return max(eps for eps in range(0, m * (m - 1) // 2) if prefix_minimal_by_subcode(field, eps))


@dataclass(frozen=True)
class WeightCriterion:
    which: int
    weight_g: int
    weight_1x_g: int
    criterion_minimal: bool
    direct_minimal: bool

    @property
    def agrees(self) -> bool:
        return self.criterion_minimal == self.direct_minimal


def check_weight_criteria(field: FieldSpec, which: int) -> WeightCriterion:
    """Weight tests on g*_2 for the prefix codes of length m(m+1)/2 - 1 (which=2)
    and m(m+1)/2 - 2 (which=3), with the direct minimality verdict alongside."""
    m = field.m
    if m < 5:
        raise MTooSmall("need m >= 5")
    if which not in (2, 3):
        raise BadParams("which must be 2 or 3")
    g = srm_generator_poly(field, 2)
    w1 = g.weight
    w2 = (g * BinaryPolynomial(0b11)).weight
    quarter = 1 << (m - 2)
    if which == 2:
        crit = w1 != quarter
    else:
        crit = w1 > quarter and w2 > quarter
    L = half_pascal_length(m)
    direct = _prefix_is_minimal(prefix_code_words(field, 1, L), L - (which - 1))
    return WeightCriterion(which, w1, w2, crit, direct)


def sweep_classes(m: int, fn, poly: int | None = None):
    """Apply fn(field, e) to one exponent per conjugacy class; yields (class, value)."""
    from .gf2m import build_field
    field = build_field(m, poly)
    for cls in primitive_conjugacy_classes(field):
        yield cls, fn(field, cls[0])


def epsilon_distribution(m: int, poly: int | None = None) -> dict:
    out: dict = {}
    for cls, v in sweep_classes(m, epsilon_max, poly):
        out[v] = out.get(v, 0) + len(cls)
    return dict(sorted(out.items()))


def half_pascal_distance_range(m: int, poly: int | None = None) -> tuple[int, int]:
    ds = [v for _, v in sweep_classes(m, half_pascal_distance, poly)]
    return max(ds), min(ds)


# reference code with coordinates on basis elements and pairwise sums --------

def pair_sum_elements(field: FieldSpec, basis=None) -> list[int]:
    basis = [field.alpha_pow(i) for i in range(field.m)] if basis is None else list(basis)
    if gf2.rank(basis) != field.m:
        raise BadParams("not a basis")
    return basis + [a ^ b for a, b in combinations(basis, 2)]


def pair_sum_code(field: FieldSpec, basis=None) -> LinearCode:
    idx = [int(field.point_index[x]) for x in pair_sum_elements(field, basis)]
    return code_from_functions(field, trace_basis_functions(field), idx)


# punctured quadratic codes ---------------------------------------------------

def punctured_quad_code(field: FieldSpec, delta: int, variant: str = "odd",
                        budget_k: int = WEIGHT_BUDGET_K) -> ConstructionResult:
    """Quadratic minimal code restricted to alpha^0 .. alpha^(delta-1).

    Minimality is certified by AI([0; delta] + {0}) >= 5 together with an
    Ashikhmin-Barg certificate for the unpunctured code; when k is small
    enough the punctured code's weights are enumerated as well.
    """
    m = field.m
    if variant == "odd":
        funcs = quad_functions_odd(field)
    elif variant == "mixed":
        funcs = quad_functions_mixed(field)
    else:
        raise BadParams(f"unknown variant {variant!r}")
    if m < 5:
        raise MTooSmall("need m >= 5")
    k = m * (m - 1) // 2
    N = field.order
    if delta == N:
        claims = [B.lb_quadratic(m)]
        t = None
    else:
        claims = [B.lb_punctured_quadratic(m, delta)]
        t = claims[0].inputs["t"]
    D = interval_support(field, 0, delta)
    code = code_from_functions(field, funcs, D)
    if code.k != k:
        raise AssertionError(f"dimension {code.k} after puncturing, expected {k}")

    base = code_from_functions(field, funcs, SupportSet.nonzero(field))
    details = {"delta": delta, "variant": variant, "t": t}
    base_ab = None
    if base.k <= budget_k:
        base_ab = is_minimal_ab(base, distribution=weight_distribution(base, budget_k))
        details["base_w_min"] = base_ab.details["w_min"]
        details["base_w_max"] = base_ab.details["w_max"]
    wd, d = _measure(code, budget_k)
    if delta == N:
        rep = is_minimal_ab(code, distribution=wd) if wd is not None else None
    else:
        ai = ai_of_set(D.with_zero())
        details["ai_with_zero"] = str(ai)
        certified = _t_effective(m, ai) >= 5 and base_ab is not None and base_ab.is_minimal
        if wd is not None:
            details["punctured_ab"] = is_minimal_ab(code, distribution=wd).verdict.value
        rep = MinimalityReport(Verdict.MINIMAL if certified else Verdict.UNKNOWN,
                               "annihilator-criterion", dimension_preserved=True,
                               theorem_condition=certified, details={"ai_with_zero": str(ai)})
    return ConstructionResult(code, claims, rep, f"punctured-quadratic-{variant}", d, details)


# vectorial constructions ----------------------------------------------------

def span_code(F: VectorialFunction, coords=None) -> LinearCode:
    """Span of the component functions, on all points unless ``coords`` is given."""
    if gf2.rank([c.bits for c in F.components]) != F.r:
        raise DependentComponents("component functions are linearly dependent")
    return code_from_functions(F.field, list(F.components), coords)


def equal_breakpoints(m: int, r: int) -> list[int]:
    """0, 2^(m-r) - 1, 2 * 2^(m-r) - 1, ..., 2^m - 1: equal blocks once 0 joins the first."""
    s = 1 << (m - r)
    return [0] + [i * s - 1 for i in range(1, (1 << r) + 1)]


def direct_sum_code(C_sub: LinearCode, F: VectorialFunction, order: int | None = None,
                    coords="nonzero", budget_k: int = PAIRWISE_BUDGET_K) -> ConstructionResult:
    """C_sub + Span(F) on GF(2^m)* (or all points with ``coords=None``).

    ``C_sub`` must carry its generating functions; ``order`` defaults to their
    largest algebraic degree. Requires AI(F) >= 2 order + 1 and k > 1.
    """
    if C_sub.functions is None:
        raise BadParams("the subcode must carry its generating functions")
    field = F.field
    if C_sub.k <= 1:
        raise DimensionOne("the subcode must have dimension > 1")
    if order is None:
        order = max(int(algebraic_degree(f)) for f in C_sub.functions)
    funcs = list(C_sub.functions) + list(F.components)
    if gf2.rank([f.bits for f in funcs]) != len(funcs):
        raise DependentComponents("Span(F) meets the subcode")
    D = SupportSet.nonzero(field) if coords == "nonzero" else coords
    code = code_from_functions(field, funcs, D)
    ai = ai_of_vectorial(F)
    wd, d = _measure(code)
    rep = _verify(code, wd, budget_k)
    details = {"ai_F": str(ai), "order": order, "k_sub": C_sub.k, "r": F.r}
    res = ConstructionResult(code, [], rep, "direct-sum-vectorial", d, details)
    if _t_effective(field.m, ai) < 2 * order + 1:
        raise AiTooSmall(f"AI(F) = {ai} < {2 * order + 1}", result=res)
    return res


def simplex_vectorial_gate(m: int, r: int) -> bool:
    return m * m + m + 2 <= 1 << (m - r + 1)


def quadratic_vectorial_gate(m: int, r: int) -> bool:
    return B.binom_sum(m, 0, 4) <= 1 << (m - r)


def simplex_code_functions(field: FieldSpec) -> LinearCode:
    return code_from_functions(field, trace_basis_functions(field))


def code_simplex_vectorial(field: FieldSpec, r: int, labels=None) -> ConstructionResult:
    """Simplex + Span(F) for the equal-block partition function F."""
    F = partition_vectorial(field, equal_breakpoints(field.m, r), labels)
    res = direct_sum_code(simplex_code_functions(field), F, order=1)
    res.details["gate"] = simplex_vectorial_gate(field.m, r)
    return res


def code_quadratic_vectorial(field: FieldSpec, r: int, variant: str = "odd",
                             labels=None) -> ConstructionResult:
    funcs = quad_functions_odd(field) if variant == "odd" else quad_functions_mixed(field)
    sub = code_from_functions(field, funcs)
    F = partition_vectorial(field, equal_breakpoints(field.m, r), labels)
    res = direct_sum_code(sub, F, order=2)
    res.details["gate"] = quadratic_vectorial_gate(field.m, r)
    return res


def code_single_f(field: FieldSpec, delta: int,
                  budget_k: int = PAIRWISE_BUDGET_K) -> ConstructionResult:
    """Simplex plus f with Supp(f) = [0; delta], on GF(2^m)*."""
    m = field.m
    bound = B.lb_single_f(m, delta)
    f = interval_support(field, 0, delta).characteristic()
    funcs = trace_basis_functions(field) + [f]
    code = code_from_functions(field, funcs, SupportSet.nonzero(field))
    if code.k != m + 1:
        raise AssertionError("dimension m + 1 expected")
    wd, d = _measure(code)
    rep = _verify(code, wd, budget_k)
    return ConstructionResult(code, [bound], rep, "simplex-plus-interval-function", d,
                              dict(bound.inputs))
