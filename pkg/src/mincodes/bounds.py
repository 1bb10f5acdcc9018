"""Closed-form lower bounds on minimum distance and nonlinearity.

Analytic (real-valued) bounds are turned into integers by a ceiling taken
one ulp below the computed value, so that floating-point noise at an exact
integer never adds 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .errors import BadParams, DeltaOutOfRange


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: int
    inputs: dict = dc_field(default_factory=dict)

    def __int__(self):
        return self.value

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "inputs": dict(self.inputs)}


def binom_sum(n: int, lo: int, hi: int) -> int:
    """sum_{i=lo}^{hi} C(n, i); empty when hi < lo; negative lo is clamped to 0."""
    lo = max(lo, 0)
    return sum(math.comb(n, i) for i in range(lo, hi + 1))


def safe_ceil(x: float) -> int:
    return math.ceil(math.nextafter(x, -math.inf))


# interval bookkeeping --------------------------------------------------------

def interval_t(m: int, delta: int, start: int = 1) -> int:
    """The t with sum_{i=start}^{t-1} C(m,i) <= delta < sum_{i=start}^{t} C(m,i).

    ``start = 1`` is the convention for sets with zero adjoined, ``start = 0``
    for sets of nonzero points alone.
    """
    if delta < 0:
        raise BadParams("delta must be nonnegative")
    t = start
    while t <= m and binom_sum(m, start, t) <= delta:
        t += 1
    return t


def ann_term(m: int, t: int) -> int:
    """sum_{i=0}^{t-2} C(m-1, i): the weight bound for a trace code on a set of AI t."""
    return binom_sum(m - 1, 0, t - 2)


# individual bounds ----------------------------------------------------------

def lb_annihilator_weight(m: int, t: int, tau: int) -> BoundReport:
    """wt(g f_D) >= sum_{i=0}^{t-tau-1} C(m-tau, i) for AI(D) = t, deg g = tau."""
    if not 0 <= tau < t <= m:
        raise BadParams(f"need 0 <= tau < t <= m, got m={m}, t={t}, tau={tau}")
    return BoundReport("annihilator-weight", binom_sum(m - tau, 0, t - tau - 1),
                       {"m": m, "t": t, "tau": tau})


def gauss_log_term(m: int, delta: int) -> float:
    q = 1 << m
    return (delta - 1) / 2 - math.sqrt(q) / (2 * math.pi) * math.log(4 * (q - 1) / math.pi)


def gauss_log_bound(m: int, delta: int) -> BoundReport:
    """ceil((delta-1)/2 - sqrt(q)/(2 pi) ln(4(q-1)/pi)), floored at 0."""
    if delta < 1:
        raise BadParams("delta must be positive")
    return BoundReport("gauss-log", max(0, safe_ceil(gauss_log_term(m, delta))),
                       {"m": m, "delta": delta})


@dataclass(frozen=True)
class SinSumCheck:
    m: int
    lhs: float
    rhs: float

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def ratio(self) -> float:
        return self.lhs / self.rhs

    def __bool__(self):
        return self.passed


def sin_sum(m: int) -> float:
    q = 1 << m
    return math.fsum(1 / math.sin(math.pi * j / (q - 1)) for j in range(1, 1 << (m - 1)))


def sin_sum_check(m: int, scale: float = 1 / (2 * math.pi)) -> SinSumCheck:
    """Compare sum_{j=1}^{2^(m-1)-1} 1/sin(pi j/(q-1)) with scale (q-1) ln(4(q-1)/pi).

    The default ``scale`` is 1/(2 pi); pass 1/pi for the weaker right side.
    """
    if not 2 <= m <= 16:
        raise BadParams("m must lie in [2, 16]")
    q = 1 << m
    rhs = scale * (q - 1) * math.log(4 * (q - 1) / math.pi)
    return SinSumCheck(m, sin_sum(m), rhs)


def upsilon(m: int, r: int, t: int, tau: int) -> BoundReport:
    """2^(r-1) sum_{i=0}^{t-tau-1} C(m,i) + 2^(r-1) sum_{i=t-2tau}^{t-tau-1} C(m-tau,i)."""
    if not (1 <= tau < t <= m and 1 <= r <= m):
        raise BadParams(f"need 1 <= tau < t <= m and 1 <= r <= m (m={m}, r={r}, t={t}, tau={tau})")
    half = 1 << (r - 1)
    v = half * binom_sum(m, 0, t - tau - 1) + half * binom_sum(m - tau, t - 2 * tau, t - tau - 1)
    return BoundReport("upsilon", v, {"m": m, "r": r, "t": t, "tau": tau})


def nl1_bound(m: int, ai: int) -> BoundReport:
    """NL_1(f) >= 2 sum_{i=0}^{AI(f)-2} C(m-1, i)."""
    if not 0 <= ai <= m:
        raise BadParams("algebraic immunity out of range")
    return BoundReport("nl1", 2 * binom_sum(m - 1, 0, ai - 2), {"m": m, "ai": ai})


def lb_cor_supp_f(m: int, t: int, wt_f: int) -> BoundReport:
    """sum_{i=0}^{t-2} C(m-1,i) + floor((wt_f - 2^(m-1)) / 2), for AI(f) = t >= 3."""
    if t < 3:
        raise BadParams("need AI(f) >= 3")
    if wt_f < 1 << (m - 1):
        raise BadParams("need wt(f) >= 2^(m-1)")
    return BoundReport("supp-f", ann_term(m, t) + (wt_f - (1 << (m - 1))) // 2,
                       {"m": m, "t": t, "wt_f": wt_f})


# bounds attached to constructions -----------------------------------------

def lb_code_of_set(m: int, t: int) -> BoundReport:
    """Trace code on D with AI(D + {0}) = t >= 3."""
    if t < 3:
        raise BadParams("need AI(D + {0}) >= 3")
    return BoundReport("trace-code-on-set", ann_term(m, t), {"m": m, "t": t})


def lb_interval(m: int, delta: int) -> BoundReport:
    """max of the annihilator term and the Gauss-sum term for the trace code on [h; delta]."""
    t = interval_t(m, delta, 1)
    if not 3 <= t <= m:
        raise DeltaOutOfRange(f"delta={delta} gives t={t}, outside [3, {m}]")
    g = gauss_log_bound(m, delta).value
    return BoundReport("interval", max(ann_term(m, t), g), {"m": m, "delta": delta, "t": t})


def lb_punctured_quadratic(m: int, delta: int) -> BoundReport:
    """sum_{i=0}^{t-3} C(m-2, i) with t from the zero-adjoined interval rule."""
    t = interval_t(m, delta, 1)
    if not 5 <= t <= m:
        raise DeltaOutOfRange(f"delta={delta} gives t={t}, outside [5, {m}]")
    return BoundReport("punctured-quadratic", binom_sum(m - 2, 0, t - 3),
                       {"m": m, "delta": delta, "t": t})


def single_f_params(m: int, delta: int) -> tuple[int, int]:
    """(t, t') for f with Supp(f) = [0; delta]."""
    t = interval_t(m, delta, 0)
    if not 3 <= t <= m - 3:
        raise DeltaOutOfRange(f"delta={delta} gives t={t}, outside [3, {m - 3}]")
    tp = m - t + 1 if delta == binom_sum(m, 0, t - 1) else m - t
    return t, tp


def lb_single_f(m: int, delta: int) -> BoundReport:
    """min(delta, max(ann(t) + ann(t'), 2^(m-1) - 1 - (ln 2/pi)(m+1) sqrt(2^m)))."""
    t, tp = single_f_params(m, delta)
    analytic = (1 << (m - 1)) - 1 - math.log(2) / math.pi * (m + 1) * math.sqrt(1 << m)
    term = max(ann_term(m, t) + ann_term(m, tp), max(0, safe_ceil(analytic)))
    return BoundReport("single-f", min(delta, term), {"m": m, "delta": delta, "t": t, "t_prime": tp})


def lb_quadratic(m: int) -> BoundReport:
    return BoundReport("quadratic", 3 << (m - 3), {"m": m})
