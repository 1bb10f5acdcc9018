"""Bit-packed linear algebra over GF(2).

Vectors are Python ints; bit ``j`` is coordinate ``j``.
"""

from __future__ import annotations

from typing import Iterable, List


class XorBasis:
    """Incremental echelon basis keyed by leading bit.

    ``insert`` reports whether the vector was independent of everything
    inserted so far, which is what most rank-style loops in this package need.
    """

    def __init__(self):
        self._rows: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: int) -> int:
        rows = self._rows
        while v:
            h = v.bit_length() - 1
            r = rows.get(h)
            if r is None:
                return v
            v ^= r
        return 0

    def insert(self, v: int) -> bool:
        v = self.reduce(v)
        if v == 0:
            return False
        self._rows[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank(rows: Iterable[int]) -> int:
    basis = XorBasis()
    for r in rows:
        basis.insert(r)
    return len(basis)


def in_span(vec: int, rows: Iterable[int]) -> bool:
    basis = XorBasis()
    for r in rows:
        basis.insert(r)
    return vec in basis


def independent_subset(rows: Iterable[int]) -> List[int]:
    """Indices of a maximal independent subset, chosen greedily in order."""
    basis = XorBasis()
    return [i for i, r in enumerate(rows) if basis.insert(r)]


def rref(rows: List[int], ncols: int) -> tuple[List[int], List[int]]:
    """Reduced row echelon form with pivots scanned from column 0 upward.

    Returns (nonzero reduced rows, pivot columns).
    """
    work = [r for r in rows if r]
    pivots: List[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        piv = None
        for i in range(top, len(work)):
            if work[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        prow = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def nullspace(rows: List[int], ncols: int) -> List[int]:
    """Basis of {x : <row, x> = 0 for every row}, one vector per free column.

    Free columns are taken in increasing order, so the basis is deterministic.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, p in zip(reduced, pivots):
            if r >> free & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def transpose(rows: List[int], ncols: int) -> List[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << i
            r ^= low
    return out
