"""Exact linear algebra on constant matrices over Q(i).

Rows are held as ``{column: value}`` dictionaries so that the banded,
mostly-zero convolution matrices used for minimal indices stay cheap.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .exact import ONE, ZERO, GaussianRational


def _sparse(row: Sequence) -> dict:
    return {j: x for j, x in enumerate(row) if x}


def _eliminate(row: dict, pivots: dict) -> dict:
    """Reduce ``row`` against echelon pivots (each pivot row has leading 1)."""
    while True:
        hit = None
        for c in row:
            if c in pivots and (hit is None or c < hit):
                hit = c
        if hit is None:
            return row
        f = row[hit]
        for k, v in pivots[hit].items():
            nv = row.get(k, ZERO) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)


def _normalize(row: dict) -> tuple[int, dict]:
    c = min(row)
    lead = row[c]
    if lead != ONE:
        inv = lead.inverse()
        row = {k: v * inv for k, v in row.items()}
    return c, row


class Echelon:
    """Incrementally maintained row echelon form.

    ``insert`` reports whether a vector was independent of everything
    inserted before, which is what greedy basis extension needs.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def __len__(self):
        return len(self.pivots)

    def insert(self, row) -> bool:
        row = dict(row) if isinstance(row, dict) else _sparse(row)
        row = _eliminate(row, self.pivots)
        if not row:
            return False
        c, row = _normalize(row)
        self.pivots[c] = row
        return True

    def contains(self, row) -> bool:
        row = dict(row) if isinstance(row, dict) else _sparse(row)
        return not _eliminate(row, self.pivots)


def rank_of_rows(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for row in rows:
        if row:
            ech.insert(row)
    return len(ech)


def rank(matrix: Sequence[Sequence[GaussianRational]]) -> int:
    """Rank of a dense constant matrix."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if m > n:
        matrix = list(zip(*matrix))
    return rank_of_rows(_sparse(r) for r in matrix)


def rref(rows: Iterable[dict]) -> dict[int, dict]:
    """Reduced row echelon form as ``{pivot_column: row}`` (pivots are 1)."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if not f:
                continue
            for k, v in pivots[c].items():
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if not row:
            continue
        c, row = _normalize(row)
        for pc, prow in pivots.items():
            f = prow.get(c)
            if f:
                for k, v in row.items():
                    nv = prow.get(k, ZERO) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[c] = row
    return pivots


def nullspace(rows: Iterable[dict], ncols: int) -> list[list[GaussianRational]]:
    """Basis of the right kernel, one vector per free column (ascending)."""
    pivots = rref(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [ZERO] * ncols
        vec[f] = ONE
        for c, prow in pivots.items():
            v = prow.get(f)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def dense_nullspace(matrix: Sequence[Sequence[GaussianRational]], ncols: int | None = None):
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    return nullspace((_sparse(r) for r in matrix), ncols)


def determinant(matrix: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    n = len(matrix)
    a = [list(r) for r in matrix]
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = a[i][c]
            if f:
                f = f * inv
                ai, ac = a[i], a[c]
                for j in range(c, n):
                    if ac[j]:
                        ai[j] = ai[j] - f * ac[j]
    return det
