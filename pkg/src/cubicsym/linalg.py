"""Exact sparse linear algebra over Q(zeta_N): echelon forms, ranks, null spaces."""

from __future__ import annotations

from typing import Sequence

from .cyclo import CycNum

Row = dict[int, CycNum]


def _eliminate(row: Row, factor: CycNum, pivot_row: Row) -> None:
    # row -= factor * pivot_row, in place
    for c, v in pivot_row.items():
        w = factor * v
        if c in row:
            nv = row[c] - w
            if nv.is_zero():
                del row[c]
            else:
                row[c] = nv
        else:
            row[c] = -w


def echelon(rows: Sequence[Row]) -> dict[int, Row]:
    """Forward elimination; returns {pivot column -> monic row}."""
    pivots: dict[int, Row] = {}
    for src in rows:
        r = dict(src)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = r[c].inv()
                pivots[c] = {cc: v * inv for cc, v in r.items()}
                break
            _eliminate(r, r[c], p)
    return pivots


def rank(rows: Sequence[Row]) -> int:
    return len(echelon(rows))


def rref(rows: Sequence[Row]) -> dict[int, Row]:
    """Reduced row echelon form as {pivot column -> row}."""
    pivots = echelon(rows)
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for c2 in sorted(pivots):
            if c2 <= c:
                continue
            if c2 in row and c2 in pivots:
                _eliminate(row, row[c2], pivots[c2])
    return pivots


def nullspace(rows: Sequence[Row], ncols: int, conductor: int) -> list[Row]:
    """Sparse basis of the right kernel, one vector per free column, echelonized
    so each basis row leads (leftmost column) with coefficient 1."""
    pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Row] = []
    one = CycNum.one(conductor)
    for f in free:
        vec: Row = {f: one}
        for pc, prow in pivots.items():
            if f in prow:
                vec[pc] = -prow[f]
        basis.append(vec)
    return [dict(r) for r in rref(basis).values()]


def dense_rank(matrix: Sequence[Sequence[CycNum]]) -> int:
    rows = []
    for r in matrix:
        row = {j: c for j, c in enumerate(r) if not c.is_zero()}
        rows.append(row)
    return rank(rows)
