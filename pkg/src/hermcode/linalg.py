"""Exact Gaussian elimination over a finite field.

Pivoting is deterministic: scan columns left to right and take the lowest
remaining row with a nonzero entry in that column.
"""

from __future__ import annotations

from typing import Sequence

from .field import FieldElement, FieldSpec


def rref(field: FieldSpec, rows: Sequence[Sequence[FieldElement]]) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    mat = [[field(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[FieldElement]]) -> int:
    return len(rref(field, rows)[1])


def nullspace(field: FieldSpec, rows: Sequence[Sequence[FieldElement]], ncols: int) -> list[list[FieldElement]]:
    """Basis of {v : A v = 0}, one vector per free column in increasing order."""
    reduced, pivots = rref(field, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
