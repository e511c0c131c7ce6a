"""Thin exact linear algebra layer over python-flint (fmpq_mat)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import flint


def fq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def to_fraction(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def mat(rows: Sequence[Sequence], ncols: int | None = None) -> flint.fmpq_mat:
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    m = flint.fmpq_mat(len(rows), ncols)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if v:
                m[i, j] = fq(v)
    return m


def sparse_mat(nrows: int, ncols: int, entries: dict) -> flint.fmpq_mat:
    m = flint.fmpq_mat(nrows, ncols)
    for (i, j), v in entries.items():
        if v:
            m[i, j] = fq(v)
    return m


def rank(m: flint.fmpq_mat) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def rref_rows(m: flint.fmpq_mat) -> tuple[flint.fmpq_mat, list[int]]:
    """Nonzero rows of the reduced echelon form and the pivot columns."""
    if m.nrows() == 0:
        return flint.fmpq_mat(0, m.ncols()), []
    r, rk = m.rref()
    pivots = []
    for i in range(rk):
        for j in range(m.ncols()):
            if r[i, j] != 0:
                pivots.append(j)
                break
    return submatrix_rows(r, range(rk)), pivots


def submatrix_rows(m: flint.fmpq_mat, rows) -> flint.fmpq_mat:
    rows = list(rows)
    out = flint.fmpq_mat(len(rows), m.ncols())
    for a, i in enumerate(rows):
        for j in range(m.ncols()):
            v = m[i, j]
            if v != 0:
                out[a, j] = v
    return out


def submatrix_cols(m: flint.fmpq_mat, cols) -> flint.fmpq_mat:
    cols = list(cols)
    out = flint.fmpq_mat(m.nrows(), len(cols))
    for i in range(m.nrows()):
        for b, j in enumerate(cols):
            v = m[i, j]
            if v != 0:
                out[i, b] = v
    return out


def nullspace(m: flint.fmpq_mat) -> flint.fmpq_mat:
    """Basis of {x : m x = 0} as the rows of the returned matrix.

    Each basis vector has a 1 in one free column and zeros in the other free
    columns, so the basis is canonical for the given column order.
    """
    ncols = m.ncols()
    if m.nrows() == 0:
        out = flint.fmpq_mat(ncols, ncols)
        for i in range(ncols):
            out[i, i] = 1
        return out
    r, pivots = rref_rows(m)
    free = [j for j in range(ncols) if j not in set(pivots)]
    out = flint.fmpq_mat(len(free), ncols)
    for a, fcol in enumerate(free):
        out[a, fcol] = 1
        for i, pc in enumerate(pivots):
            v = r[i, fcol]
            if v != 0:
                out[a, pc] = -v
    return out


def rows_as_fractions(m: flint.fmpq_mat) -> list[list[Fraction]]:
    return [[to_fraction(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def is_zero(m: flint.fmpq_mat) -> bool:
    return all(m[i, j] == 0 for i in range(m.nrows()) for j in range(m.ncols()))
