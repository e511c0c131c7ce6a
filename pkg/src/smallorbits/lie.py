"""so(2n) in its standard representation.

V has basis f_1..f_n (weights +e_i) followed by e_1..e_n (weights -e_i) with
Q(f_i, e_j) = delta_ij and Q(e, e) = Q(f, f) = 0.  A quadratic element xy/2 of
the Clifford algebra acts on V by u -> Q(y,u)x - Q(x,u)y, which fixes the
normalisation of every root vector below.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Root = tuple  # integer tuple with two nonzero entries in {+1,-1}
Label = Union[tuple, str]


def f_idx(i: int, n: int) -> int:
    return i


def e_idx(i: int, n: int) -> int:
    return n + i


def vec_weight(u: int, n: int) -> tuple[int, ...]:
    w = [0] * n
    if u < n:
        w[u] = 1
    else:
        w[u - n] = -1
    return tuple(w)


def Q(u: int, v: int, n: int) -> int:
    return 1 if abs(u - v) == n else 0


@lru_cache(maxsize=None)
def all_roots(n: int) -> tuple[Root, ...]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    r = [0] * n
                    r[i], r[j] = si, sj
                    out.append(tuple(r))
    return tuple(out)


def root_factors(root: Root) -> tuple[int, int]:
    """(x, y) with X(root) = xy/2 as Clifford quadratic, x,y indices in V."""
    n = len(root)
    i, j = [k for k in range(n) if root[k]]
    si, sj = root[i], root[j]
    if si > 0 and sj > 0:
        return f_idx(i, n), f_idx(j, n)
    if si < 0 and sj < 0:
        return e_idx(i, n), e_idx(j, n)
    if si < 0 < sj:
        return e_idx(i, n), f_idx(j, n)
    return e_idx(j, n), f_idx(i, n)


def _quad_action(x: int, y: int, n: int, c: Fraction = Fraction(1)) -> dict:
    # u -> Q(y,u) x - Q(x,u) y ; column convention {(row, col): val}
    m: dict = {}
    for u in range(2 * n):
        qy, qx = Q(y, u, n), Q(x, u, n)
        if qy:
            m[(x, u)] = m.get((x, u), 0) + c * qy
        if qx:
            m[(y, u)] = m.get((y, u), 0) - c * qx
    return {k: v for k, v in m.items() if v}


@lru_cache(maxsize=None)
def basis_labels(n: int) -> tuple:
    return tuple([("H", i) for i in range(n)] + [("X", r) for r in all_roots(n)])


@lru_cache(maxsize=None)
def std_matrix(label) -> dict:
    """Sparse 2n x 2n matrix of a basis element, column convention."""
    kind, data = label
    if kind == "H":
        raise TypeError("rank needed for H; use std_matrix_n")
    x, y = root_factors(data)
    return _quad_action(x, y, len(data))


@lru_cache(maxsize=None)
def std_matrix_n(label, n: int) -> dict:
    kind, data = label
    if kind == "H":
        # (1 - e_i f_i)/2 acts as -ad(e_i f_i / 2)
        return _quad_action(e_idx(data, n), f_idx(data, n), n, Fraction(-1))
    return std_matrix(label)


def sp_add(a: dict, b: dict, cb=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + cb * v
        if not out[k]:
            del out[k]
    return out


def sp_mul(a: dict, b: dict) -> dict:
    rows: dict = {}
    for (r, c), v in b.items():
        rows.setdefault(r, []).append((c, v))
    out: dict = {}
    for (r, c), v in a.items():
        for cc, w in rows.get(c, ()):
            out[(r, cc)] = out.get((r, cc), 0) + v * w
    return {k: v for k, v in out.items() if v}


def sp_bracket(a: dict, b: dict) -> dict:
    return sp_add(sp_mul(a, b), sp_mul(b, a), -1)


def element_matrix(elem: dict, n: int) -> dict:
    """Matrix of a linear combination {label: coeff}."""
    out: dict = {}
    for lab, c in elem.items():
        out = sp_add(out, std_matrix_n(lab, n), c)
    return out


def decompose(mat: dict, n: int) -> dict:
    """Coordinates of a sparse so(2n) matrix in the basis; raises if not in so(2n)."""
    out = {}
    for i in range(n):
        v = mat.get((f_idx(i, n), f_idx(i, n)), 0)
        if v:
            out[("H", i)] = Fraction(v)
    for r in all_roots(n):
        lab = ("X", r)
        ref = std_matrix(lab)
        (rc, val) = next(iter(sorted(ref.items())))
        v = mat.get(rc, 0)
        if v:
            out[lab] = Fraction(v) / val
    if element_matrix(out, n) != {k: v for k, v in mat.items() if v}:
        raise ValueError("matrix is not in so(2n)")
    return out


@lru_cache(maxsize=None)
def structure_constant(a: tuple, b: tuple, n: int) -> tuple:
    """[a, b] for basis labels, as a sorted tuple of (label, coeff)."""
    res = decompose(sp_bracket(std_matrix_n(a, n), std_matrix_n(b, n)), n)
    return tuple(sorted(res.items()))


def bracket(x: dict, y: dict, n: int) -> dict:
    out: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for lab, c in structure_constant(a, b, n):
                out[lab] = out.get(lab, 0) + ca * cb * c
    return {k: v for k, v in out.items() if v}


def label_str(label) -> str:
    kind, data = label
    if kind == "H":
        return f"H(e{data + 1})"
    parts = []
    for i, s in enumerate(data):
        if s:
            parts.append(("+" if s > 0 else "-") + f"e{i + 1}")
    txt = "".join(parts)
    return "X(" + (txt[1:] if txt.startswith("+") else txt) + ")"


def root_height_against(root: Root, h: tuple) -> Fraction:
    return sum(Fraction(a) * b for a, b in zip(root, h))
