"""Brute-force checks by explicit models and characters.

Integral irreducibles are realised inside V(lambda') (x) wedge^j(std), and so
recursively inside tensor powers of the standard representation.  Each weight
space is kept as reduced row echelon rows in the ambient coordinates, so the
coordinates of an ambient vector lying in V(lambda) are just its entries at
the pivot columns.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import flint

from . import lie, linalg, rootsys
from .orbits import OrbitLabel, case_of, orbit_dimension, sl2_triple
from .rootsys import CapacityError, Weight
from .spectra import connected_spectrum, psi_ids, regular_section_family

D_MAT = 4000
ZERO = flint.fmpq(0)


def _shift(mu: tuple, root: tuple, s: int = 1) -> tuple:
    return tuple(a + 2 * s * r for a, r in zip(mu, root))


def _simple_roots(n: int) -> list[tuple]:
    return [tuple(r) for r in rootsys.simple_roots(n)]


# ---------------------------------------------------------------------------
# exterior powers of the standard representation

@lru_cache(maxsize=None)
def _root_columns(root: tuple) -> dict:
    cols: dict = {}
    for (row, col), v in lie.std_matrix(("X", root)).items():
        cols.setdefault(col, []).append((row, flint.fmpq(int(v))))
    return cols


@lru_cache(maxsize=200000)
def wedge_action(root: tuple, S: tuple) -> tuple:
    """X(root) on u_S = u_{s1} ^ ... ^ u_{sj}, as ((S', coeff), ...)."""
    cols = _root_columns(root)
    out: dict = {}
    for pos, u in enumerate(S):
        for row, v in cols.get(u, ()):
            if row in S:
                continue
            rest = S[:pos] + S[pos + 1:]
            below = sum(1 for s in rest if s < row)
            sign = -1 if (below - pos) % 2 else 1
            new = tuple(sorted(rest + (row,)))
            out[new] = out.get(new, ZERO) + sign * v
    return tuple((k, v) for k, v in out.items() if v != 0)


def wedge_weight(S: tuple, n: int) -> tuple:
    w = [0] * n
    for u in S:
        if u < n:
            w[u] += 2
        else:
            w[u - n] -= 2
    return tuple(w)


# ---------------------------------------------------------------------------
# matrix models

class MatrixRep:
    """V(lambda) with lazily computed root-vector blocks between weight spaces."""

    def __init__(self, lam: Weight, parent: Optional["MatrixRep"], top: Optional[tuple]):
        self.n = lam.n
        self.highest_weight = lam
        self.parent = parent
        self.top = top  # wedge vector generating together with the parent's top
        self.weights: dict = {}
        self.basis: dict = {}
        self.pivots: dict = {}
        self._blocks: dict = {}
        self.dim = 0

    # construction -------------------------------------------------------
    @classmethod
    def trivial(cls, n: int) -> "MatrixRep":
        rep = cls(rootsys.zero(n), None, None)
        z = (0,) * n
        rep.weights = {z: 1}
        rep.basis = {z: [{(): flint.fmpq(1)}]}
        rep.pivots = {z: [()]}
        rep.dim = 1
        return rep

    def _generate(self) -> None:
        lam = self.highest_weight
        table = rootsys.freudenthal(lam)
        self.weights = {w.twice: m for w, m in table.entries.items()}
        ptop = self.parent.highest_weight.twice
        start = {(ptop, 0, self.top): flint.fmpq(1)}
        depth = {}
        for mu in self.weights:
            c = rootsys.simple_root_coeffs([a - b for a, b in zip(lam.twice, mu)])
            depth[mu] = sum(c)
        order = sorted(self.weights, key=lambda m: (depth[m], m))
        simple = _simple_roots(self.n)
        for mu in order:
            if mu == lam.twice:
                vecs = [start]
            else:
                vecs = []
                for a in simple:
                    src = _shift(mu, a)
                    if src in self.basis:
                        neg = tuple(-x for x in a)
                        for b in self.basis[src]:
                            img = self._ambient_apply(neg, b)
                            if img:
                                vecs.append(img)
            rows, piv = _rref_vectors(vecs)
            if len(rows) != self.weights[mu]:
                raise ArithmeticError(
                    f"weight {Weight(mu)} of V{lam}: got {len(rows)}, expected {self.weights[mu]}")
            self.basis[mu] = rows
            self.pivots[mu] = piv
        self.dim = sum(self.weights.values())

    # actions --------------------------------------------------------------
    def _ambient_apply(self, root: tuple, vec: dict) -> dict:
        out: dict = {}
        P = self.parent
        for (nu, i, S), c in vec.items():
            col = P.block(root, nu)[i]
            if col:
                nu2 = _shift(nu, root)
                for j, v in col.items():
                    k = (nu2, j, S)
                    out[k] = out.get(k, ZERO) + c * v
            for S2, v in wedge_action(root, S):
                k = (nu, i, S2)
                out[k] = out.get(k, ZERO) + c * v
        return {k: v for k, v in out.items() if v != 0}

    def block(self, root: tuple, mu: tuple) -> list:
        """Columns of X(root): V_mu -> V_{mu+root}, each a dict {target index: coeff}."""
        key = (root, mu)
        got = self._blocks.get(key)
        if got is not None:
            return got
        m = self.weights.get(mu, 0)
        target = _shift(mu, root)
        if self.parent is None or target not in self.weights:
            res = [{} for _ in range(m)]
        else:
            piv = self.pivots[target]
            res = []
            for b in self.basis[mu]:
                img = self._ambient_apply(root, b)
                res.append({j: img[p] for j, p in enumerate(piv) if p in img})
        self._blocks[key] = res
        return res

    def apply(self, label, vec: dict) -> dict:
        """Basis element (H/X label) on a vector {(mu, i): coeff}."""
        kind, data = label
        out: dict = {}
        if kind == "H":
            for (mu, i), c in vec.items():
                if mu[data]:
                    out[(mu, i)] = c * flint.fmpq(mu[data], 2)
            return out
        for (mu, i), c in vec.items():
            col = self.block(data, mu)[i]
            if col:
                t = _shift(mu, data)
                for j, v in col.items():
                    k = (t, j)
                    out[k] = out.get(k, ZERO) + c * v
        return {k: v for k, v in out.items() if v != 0}

    def apply_element(self, elem: dict, vec: dict) -> dict:
        out: dict = {}
        for lab, c in elem.items():
            cc = linalg.fq(c)
            for k, v in self.apply(lab, vec).items():
                out[k] = out.get(k, ZERO) + cc * v
        return {k: v for k, v in out.items() if v != 0}

    # whole matrices, for checks on small models --------------------------
    def index(self) -> dict:
        idx = {}
        for mu in sorted(self.weights, reverse=True):
            for i in range(self.weights[mu]):
                idx[(mu, i)] = len(idx)
        return idx

    def generator_images(self) -> dict:
        idx = self.index()
        out = {}
        for lab in lie.basis_labels(self.n):
            mat = {}
            for (mu, i), col in idx.items():
                for k, v in self.apply(lab, {(mu, i): flint.fmpq(1)}).items():
                    mat[(idx[k], col)] = linalg.to_fraction(v)
            out[lab] = mat
        return out


def _rref_vectors(vecs: list) -> tuple[list, list]:
    keys = sorted({k for v in vecs for k in v})
    pos = {k: j for j, k in enumerate(keys)}
    m = flint.fmpq_mat(len(vecs), len(keys))
    for i, v in enumerate(vecs):
        for k, c in v.items():
            m[i, pos[k]] = c
    r, piv = linalg.rref_rows(m)
    rows = []
    for i in range(r.nrows()):
        rows.append({keys[j]: r[i, j] for j in range(r.ncols()) if r[i, j] != 0})
    return rows, [keys[j] for j in piv]


def _peel_options(lam: Weight) -> list[tuple[tuple, tuple]]:
    """(omega doubled, wedge top vector) with lam - omega dominant."""
    n = lam.n
    out = []
    for j in range(1, n + 1):
        shapes = [tuple([1] * j + [0] * (n - j))]
        if j == n:
            shapes.append(tuple([1] * (n - 1) + [-1]))
        for om in shapes:
            rest = Weight(tuple(a - 2 * b for a, b in zip(lam.twice, om)))
            if rootsys.is_dominant(rest):
                top = tuple(i if om[i] > 0 else n + i for i in range(j))
                out.append((tuple(2 * x for x in om), tuple(sorted(top))))
    return out


_REP_CACHE: dict = {}
_CACHE_LIMIT = 64


def build_irrep(lam: Weight, n: Optional[int] = None, max_dim: int = D_MAT,
                seed: Optional[int] = None) -> MatrixRep:
    if n is not None and n != lam.n:
        raise ValueError("rank mismatch")
    if not lam.is_integral:
        raise ValueError("matrix models cover integral weights only")
    if not rootsys.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if lam.n < 2:
        raise ValueError("rank must be at least 2")
    d = rootsys.weyl_dim(lam)
    if d > max_dim:
        raise CapacityError(f"dim V{lam} = {d} exceeds {max_dim}")
    key = (lam.twice, seed)
    if key in _REP_CACHE:
        return _REP_CACHE[key]
    if not any(lam.twice):
        rep = MatrixRep.trivial(lam.n)
    else:
        opts = _peel_options(lam)
        if seed is None:
            om, top = opts[-1]
        else:
            om, top = random.Random(f"{seed}:{lam.twice}").choice(opts)
        rest = Weight(tuple(a - b for a, b in zip(lam.twice, om)))
        parent = build_irrep(rest, max_dim=max(max_dim, rootsys.weyl_dim(rest)), seed=seed)
        rep = MatrixRep(lam, parent, top)
        rep._generate()
        if rep.dim != d:
            raise ArithmeticError("dimension mismatch with the Weyl formula")
    if len(_REP_CACHE) >= _CACHE_LIMIT:
        _REP_CACHE.pop(next(iter(_REP_CACHE)))
    _REP_CACHE[key] = rep
    return rep


def clear_cache() -> None:
    _REP_CACHE.clear()


# ---------------------------------------------------------------------------
# centralizers

def centralizer_basis(e_matrix: dict, n: int) -> list[dict]:
    """Basis of {x in so(2n) : [x, e] = 0} as {label: Fraction} dicts."""
    labels = lie.basis_labels(n)
    cols = [lie.sp_bracket(lie.std_matrix_n(lab, n), e_matrix) for lab in labels]
    entries = sorted({k for c in cols for k in c})
    pos = {k: i for i, k in enumerate(entries)}
    m = flint.fmpq_mat(max(len(entries), 1), len(labels))
    for j, c in enumerate(cols):
        for k, v in c.items():
            m[pos[k], j] = linalg.fq(v)
    ns = linalg.nullspace(m) if entries else linalg.nullspace(flint.fmpq_mat(0, len(labels)))
    out = []
    for r in range(ns.nrows()):
        out.append({labels[j]: linalg.to_fraction(ns[r, j]) for j in range(len(labels)) if ns[r, j] != 0})
    return out


def centralizer_torus(e_root_support, n: int) -> list[tuple]:
    """Basis of {t in Cartan : alpha(t) = 0 for every root in the support of e}."""
    if not e_root_support:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    m = linalg.mat([list(r) for r in e_root_support], n)
    ns = linalg.nullspace(m)
    return [tuple(linalg.to_fraction(ns[r, j]) for j in range(n)) for r in range(ns.nrows())]


def _torus_weight(label, torus) -> tuple:
    kind, data = label
    if kind == "H":
        return (0,) * len(torus)
    return tuple(sum(Fraction(a) * b for a, b in zip(data, t)) for t in torus)


def split_by_torus(basis: list[dict], torus) -> list[dict]:
    out = []
    for x in basis:
        parts: dict = {}
        for lab, c in x.items():
            parts.setdefault(_torus_weight(lab, torus), {})[lab] = c
        out.extend(parts.values())
    return out


def is_subalgebra(basis: list[dict], n: int) -> bool:
    labels = lie.basis_labels(n)
    m = linalg.mat([[b.get(lab, 0) for lab in labels] for b in basis], len(labels))
    r = linalg.rank(m)
    for a in basis:
        for b in basis:
            c = lie.bracket(a, b, n)
            if not c:
                continue
            m2 = linalg.mat([[x.get(lab, 0) for lab in labels] for x in basis + [c]], len(labels))
            if linalg.rank(m2) != r:
                return False
    return True


# ---------------------------------------------------------------------------
# invariants

@dataclass
class InvariantReport:
    orbit: OrbitLabel
    weight: Weight
    fixed_dim: int
    character_split: dict
    rep_dim: int = 0
    candidate_dim: int = 0

    def to_dict(self) -> dict:
        return {"orbit": str(self.orbit), "weight": str(self.weight), "fixed_dim": self.fixed_dim,
                "character_split": dict(self.character_split), "rep_dim": self.rep_dim,
                "candidate_dim": self.candidate_dim}


def _kernel_step(rep: MatrixRep, elem: dict, K: list) -> list:
    images = [rep.apply_element(elem, v) for v in K]
    keys = sorted({k for im in images for k in im})
    if not keys:
        return K
    pos = {k: i for i, k in enumerate(keys)}
    m = flint.fmpq_mat(len(keys), len(K))
    for j, im in enumerate(images):
        for k, v in im.items():
            m[pos[k], j] = v
    ns = linalg.nullspace(m)
    out = []
    for r in range(ns.nrows()):
        v: dict = {}
        for j in range(len(K)):
            c = ns[r, j]
            if c != 0:
                for k, x in K[j].items():
                    v[k] = v.get(k, ZERO) + c * x
        out.append({k: x for k, x in v.items() if x != 0})
    return out


def _span_rank(vecs: list) -> int:
    if not vecs:
        return 0
    keys = sorted({k for v in vecs for k in v})
    if not keys:
        return 0
    pos = {k: i for i, k in enumerate(keys)}
    m = flint.fmpq_mat(len(vecs), len(keys))
    for i, v in enumerate(vecs):
        for k, c in v.items():
            m[i, pos[k]] = c
    return linalg.rank(m)


def component_torus_sign(orbit: OrbitLabel) -> Optional[tuple[int, int]]:
    """0-based coordinates where the SO component representative acts by -1.

    For Cases 1 and 2 this is -Id on the span of the 3-block and one 1-block,
    which is the torus element with -1 at coordinates 1 and 2k+2.
    """
    case, k = case_of(orbit)
    if case in (1, 2):
        return (0, 2 * k + 1)
    return None


def fixed_vectors(orbit: OrbitLabel, rep: MatrixRep) -> tuple[list, int]:
    n = rep.n
    triple = sl2_triple(orbit)
    e_mat = triple.e_matrix()
    basis = centralizer_basis(e_mat, n)
    torus = centralizer_torus([r for r, _ in triple.e], n)
    parts = split_by_torus(basis, torus)
    # start from the weight spaces on which the centralizer torus acts trivially
    K = []
    for mu, m in rep.weights.items():
        if all(sum(Fraction(a, 2) * b for a, b in zip(mu, t)) == 0 for t in torus):
            for i in range(m):
                K.append({(mu, i): flint.fmpq(1)})
    cand = len(K)
    # nilpotent pieces first: they cut the space down fastest
    parts.sort(key=lambda x: (all(lab[0] == "H" for lab in x), -len(x)))
    for x in parts:
        if not K:
            break
        K = _kernel_step(rep, x, K)
    return K, cand


def invariant_dimension(orbit: OrbitLabel, lam: Weight, max_dim: int = D_MAT,
                        seed: Optional[int] = None) -> InvariantReport:
    rep = build_irrep(lam, max_dim=max_dim, seed=seed)
    K, cand = fixed_vectors(orbit, rep)
    split: dict = {}
    coords = component_torus_sign(orbit)
    if coords is None:
        if K:
            split["Triv"] = len(K)
    elif K:
        a, b = coords

        def act(v):
            return {k: (x if (k[0][a] + k[0][b]) % 4 == 0 else -x) for k, x in v.items()}

        plus, minus = [], []
        for v in K:
            tv = act(v)
            plus.append({k: (x + tv.get(k, ZERO)) / 2 for k, x in v.items() if x + tv.get(k, ZERO) != 0})
            minus.append({k: (x - tv.get(k, ZERO)) / 2 for k, x in v.items() if x - tv.get(k, ZERO) != 0})
        rp, rm = _span_rank(plus), _span_rank(minus)
        if rp:
            split["1"] = rp
        if rm:
            split["2"] = rm
    return InvariantReport(orbit, lam, len(K), split, rep.dim, cand)


@dataclass
class CrossValidation:
    orbit: OrbitLabel
    cutoff: Fraction
    checked: int
    skipped: list
    discrepancies: list
    reports: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {"orbit": str(self.orbit), "cutoff": str(self.cutoff), "checked": self.checked,
                "skipped": [str(w) for w in self.skipped], "ok": self.ok,
                "discrepancies": self.discrepancies}


def expected_split(orbit: OrbitLabel, lam: Weight) -> dict:
    out = {}
    for psi in psi_ids(orbit):
        if regular_section_family(orbit, psi).contains(lam):
            out[psi] = 1
    return out


def cross_validate(orbit: OrbitLabel, cutoff=4, max_dim: int = D_MAT, seed: Optional[int] = None,
                   weights: Optional[list] = None) -> CrossValidation:
    n = orbit.n
    if n > 4:
        raise CapacityError("matrix oracle is limited to n <= 4")
    if weights is None:
        weights = rootsys.dominant_weights_in_box(n, Fraction(cutoff), "integral")
    skipped, bad, reports = [], [], []
    checked = 0
    for lam in weights:
        if rootsys.weyl_dim(lam) > max_dim:
            skipped.append(lam)
            continue
        rep = invariant_dimension(orbit, lam, max_dim=max_dim, seed=seed)
        reports.append(rep)
        checked += 1
        exp = expected_split(orbit, lam)
        if rep.fixed_dim != sum(exp.values()) or rep.character_split != exp:
            bad.append({"weight": str(lam), "fixed_dim": rep.fixed_dim,
                        "split": rep.character_split, "expected": exp})
    return CrossValidation(orbit, Fraction(cutoff), checked, skipped, bad, reports)


# ---------------------------------------------------------------------------
# branching to Spin(2p) x Spin(2p)

SIGMA_TYPES = ("i", "ii", "iii", "iv")


def _spins(p: int) -> tuple[Weight, Weight]:
    h = Fraction(1, 2)
    return Weight.of(*([h] * p)), Weight.of(*([h] * (p - 1) + [-h]))


def sigma_decomposition(p: int, sigma: str) -> Counter:
    """The U-type as a multiset of (x, y) doubled highest-weight pairs."""
    sp, sm = _spins(p)
    z = rootsys.zero(p).twice
    out: Counter = Counter()
    if sigma == "i":
        for w, m in rootsys.tensor_decompose(sp, sp).items():
            out[(w.twice, z)] += m
    elif sigma == "ii":
        for w, m in rootsys.tensor_decompose(sm, sp).items():
            out[(w.twice, z)] += m
    elif sigma == "iii":
        out[(sp.twice, sp.twice)] += 1
    elif sigma == "iv":
        out[(sp.twice, sm.twice)] += 1
    else:
        raise ValueError(f"unknown U-type {sigma!r}; choose from {', '.join(SIGMA_TYPES)}")
    return out


def _pair_height(xy) -> tuple:
    x, y = xy
    return (rootsys.height_key(x)[0] + rootsys.height_key(y)[0], x, y)


def restrict_to_product(lam: Weight, p: int) -> Counter:
    """Decomposition of V(lam)|_{D_p x D_p} for lam a D_{2p} weight."""
    if lam.n != 2 * p:
        raise ValueError("weight must have 2p coordinates")
    table = rootsys.freudenthal(lam).entries
    residual: dict = {}
    for w, m in table.items():
        x, y = w.twice[:p], w.twice[p:]
        if rootsys.is_dominant(Weight(x)) and rootsys.is_dominant(Weight(y)):
            residual[(x, y)] = residual.get((x, y), 0) + m
    out: Counter = Counter()
    while residual:
        top = max(residual, key=_pair_height)
        c = residual[top]
        if c < 0:
            raise ArithmeticError("negative residual in branching")
        out[top] += c
        mx = rootsys._dominant_mults(top[0])
        my = rootsys._dominant_mults(top[1])
        for a, ma in mx:
            for b, mb in my:
                left = residual.get((a, b), 0) - c * ma * mb
                if left:
                    residual[(a, b)] = left
                else:
                    residual.pop((a, b), None)
    return out


def branching_induction_oracle(p: int, sigma: str, cutoff) -> dict:
    """Multiplicity of V(lam) in Ind_U^K(sigma) = dim Hom_U(V(lam), sigma)."""
    if p not in (1, 2):
        raise CapacityError("branching oracle supports p in {1, 2}")
    sig = sigma_decomposition(p, sigma)
    out = {}
    for lam in rootsys.dominant_weights_in_box(2 * p, Fraction(cutoff)):
        res = restrict_to_product(lam, p)
        out[lam] = sum(m * res.get(t, 0) for t, m in sig.items())
    return out
