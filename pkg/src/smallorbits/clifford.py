"""Exact Clifford algebra C(V) for a 2n-dimensional quadratic space.

The space has n coordinate pairs.  Pair j is either hyperbolic, spanned by
e_j, f_j with Q(e_j, f_j) = 1 and Q(e_j, e_j) = Q(f_j, f_j) = 0, or
orthonormal, spanned by v_j, w_j with Q(v_j, v_j) = Q(w_j, w_j) = 1.
Generator ids are 2j and 2j+1, so monomials are increasing id tuples in the
order e1 < f1 < e2 < f2 < ...  Coefficients are Gaussian rationals.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from sympy.polys.domains import QQ, QQ_I

from . import lie
from .orbits import OrbitLabel, _abelian_type, case_of, component_group

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I_UNIT = QQ_I(0, 1)


def gq(re=0, im=0):
    """Gaussian rational from ints/Fractions."""
    re, im = Fraction(re), Fraction(im)
    return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))


@dataclass(frozen=True)
class Space:
    n: int
    orthonormal: frozenset = frozenset()

    def kind(self, pair: int) -> str:
        return "orth" if pair in self.orthonormal else "hyp"

    def Q(self, a: int, b: int) -> int:
        pa, pb = a // 2, b // 2
        if pa != pb:
            return 0
        if self.kind(pa) == "hyp":
            return 1 if a != b else 0
        return 1 if a == b else 0

    def name(self, g: int) -> str:
        j, s = divmod(g, 2)
        if self.kind(j) == "hyp":
            return ("e" if s == 0 else "f") + str(j + 1)
        return ("v" if s == 0 else "w") + str(j + 1)


@lru_cache(maxsize=None)
def _mono_gen(space: Space, m: tuple, g: int) -> tuple:
    """m * g as a tuple of (int coefficient, monomial)."""
    idx = len(m)
    while idx > 0 and m[idx - 1] > g:
        idx -= 1
    lower, higher = m[:idx], m[idx:]
    partner = g ^ 1
    out = []
    if higher and higher[0] == partner and space.kind(g // 2) == "hyp":
        rest = higher[1:]
        sign = (-1) ** len(rest)
        # t g = 2Q(t,g) - g t
        out.append((2 * sign, lower + rest))
        if not (lower and lower[-1] == g):
            out.append((-sign, lower + (g, partner) + rest))
        return tuple(out)
    sign = (-1) ** len(higher)
    if lower and lower[-1] == g:
        q = space.Q(g, g)
        if q:
            out.append((sign * q, lower[:-1] + higher))
        return tuple(out)
    return ((sign, lower + (g,) + higher),)


@lru_cache(maxsize=None)
def _mono_mono(space: Space, a: tuple, b: tuple) -> tuple:
    cur = {a: 1}
    for g in b:
        nxt: dict = {}
        for mono, c in cur.items():
            for c2, m2 in _mono_gen(space, mono, g):
                nxt[m2] = nxt.get(m2, 0) + c * c2
        cur = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(cur.items()))


def _coeff_str(c) -> str:
    re, im = Fraction(int(c.x.numerator), int(c.x.denominator)), Fraction(int(c.y.numerator), int(c.y.denominator))

    def f(x):
        s = "+" if x >= 0 else "-"
        x = abs(x)
        return s + (str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}")

    if im == 0:
        return f"({f(re)})"
    if re == 0:
        return f"({f(im)}i)"
    return f"({f(re)}{f(im)}i)"


@dataclass(frozen=True)
class CliffordElement:
    space: Space
    terms: tuple  # sorted ((monomial, coeff), ...) with coeff != 0

    @classmethod
    def from_dict(cls, space: Space, d: dict) -> "CliffordElement":
        return cls(space, tuple(sorted(((m, c) for m, c in d.items() if c != ZERO), key=lambda t: (len(t[0]), t[0]))))

    @classmethod
    def scalar(cls, space: Space, c=1) -> "CliffordElement":
        c = c if isinstance(c, type(ONE)) else gq(c)
        return cls.from_dict(space, {(): c})

    @classmethod
    def gen(cls, space: Space, g: int) -> "CliffordElement":
        return cls.from_dict(space, {(g,): ONE})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _check(self, other):
        if self.space != other.space:
            raise ValueError("elements live in different Clifford algebras")

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.space, other)
        self._check(other)
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, ZERO) + c
        return CliffordElement.from_dict(self.space, d)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.space, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.space, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CliffordElement":
        c = c if isinstance(c, type(ONE)) else gq(c)
        return CliffordElement.from_dict(self.space, {m: v * c for m, v in self.terms})

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return self.scale(other)
        return cl_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.space, other)
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {len(m) for m, _ in self.terms}

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees())

    def scalar_part(self):
        return self.as_dict().get((), ZERO)

    def is_scalar(self) -> bool:
        return self.degrees() <= {0}

    def vector_coords(self) -> dict:
        if not self.degrees() <= {1}:
            raise ValueError("element is not a vector")
        return {m[0]: c for m, c in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.terms:
            mono = "".join(self.space.name(g) for g in m) or "1"
            out.append(f"{_coeff_str(c)}·{mono}")
        return " ".join(out)

    __repr__ = __str__


_INT_CACHE: dict = {}


def _as_gq(k: int):
    # converting ints into QQ_I dominates the cost of products otherwise
    v = _INT_CACHE.get(k)
    if v is None:
        v = _INT_CACHE[k] = gq(k)
    return v


def cl_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    a._check(b)
    out: dict = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            cc = ca * cb
            for m, k in _mono_mono(a.space, ma, mb):
                t = cc if k == 1 else (-cc if k == -1 else cc * _as_gq(k))
                prev = out.get(m)
                out[m] = t if prev is None else prev + t
    return CliffordElement.from_dict(a.space, out)


@lru_cache(maxsize=None)
def _star_mono(space: Space, m: tuple) -> tuple:
    """(-1)^r x_r...x_1 for the monomial x_1...x_r, as (monomial, int) pairs."""
    cur = {(): (-1) ** len(m)}
    for g in reversed(m):
        nxt: dict = {}
        for mono, c in cur.items():
            for c2, m2 in _mono_gen(space, mono, g):
                nxt[m2] = nxt.get(m2, 0) + c * c2
        cur = {k: v for k, v in nxt.items() if v}
    return tuple(sorted(cur.items()))


def star(a: CliffordElement) -> CliffordElement:
    """(x_1...x_r)* = (-1)^r x_r...x_1, extended linearly."""
    out: dict = {}
    for m, c in a.terms:
        for mono, k in _star_mono(a.space, m):
            t = c * _as_gq(k)
            prev = out.get(mono)
            out[mono] = t if prev is None else prev + t
    return CliffordElement.from_dict(a.space, out)


def alpha(a: CliffordElement) -> CliffordElement:
    return CliffordElement.from_dict(a.space, {m: c * ((-1) ** len(m)) for m, c in a.terms})


def commutator(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return cl_mul(a, b) - cl_mul(b, a)


def norm(x: CliffordElement) -> CliffordElement:
    return cl_mul(x, star(x))


class NotInPin(ValueError):
    pass


def rho_action(x: CliffordElement, u: CliffordElement) -> CliffordElement:
    """rho(x)u = alpha(x) u x* / N(x) with N(x) = x x* a nonzero scalar.

    Dividing by N(x) makes the action independent of how x is scaled; for
    elements with x x* = 1 this is the defining formula.
    """
    return _rho_parts(x)(u)


def _rho_parts(x: CliffordElement):
    sx = star(x)
    nx = cl_mul(x, sx)
    if not nx.is_scalar() or nx.is_zero():
        raise NotInPin("x x* is not a nonzero scalar")
    ax, inv = alpha(x), ONE / nx.scalar_part()

    def act(u):
        res = cl_mul(cl_mul(ax, u), sx).scale(inv)
        if not res.degrees() <= {1}:
            raise NotInPin("rho(x) does not preserve V")
        return res
    return act


def rho_matrix(x: CliffordElement) -> dict:
    """{(row, col): coeff} of rho(x) on the generator basis of V."""
    out = {}
    act = _rho_parts(x)
    for g in range(2 * x.space.n):
        img = act(CliffordElement.gen(x.space, g))
        for h, c in img.vector_coords().items():
            out[(h, g)] = c
    return out


# ---------------------------------------------------------------------------
# Lie algebra correspondence

def hyperbolic_space(n: int) -> Space:
    return Space(n)


def lie_element(label, n: int) -> CliffordElement:
    sp = hyperbolic_space(n)
    half = gq(Fraction(1, 2))
    kind, data = label
    if kind == "H":
        i = data
        ef = cl_mul(CliffordElement.gen(sp, 2 * i), CliffordElement.gen(sp, 2 * i + 1))
        return (CliffordElement.scalar(sp, 1) - ef).scale(half)
    x, y = lie.root_factors(data)
    return cl_mul(CliffordElement.gen(sp, _cl_id(x, n)), CliffordElement.gen(sp, _cl_id(y, n))).scale(half)


def _cl_id(u: int, n: int) -> int:
    """Clifford generator id of the standard-rep basis vector u (f_i: i, e_i: n+i)."""
    return 2 * (u - n) if u >= n else 2 * u + 1


def lie_basis(n: int) -> dict:
    if n < 2:
        raise ValueError("n must be at least 2")
    return {lab: lie_element(lab, n) for lab in lie.basis_labels(n)}


def ad_on_vectors(x: CliffordElement) -> dict:
    """Matrix of u -> xu - ux on V, in the standard-rep index convention."""
    n = x.space.n
    out = {}
    for u in range(2 * n):
        g = _cl_id(u, n)
        img = commutator(x, CliffordElement.gen(x.space, g))
        for h, c in img.vector_coords().items():
            row = h // 2 + n if h % 2 == 0 else h // 2
            out[(row, u)] = c
    return out


def clifford_from_lie(elem: dict, n: int) -> CliffordElement:
    sp = hyperbolic_space(n)
    out = CliffordElement.from_dict(sp, {})
    for lab, c in elem.items():
        out = out + lie_element(lab, n).scale(gq(c))
    return out


# ---------------------------------------------------------------------------
# Jordan blocks and Ep elements

@dataclass(frozen=True)
class OddBlock:
    size: int
    hyp: tuple  # hyperbolic pair indices, in chain order
    vector: int  # generator id of v or w


@dataclass(frozen=True)
class BlockRealization:
    space: Space
    e: CliffordElement
    odd_blocks: tuple  # single odd blocks carrying Ep elements
    paired_odd: tuple  # ((size, pairs), ...) equal odd blocks realised like even ones
    even_pairs: tuple  # ((size, pairs), ...)


def _half_sum(space, terms):
    out = CliffordElement.from_dict(space, {})
    for a, b in terms:
        out = out + cl_mul(CliffordElement.gen(space, a), CliffordElement.gen(space, b))
    return out.scale(gq(Fraction(1, 2)))


def _e(j):
    return 2 * j


def _f(j):
    return 2 * j + 1


def block_realization(label: OrbitLabel) -> BlockRealization:
    """Clifford realisation of a nilpotent e with the label's Jordan blocks.

    Single odd blocks of size 2k+1 take k hyperbolic pairs plus one unit
    vector; two such blocks share an orthonormal pair (v_j on one, w_j on the
    other).  Two equal blocks (even, or odd of equal size) take one
    hyperbolic pair per unit of size.
    """
    mult = label.multiplicities
    n = label.n
    nxt = itertools.count()
    odd_single = []
    paired_odd = []
    even_pairs = []
    for s in sorted(mult, reverse=True):
        r = mult[s]
        if s % 2:
            if r % 2:
                odd_single.append(s)
            for _ in range(r // 2):
                paired_odd.append(s)
        else:
            for _ in range(r // 2):
                even_pairs.append(s)
    if len(odd_single) % 2:
        raise ValueError("odd number of single odd blocks")
    orth = set()
    blocks = []
    for a in range(0, len(odd_single), 2):
        shared = None
        for s in odd_single[a:a + 2]:
            k = (s - 1) // 2
            pairs = tuple(next(nxt) for _ in range(k))
            blocks.append([s, pairs, None])
        shared = next(nxt)
        orth.add(shared)
        blocks[-2][2] = 2 * shared
        blocks[-1][2] = 2 * shared + 1
    paired = [(s, tuple(next(nxt) for _ in range(s))) for s in paired_odd]
    evens = [(s, tuple(next(nxt) for _ in range(s))) for s in even_pairs]
    space = Space(n, frozenset(orth))
    terms = []
    for s, pairs, vec in blocks:
        k = len(pairs)
        for i in range(k - 1):
            terms.append((_e(pairs[i + 1]), _f(pairs[i])))
        if k:
            terms.append((vec, _f(pairs[k - 1])))
    for s, pairs in paired + evens:
        for i in range(len(pairs) - 1):
            terms.append((_e(pairs[i + 1]), _f(pairs[i])))
    e = _half_sum(space, terms)
    if label.very_even_tag is not None and _needs_flip(label):
        # the other very even class: swap the last term e_l f_{l-1} for f_l f_{l-1}
        s, pairs = evens[-1]
        last = (_e(pairs[-1]), _f(pairs[-2]))
        e = e - _half_sum(space, [last]) + _half_sum(space, [(_f(pairs[-1]), _f(pairs[-2]))])
    return BlockRealization(space, e,
                            tuple(OddBlock(s, p, v) for s, p, v in blocks),
                            tuple(paired), tuple(evens))


def _needs_flip(label: OrbitLabel) -> bool:
    # with the standard blocks, e spans the Lagrangian of class I exactly when
    # the number of 2-block pairs n/2 is even
    p = label.n // 2
    standard_is_I = p % 2 == 0
    return (label.very_even_tag == "I") != standard_is_I


def epsilon_odd(space: Space, hyp_pairs: Sequence[int], vector: int) -> CliffordElement:
    """Ep_{2k+1} = i^k v prod (1 - e_j f_j) over the block's k pairs."""
    k = len(hyp_pairs)
    x = CliffordElement.gen(space, vector).scale(I_UNIT ** k if k else ONE)
    for j in hyp_pairs:
        x = cl_mul(x, _one_minus_ef(space, j))
    return x


def _one_minus_ef(space: Space, j: int) -> CliffordElement:
    return CliffordElement.scalar(space, 1) - cl_mul(CliffordElement.gen(space, _e(j)), CliffordElement.gen(space, _f(j)))


def epsilon_2n(n: int) -> CliffordElement:
    """Ep_{2n} = i^n prod_j (1 - e_j f_j) on the hyperbolic space."""
    sp = hyperbolic_space(n)
    x = CliffordElement.scalar(sp, 1).scale(I_UNIT ** n)
    for j in range(n):
        x = cl_mul(x, _one_minus_ef(sp, j))
    return x


def epsilon_2n_vw(n: int) -> CliffordElement:
    """The other printed form i^(n-1) v w prod_{j<n} (1 - e_j f_j), with pair n orthonormal."""
    sp = Space(n, frozenset({n - 1}))
    x = cl_mul(CliffordElement.gen(sp, 2 * (n - 1)), CliffordElement.gen(sp, 2 * (n - 1) + 1))
    x = x.scale(I_UNIT ** (n - 1))
    for j in range(n - 1):
        x = cl_mul(x, _one_minus_ef(sp, j))
    return x


def block_ep(real: BlockRealization, b: OddBlock) -> CliffordElement:
    return epsilon_odd(real.space, b.hyp, b.vector)


def block_vectors(real: BlockRealization, b: OddBlock) -> list[int]:
    out = [b.vector]
    for j in b.hyp:
        out += [_e(j), _f(j)]
    return sorted(out)


def ep_square(k: int) -> int:
    """The scalar Ep_{2k+1}^2."""
    sp = Space(k + 1, frozenset({k}))
    x = epsilon_odd(sp, tuple(range(k)), 2 * k)
    sq = cl_mul(x, x)
    if not sq.is_scalar():
        raise ArithmeticError("square is not scalar")
    return int(sq.scalar_part().x)


def ep_commutation(k: int, l: int) -> int:
    """Sign s with Ep_{2k+1} Ep_{2l+1} = s Ep_{2l+1} Ep_{2k+1} for two distinct blocks."""
    sp = Space(k + l + 1, frozenset({k + l}))
    a = epsilon_odd(sp, tuple(range(k)), 2 * (k + l))
    b = epsilon_odd(sp, tuple(range(k, k + l)), 2 * (k + l) + 1)
    ab, ba = cl_mul(a, b), cl_mul(b, a)
    if ab == ba:
        return 1
    if ab == -ba:
        return -1
    raise ArithmeticError("Ep elements neither commute nor anticommute")


# ---------------------------------------------------------------------------
# component groups from Clifford products

@dataclass(frozen=True)
class GroupTable:
    label: str
    elements: tuple  # display names
    table: tuple  # table[i][j] = index of elements[i]*elements[j]
    subgroup_type: str  # type of the generated subgroup of Spin
    kernel: tuple  # indices lying in the identity component
    group_type: str  # type of the quotient, i.e. A_Spin
    checks: dict


def component_group_table(label: OrbitLabel, n: Optional[int] = None) -> GroupTable:
    real = block_realization(label)
    sp = real.space
    one = CliffordElement.scalar(sp, 1)
    gens = [(-one, "-1")]
    eps = [block_ep(real, b) for b in real.odd_blocks]
    names = [f"Ep{b.size}" for b in real.odd_blocks]
    for i in range(1, len(eps)):
        gens.append((cl_mul(eps[0], eps[i]), f"{names[0]}*{names[i]}"))
    elems = [(one, "1")]
    seen = {one: 0}
    frontier = [0]
    while frontier:
        new = []
        for idx in frontier:
            x, xn = elems[idx]
            for g, gn in gens:
                y = cl_mul(x, g)
                if y not in seen:
                    seen[y] = len(elems)
                    yn = gn if xn == "1" else f"{xn}*{gn}"
                    elems.append((y, yn))
                    new.append(seen[y])
        frontier = new
    # tidy names: recognise -x
    names_out = []
    for x, nm in elems:
        names_out.append(_pretty(x, elems, nm))
    table = tuple(tuple(seen[cl_mul(a, b)] for b, _ in elems) for a, _ in elems)
    e = real.e
    checks = {
        "commute_with_e": all(commutator(x, e).is_zero() for x, _ in elems),
        "even": all(x.is_even() for x, _ in elems),
        "norm_one": all(norm(x) == one for x, _ in elems),
    }
    kernel = {0}
    if any(r > 1 for s, r in label.multiplicities.items() if s % 2):
        # -1 lies on a path inside the centralizer (theta path)
        kernel.add(seen[-one])
    # close the kernel under multiplication
    changed = True
    while changed:
        changed = False
        for a in list(kernel):
            for b in list(kernel):
                c = table[a][b]
                if c not in kernel:
                    kernel.add(c)
                    changed = True
    order = len(elems)
    cosets = {}
    for i in range(order):
        key = frozenset(table[i][k] for k in kernel)
        cosets.setdefault(key, i)
    reps = sorted(cosets.values())
    coset_of = {}
    for key, i in cosets.items():
        for j in key:
            coset_of[j] = i

    def qmul(a, b):
        return coset_of[table[a][b]]

    quotient_type = _abelian_type(reps, qmul, coset_of[0]) if _is_abelian(reps, qmul) else f"nonabelian({len(reps)})"
    sub_type = _abelian_type(range(order), lambda a, b: table[a][b], 0) if _is_abelian(range(order), lambda a, b: table[a][b]) else f"nonabelian({order})"
    return GroupTable(str(label), tuple(names_out), table, sub_type, tuple(sorted(kernel)), quotient_type, checks)


def _is_abelian(elems, mul) -> bool:
    elems = list(elems)
    return all(mul(a, b) == mul(b, a) for a in elems for b in elems)


def _pretty(x, elems, nm):
    for y, ynm in elems:
        if y == -x and "-1" not in ynm and ynm != nm:
            return "-" + ynm if ynm != "1" else "-1"
    return nm


def check_component_group(label: OrbitLabel) -> bool:
    """Clifford table type equals the combinatorial Spin descriptor."""
    return component_group_table(label).group_type == component_group(label, "Spin").group_type


# ---------------------------------------------------------------------------
# theta path

@dataclass(frozen=True)
class ThetaReport:
    size: int
    at_0_is_identity: bool
    at_2pi_is_minus_identity: bool
    endpoints_commute_with_e: bool
    midpoint_commutes_with_e: bool
    lie_element_commutes_with_e: bool

    @property
    def ok(self) -> bool:
        return all([self.at_0_is_identity, self.at_2pi_is_minus_identity,
                    self.endpoints_commute_with_e, self.midpoint_commutes_with_e,
                    self.lie_element_commutes_with_e])


def theta_path_check(size: int) -> ThetaReport:
    """Two odd blocks of equal size 2k+1 realised on 2k+1 hyperbolic pairs.

    The path prod_j [cos(t/2) + i sin(t/2)(1 - e_j f_j)] is evaluated where
    cos and sin are exact: t = 0, pi, 2pi.
    """
    if size % 2 == 0:
        raise ValueError("block size must be odd")
    sp = hyperbolic_space(size)
    e = _half_sum(sp, [(_e(i + 1), _f(i)) for i in range(size - 1)])
    one = CliffordElement.scalar(sp, 1)

    def point(c, s):
        x = one
        for j in range(size):
            x = cl_mul(x, one.scale(gq(c)) + _one_minus_ef(sp, j).scale(I_UNIT * gq(s)))
        return x

    p0 = point(1, 0)
    p2pi = point(-1, 0)
    ppi = point(0, 1)
    lie_el = CliffordElement.from_dict(sp, {})
    for j in range(size):
        lie_el = lie_el + _one_minus_ef(sp, j)
    return ThetaReport(
        size,
        p0 == one,
        p2pi == -one,
        commutator(p0, e).is_zero() and commutator(p2pi, e).is_zero(),
        commutator(ppi, e).is_zero(),
        commutator(lie_el, e).is_zero(),
    )


def jordan_type_on_V(x: CliffordElement) -> list[int]:
    """Partition of the nilpotent map u -> [x, u] on V, from ranks of powers."""
    from . import linalg
    n = x.space.n
    dim = 2 * n
    M = {}
    for g in range(dim):
        img = commutator(x, CliffordElement.gen(x.space, g))
        for h, c in img.vector_coords().items():
            M[(h, g)] = c
    # Gaussian rationals: split real/imag blocks to get a rational matrix
    rows = []
    for i in range(dim):
        rows.append([M.get((i, j), ZERO) for j in range(dim)])
    ranks = [dim]
    P = [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
    while ranks[-1] > 0:
        P = [[sum((P[i][k] * rows[k][j] for k in range(dim)), ZERO) for j in range(dim)] for i in range(dim)]
        ranks.append(_complex_rank(P))
        if len(ranks) > dim + 1:
            raise ArithmeticError("map is not nilpotent")
    # number of blocks of size >= j is rank(A^{j-1}) - rank(A^j)
    ge = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    parts = []
    for j in range(len(ge)):
        exact = ge[j] - (ge[j + 1] if j + 1 < len(ge) else 0)
        parts += [j + 1] * exact
    return sorted(parts, reverse=True)


def _complex_rank(rows) -> int:
    from . import linalg
    # rank over Q(i) of A + iB equals half the rank of [[A, -B], [B, A]]
    dim = len(rows)
    big = []
    for i in range(dim):
        big.append([_re(c) for c in rows[i]] + [-_im(c) for c in rows[i]])
    for i in range(dim):
        big.append([_im(c) for c in rows[i]] + [_re(c) for c in rows[i]])
    return linalg.rank(linalg.mat(big, 2 * dim)) // 2


def _re(c) -> Fraction:
    return Fraction(int(c.x.numerator), int(c.x.denominator))


def _im(c) -> Fraction:
    return Fraction(int(c.y.numerator), int(c.y.denominator))


def same_very_even_class(label: OrbitLabel) -> bool:
    """Image of the block realisation and of the sl2 representative lie in the
    same family of Lagrangians: dim of their intersection is congruent to n mod 2."""
    from . import linalg
    from .orbits import sl2_triple
    n = label.n
    real = block_realization(label)
    # block realisation uses the hyperbolic space when the label is very even
    A = {k: _re(v) for k, v in ad_on_vectors(real.e).items()}
    B = sl2_triple(label).e_matrix()
    cols_a = [[A.get((i, j), 0) for i in range(2 * n)] for j in range(2 * n)]
    cols_b = [[B.get((i, j), 0) for i in range(2 * n)] for j in range(2 * n)]
    ra = linalg.rank(linalg.mat(cols_a, 2 * n))
    rb = linalg.rank(linalg.mat(cols_b, 2 * n))
    rab = linalg.rank(linalg.mat(cols_a + cols_b, 2 * n))
    return (ra + rb - rab - n) % 2 == 0


def vw_to_hyperbolic(x: CliffordElement, pair: int) -> CliffordElement:
    """Rewrite an orthonormal pair in hyperbolic terms, v = (e+f)/sqrt2, w = (e-f)/(i sqrt2).

    Only the product v w = -i(1 - e f) is rational, so every monomial must
    contain both v and w or neither.
    """
    if x.space.kind(pair) != "orth":
        raise ValueError("pair is not orthonormal")
    sp = Space(x.space.n, x.space.orthonormal - {pair})
    v, w = 2 * pair, 2 * pair + 1
    out: dict = {}
    for m, c in x.terms:
        if (v in m) != (w in m):
            raise ValueError("monomial has an odd number of v, w factors")
        if v not in m:
            out[m] = out.get(m, ZERO) + c
            continue
        i = m.index(v)
        a, b = m[:i], m[i + 2:]
        out[a + b] = out.get(a + b, ZERO) - I_UNIT * c
        out[a + (v, w) + b] = out.get(a + (v, w) + b, ZERO) + I_UNIT * c
    return CliffordElement.from_dict(sp, out)
