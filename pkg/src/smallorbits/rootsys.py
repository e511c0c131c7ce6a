"""Type D root and weight combinatorics.

Weights of Spin(2n) are stored as doubled integers so that half-integral
coordinates stay exact.  Everything here is plain integer arithmetic.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

D_CHAR = 200000


class CapacityError(RuntimeError):
    pass


def _to_fraction(x) -> Fraction:
    if isinstance(x, str):
        x = x.strip().replace("−", "-")
    return Fraction(x)


@dataclass(frozen=True, order=True)
class Weight:
    twice: tuple[int, ...]

    def __post_init__(self):
        if len({t % 2 for t in self.twice}) > 1:
            raise ValueError(f"mixed integrality in {self.twice}")

    @classmethod
    def of(cls, *coords) -> "Weight":
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
            coords = tuple(coords[0])
        twice = []
        for c in coords:
            f = _to_fraction(c) * 2
            if f.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            twice.append(int(f))
        return cls(tuple(twice))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        text = text.strip().strip("()[]")
        return cls.of(*[t for t in text.replace(";", ",").split(",") if t.strip()])

    @property
    def n(self) -> int:
        return len(self.twice)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in self.twice)

    @property
    def parity(self) -> str:
        if not self.twice or self.twice[0] % 2 == 0:
            return "integral"
        return "half-integral"

    @property
    def is_integral(self) -> bool:
        return self.parity == "integral"

    def coord_sum(self) -> Fraction:
        return Fraction(sum(self.twice), 2)

    def abs_sum(self) -> Fraction:
        return Fraction(sum(abs(t) for t in self.twice), 2)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.twice, other.twice)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.twice, other.twice)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.twice))

    def __str__(self) -> str:
        return "(" + ", ".join(_fmt(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Weight{self}"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def zero(n: int) -> Weight:
    return Weight((0,) * n)


def is_dominant(w: Weight) -> bool:
    t = w.twice
    n = len(t)
    for i in range(n - 2):
        if t[i] < t[i + 1]:
            return False
    if n >= 2 and t[n - 2] < abs(t[n - 1]):
        return False
    return True


def dominant_rep(twice: tuple[int, ...]) -> tuple[int, ...]:
    """Dominant Weyl-chamber representative (doubled coordinates)."""
    a = sorted((abs(x) for x in twice), reverse=True)
    neg = sum(1 for x in twice if x < 0)
    if neg % 2 and a and a[-1] != 0:
        a[-1] = -a[-1]
    return tuple(a)


def weyl_orbit(twice: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All images under signed permutations with an even number of sign changes."""
    n = len(twice)
    absvals = tuple(abs(x) for x in twice)
    has_zero = 0 in absvals
    target = sum(1 for x in twice if x < 0) % 2
    out = set()
    for perm in set(itertools.permutations(absvals)):
        nz = [i for i in range(n) if perm[i] != 0]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            if not has_zero and signs.count(-1) % 2 != target:
                continue
            v = list(perm)
            for i, s in zip(nz, signs):
                v[i] *= s
            out.add(tuple(v))
    return out


@dataclass(frozen=True)
class RootSystemD:
    n: int
    positive_roots: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    rho: Weight = field(init=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be positive")
        object.__setattr__(self, "positive_roots", tuple(positive_roots(self.n)))
        object.__setattr__(self, "rho", Weight(tuple(2 * (self.n - 1 - i) for i in range(self.n))))

    @property
    def simple_roots(self) -> list[tuple[int, ...]]:
        return simple_roots(self.n)


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[tuple[int, ...], ...]:
    """Positive roots e_i - e_j, e_i + e_j (i<j), plain integer coordinates."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (-1, 1):
                r = [0] * n
                r[i] = 1
                r[j] = s
                out.append(tuple(r))
    return tuple(out)


def simple_roots(n: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        out.append(tuple(r))
    if n >= 2:
        r = [0] * n
        r[n - 2], r[n - 1] = 1, 1
        out.append(tuple(r))
    return out


def simple_root_coeffs(diff_twice: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of a (doubled) weight difference in simple roots, or None
    if it is not in the root lattice."""
    n = len(diff_twice)
    if any(x % 2 for x in diff_twice):
        return None
    d = [x // 2 for x in diff_twice]
    if n == 1:
        return [] if d[0] == 0 else None
    s = list(itertools.accumulate(d))
    c = [Fraction(s[i]) for i in range(n - 2)]
    c.append(Fraction(s[n - 2] - d[n - 1], 2))
    c.append(Fraction(s[n - 2] + d[n - 1], 2))
    if any(x.denominator != 1 for x in c):
        return None
    return c


def dominates(lam: Weight, mu: Weight) -> bool:
    c = simple_root_coeffs([a - b for a, b in zip(lam.twice, mu.twice)])
    return c is not None and all(x >= 0 for x in c)


def _inner2(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def weyl_dim(lam: Weight, n: int | None = None) -> int:
    if n is not None and n != lam.n:
        raise ValueError("rank mismatch")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = lam.n
    rho2 = RootSystemD(n).rho.twice
    shifted = [a + b for a, b in zip(lam.twice, rho2)]
    num = Fraction(1)
    for alpha in positive_roots(n):
        num *= Fraction(_inner2(shifted, alpha), _inner2(rho2, alpha))
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    entries: dict
    cutoff: Fraction | None = None  # None means the table is complete

    def mult(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def dominant(self) -> dict:
        return {w: m for w, m in self.entries.items() if is_dominant(w)}


@lru_cache(maxsize=4096)
def _dominant_mults(lam2: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    n = len(lam2)
    if n <= 1:
        # D_1 is a torus: every character is a single weight
        return ((lam2, 1),)
    roots = [tuple(2 * x for x in r) for r in positive_roots(n)]
    rho2 = RootSystemD(n).rho.twice
    # candidate dominant weights below lam
    cands = []
    top = lam2[0] if n else 0
    par = lam2[0] % 2 if n else 0
    for tup in _dominant_tuples(n, top, par):
        c = simple_root_coeffs([a - b for a, b in zip(lam2, tup)])
        if c is not None and all(x >= 0 for x in c):
            cands.append((sum(c), tup))
    cands.sort()
    lr = [a + b for a, b in zip(lam2, rho2)]
    norm_lr = _inner2(lr, lr)
    mult: dict[tuple[int, ...], int] = {}
    for _, mu in cands:
        if mu == lam2:
            mult[mu] = 1
            continue
        acc = 0
        for a in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(dominant_rep(nu), 0)
                if m == 0:
                    break
                acc += m * _inner2(nu, a)
                k += 1
        mr = [a + b for a, b in zip(mu, rho2)]
        den = norm_lr - _inner2(mr, mr)
        # in doubled units: 2*sum(<nu,a>)/(|l+r|^2-|m+r|^2) with all pairings scaled by 4
        q, r = divmod(2 * acc, den)
        assert r == 0, (lam2, mu)
        if q:
            mult[mu] = q
    return tuple(sorted(mult.items()))


def _dominant_tuples(n: int, top: int, par: int):
    """Dominant doubled tuples with given parity and first entry <= top."""
    def rec(prefix, bound, left):
        if left == 1:
            for x in range(-bound, bound + 1):
                if (x - par) % 2 == 0:
                    yield prefix + (x,)
            return
        for x in range(par, bound + 1, 2):
            yield from rec(prefix + (x,), x, left - 1)
    if n == 0:
        yield ()
        return
    yield from rec((), top, n)


def dominant_multiplicities(lam: Weight) -> dict:
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return {Weight(k): v for k, v in _dominant_mults(lam.twice)}


def freudenthal(lam: Weight, n: int | None = None, max_dim: int = D_CHAR) -> CharacterTable:
    if n is not None and n != lam.n:
        raise ValueError("rank mismatch")
    d = weyl_dim(lam)
    if d > max_dim:
        raise CapacityError(f"dim V{lam} = {d} exceeds bound {max_dim}")
    entries = {}
    for mu, m in _dominant_mults(lam.twice):
        for w in weyl_orbit(mu):
            entries[Weight(w)] = m
    return CharacterTable(lam.n, entries)


def _extract(residual: dict, n: int, key) -> Counter:
    out: Counter = Counter()
    residual = {k: v for k, v in residual.items() if v}
    while residual:
        top = max(residual, key=key)
        c = residual[top]
        if c < 0:
            raise ArithmeticError(f"negative residual at {top}")
        out[Weight(top)] += c
        for mu, m in _dominant_mults(top):
            left = residual.get(mu, 0) - c * m
            if left:
                residual[mu] = left
            else:
                residual.pop(mu, None)
    return out


def lex_key(t):
    return t


def height_key(t):
    n = len(t)
    # pairing with a regular dominant vector, reverse-lex tie-break
    return (sum((n - i) * x for i, x in enumerate(t)), tuple(-x for x in reversed(t)))


def decompose_character(entries: dict, n: int, order: str = "lex") -> Counter:
    """Split a W-invariant character (dominant part suffices) into irreducibles."""
    key = lex_key if order == "lex" else height_key
    residual = {}
    for w, m in entries.items():
        t = w.twice if isinstance(w, Weight) else w
        if is_dominant(Weight(t)):
            residual[t] = residual.get(t, 0) + m
    return _extract(residual, n, key)


def tensor_decompose(lam: Weight, mu: Weight, n: int | None = None,
                     max_dim: int = D_CHAR, order: str = "lex") -> Counter:
    if lam.n != mu.n or (n is not None and n != lam.n):
        raise ValueError("rank mismatch")
    if weyl_dim(lam) * weyl_dim(mu) > max_dim:
        raise CapacityError("tensor product exceeds capacity bound")
    a = freudenthal(lam, max_dim=max_dim).entries
    b = freudenthal(mu, max_dim=max_dim).entries
    prod: dict[tuple[int, ...], int] = {}
    for x, mx in a.items():
        for y, my in b.items():
            s = tuple(p + q for p, q in zip(x.twice, y.twice))
            if is_dominant(Weight(s)):
                prod[s] = prod.get(s, 0) + mx * my
    key = lex_key if order == "lex" else height_key
    return _extract(prod, lam.n, key)


# ---------------------------------------------------------------------------
# Levi weights gl(1) x gl(m) x so(2) and the Pieri shape

@dataclass(frozen=True)
class LeviWeight:
    gl1: int
    gl: tuple[int, ...]
    so2: int

    def __str__(self):
        return f"({self.gl1}; {', '.join(map(str, self.gl))}; {self.so2})"


def pieri_tensor(mu: LeviWeight, k: int) -> list[LeviWeight]:
    """Summands of S^k(n_perp) (x) F_mu.

    mu.gl lists (-alpha_{n-1}, ..., -alpha_2).  The moving amounts k_i obey
    0 <= k_i <= alpha_{i-1} - alpha_i for i >= 3 while k_2 is only bounded
    below (dual Pieri: strip removed from the bottom row is unconstrained).
    """
    if k < 0:
        raise ValueError("negative degree")
    x = mu.gl
    m = len(x)
    if m == 0:
        return [LeviWeight(mu.gl1 + k, (), mu.so2)] if k == 0 else []
    bounds = [x[j] - x[j + 1] for j in range(m - 1)]
    out = []

    def rec(j, left, acc):
        if j == m - 1:
            out.append(LeviWeight(mu.gl1 + k, tuple(a - b for a, b in zip(x, acc + [left])), mu.so2))
            return
        for kj in range(0, min(bounds[j], left) + 1):
            rec(j + 1, left - kj, acc + [kj])

    rec(0, k, [])
    return out


def helgason_sp_fixed(nu: Sequence[int]) -> bool:
    if len(nu) % 2:
        raise ValueError("gl(2k) weight must have even length")
    return all(nu[2 * i] == nu[2 * i + 1] for i in range(len(nu) // 2))


def helgason_so_fixed(nu: Sequence, target: int | None = None) -> bool:
    """so(2m) weight has so(2m-1) fixed vectors iff it is (a, 0, ..., 0)."""
    vals = [Fraction(v) for v in nu]
    return all(v == 0 for v in vals[1:]) and (not vals or vals[0] >= 0)


def dominant_weights_in_box(n: int, max_abs_sum: Fraction, integrality: str | None = None) -> list[Weight]:
    """Dominant weights with sum |a_i| <= bound; both classes unless restricted."""
    out = []
    bound2 = int(2 * Fraction(max_abs_sum))
    pars = {"integral": (0,), "half-integral": (1,), None: (0, 1)}[integrality]
    for par in pars:
        for t in _dominant_tuples(n, bound2, par):
            if sum(abs(x) for x in t) <= bound2:
                out.append(Weight(t))
    return sorted(out)
