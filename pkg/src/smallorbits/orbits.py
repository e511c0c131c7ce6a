"""Nilpotent orbits of so(2n) labelled by partitions of 2n.

Covers the small orbits (dim O <= n^2): their list, dimensions, sl(2)
representatives, graded centralizers, component groups and the
infinitesimal characters attached to them.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import lie
from . import linalg

CASES = (1, 2, 3, 4)


class OrbitError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class OrbitLabel:
    partition: tuple[int, ...]
    very_even_tag: Optional[str] = None

    @property
    def n(self) -> int:
        return sum(self.partition) // 2

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.partition))

    @property
    def is_very_even(self) -> bool:
        return all(p % 2 == 0 for p in self.partition)

    def __str__(self) -> str:
        s = "[" + ",".join(map(str, self.partition)) + "]"
        return s + (f"_{self.very_even_tag}" if self.very_even_tag else "")

    def spec(self) -> str:
        """Round-trippable text form, e.g. 2,2,2,2:I."""
        s = ",".join(map(str, self.partition))
        return s + (f":{self.very_even_tag}" if self.very_even_tag else "")


def is_valid_partition(parts) -> bool:
    parts = list(parts)
    if not parts or any(p <= 0 for p in parts):
        return False
    c = Counter(parts)
    return all(m % 2 == 0 for p, m in c.items() if p % 2 == 0)


def validate_partition(parts, n: int, tag: Optional[str] = None) -> OrbitLabel:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise OrbitError("parts must be positive")
    if sum(parts) != 2 * n:
        raise OrbitError(f"parts sum to {sum(parts)}, expected {2 * n}")
    for p, m in Counter(parts).items():
        if p % 2 == 0 and m % 2:
            raise OrbitError(f"even part {p} has odd multiplicity {m}")
    very_even = all(p % 2 == 0 for p in parts)
    if very_even:
        if tag not in ("I", "II"):
            raise OrbitError("very even partition is valid but needs tag I or II")
    elif tag is not None:
        raise OrbitError("I/II tag only applies to very even partitions")
    return OrbitLabel(parts, tag)


def parse_orbit(text: str, n: Optional[int] = None) -> OrbitLabel:
    text = text.strip()
    tag = None
    if ":" in text:
        text, tag = text.split(":", 1)
        tag = tag.strip().upper()
    parts = []
    for tok in text.replace("[", "").replace("]", "").split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "^" in tok:
            b, e = tok.split("^")
            parts += [int(b)] * int(e)
        else:
            parts.append(int(tok))
    if n is None:
        n = sum(parts) // 2
    return validate_partition(parts, n, tag)


def dual_partition(parts) -> list[int]:
    parts = list(parts)
    if not parts:
        return []
    return [sum(1 for p in parts if p > i) for i in range(max(parts))]


def orbit_dimension(label: OrbitLabel) -> int:
    n = label.n
    dual = dual_partition(label.partition)
    odd = sum(1 for p in label.partition if p % 2)
    cdim2 = sum(d * d for d in dual) - odd
    return n * (2 * n - 1) - cdim2 // 2


def is_small(label: OrbitLabel, n: Optional[int] = None) -> bool:
    n = label.n if n is None else n
    return orbit_dimension(label) <= n * n


def all_labels(n: int):
    """Every valid label for so(2n), with both tags on very even partitions."""
    for parts in _partitions(2 * n, 2 * n):
        if not is_valid_partition(parts):
            continue
        parts = tuple(parts)
        if all(p % 2 == 0 for p in parts):
            yield OrbitLabel(parts, "I")
            yield OrbitLabel(parts, "II")
        else:
            yield OrbitLabel(parts)


def _partitions(total, largest):
    if total == 0:
        yield []
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield [first] + rest


def classify(label: OrbitLabel) -> Optional[tuple[int, int]]:
    """(case id, k) for the small orbits, None otherwise.

    Case 2 with a single 1-block coincides with Case 1 and is reported as Case 1.
    """
    n = label.n
    c = Counter(label.partition)
    if set(c) <= {1, 2}:
        if c.get(1, 0) == 0:
            return (3, n // 2)
        return (4, c.get(2, 0) // 2)
    if c.get(3, 0) == 1 and set(c) <= {1, 2, 3}:
        k = c.get(2, 0) // 2
        return (1, k) if c.get(1, 0) == 1 else (2, k)
    return None


def case_dimension(case: int, n: int, k: int) -> int:
    if case == 1:
        return n * n
    if case == 2:
        return 4 * n * k - 4 * k * k + 4 * n - 8 * k - 4
    if case == 3:
        return n * n - n
    if case == 4:
        return 4 * n * k - 4 * k * k - 2 * k
    raise OrbitError(f"unknown case {case}")


def case_labels(n: int) -> list[tuple[OrbitLabel, int, int]]:
    """Labels generated from the case ranges directly, as (label, case, k)."""
    out = []
    p = n // 2
    if n % 2 == 0:
        out.append((OrbitLabel(tuple([3] + [2] * (n - 2) + [1])), 1, p - 1))
    for k in range(0, p):
        r1 = 2 * n - 4 * k - 3
        if r1 > 1:
            out.append((OrbitLabel(tuple([3] + [2] * (2 * k) + [1] * r1)), 2, k))
    if n % 2 == 0:
        for tag in ("I", "II"):
            out.append((OrbitLabel((2,) * n, tag), 3, p))
    for k in range(0, (n + 1) // 2):
        if 2 * k < n:
            out.append((OrbitLabel(tuple([2] * (2 * k) + [1] * (2 * n - 4 * k))), 4, k))
    return out


def enumerate_small_orbits(n: int) -> list[tuple[OrbitLabel, int, int]]:
    if n < 2:
        raise OrbitError("n must be at least 2")
    rows = []
    for label, case, k in case_labels(n):
        rows.append((label, case, orbit_dimension(label)))
    rows.sort(key=lambda r: (-r[2], r[0].partition, r[0].very_even_tag or ""))
    return rows


def case_of(label: OrbitLabel) -> tuple[int, int]:
    cls = classify(label)
    if cls is None:
        raise OrbitError(f"{label} is not one of the small orbits handled here")
    return cls


# ---------------------------------------------------------------------------
# sl(2) representatives

@dataclass(frozen=True)
class Sl2Triple:
    n: int
    e: tuple  # ((root, coeff), ...)
    h: tuple[int, ...]

    def e_element(self) -> dict:
        return {("X", r): Fraction(c) for r, c in self.e}

    def h_element(self) -> dict:
        return {("H", i): Fraction(c) for i, c in enumerate(self.h) if c}

    def e_matrix(self) -> dict:
        return lie.element_matrix(self.e_element(), self.n)

    def describe(self) -> str:
        terms = " + ".join(lie.label_str(("X", r)) for r, _ in self.e) or "0"
        return f"e = {terms}; h = H({', '.join(map(str, self.h))})"


def _root(n, *pairs):
    r = [0] * n
    for i, s in pairs:
        r[i - 1] = s
    return tuple(r)


def sl2_triple(label: OrbitLabel, n: Optional[int] = None) -> Sl2Triple:
    n = label.n if n is None else n
    case, k = case_of(label)
    terms = []
    if case in (1, 2):
        j = 2 * k + 2
        terms.append(_root(n, (1, 1), (j, -1)))
        terms.append(_root(n, (1, 1), (j, 1)))
        for i in range(2, k + 2):
            terms.append(_root(n, (i, 1), (k + i, 1)))
        h = (2,) + (1,) * (2 * k) + (0,) * (n - 1 - 2 * k)
    elif case == 3:
        p = n // 2
        for j in range(1, p + 1):
            s = -1 if (label.very_even_tag == "II" and j == p) else 1
            terms.append(_root(n, (2 * j - 1, 1), (2 * j, s)))
        h = (1,) * (n - 1) + ((-1,) if label.very_even_tag == "II" else (1,))
    else:
        for j in range(1, k + 1):
            terms.append(_root(n, (2 * j - 1, 1), (2 * j, 1)))
        h = (1,) * (2 * k) + (0,) * (n - 2 * k)
    return Sl2Triple(n, tuple((r, 1) for r in terms), h)


def h_degree(label_: tuple, h: tuple) -> int:
    kind, data = label_
    if kind == "H":
        return 0
    return sum(a * b for a, b in zip(data, h))


# ---------------------------------------------------------------------------
# graded centralizer

@dataclass(frozen=True)
class GradedCentralizer:
    n: int
    levi: tuple  # ((kind, size), ...), e.g. (("sp", 2), ("so", 1))
    graded_pieces: dict  # degree -> list of {basis label: coeff}
    n_perp: tuple = ()

    def levi_str(self) -> str:
        return levi_string(self.levi)

    def dim(self) -> int:
        return sum(len(v) for v in self.graded_pieces.values())

    def basis(self) -> list[dict]:
        return [x for d in sorted(self.graded_pieces) for x in self.graded_pieces[d]]


def levi_string(levi) -> str:
    parts = [f"{kind}({m})" for kind, m in levi if m > 0]
    return " x ".join(parts) if parts else "0"


def levi_dimension(levi) -> int:
    d = 0
    for kind, m in levi:
        d += m * (m - 1) // 2 if kind == "so" else m * (m + 1) // 2
    return d


def levi_factors(label: OrbitLabel) -> tuple:
    n = label.n
    case, k = case_of(label)
    if case in (1, 2):
        return (("sp", 2 * k), ("so", 2 * n - 3 - 4 * k))
    if case == 3:
        return (("sp", n),)
    if k == 0:
        return (("so", 2 * n),)
    return (("sp", 2 * k), ("so", 2 * n - 4 * k))


def levi_factors_general(label: OrbitLabel) -> tuple:
    """so(r_j) for odd sizes j, sp(r_j) for even sizes."""
    out = []
    for size, r in sorted(label.multiplicities.items(), reverse=True):
        out.append(("so" if size % 2 else "sp", r))
    return tuple(out)


def graded_centralizer(label: OrbitLabel, n: Optional[int] = None) -> GradedCentralizer:
    n = label.n if n is None else n
    tri = sl2_triple(label, n)
    e = tri.e_element()
    by_deg: dict[int, list] = {}
    for lab in lie.basis_labels(n):
        by_deg.setdefault(h_degree(lab, tri.h), []).append(lab)
    pieces = {}
    for d in sorted(by_deg):
        if d < 0:
            continue
        src = by_deg[d]
        tgt = by_deg.get(d + 2, [])
        tindex = {lab: i for i, lab in enumerate(tgt)}
        # columns: source basis; rows: target coordinates of [x, e]
        cols = []
        for lab in src:
            br = lie.bracket({lab: Fraction(1)}, e, n)
            col = [Fraction(0)] * len(tgt)
            for t, c in br.items():
                col[tindex[t]] += c
            cols.append(col)
        if tgt:
            m = linalg.mat([[cols[j][i] for j in range(len(src))] for i in range(len(tgt))], len(src))
            ker = linalg.rows_as_fractions(linalg.nullspace(m))
        else:
            ker = [[Fraction(int(i == j)) for j in range(len(src))] for i in range(len(src))]
        elems = []
        for vec in ker:
            elems.append({src[j]: c for j, c in enumerate(vec) if c})
        if elems:
            pieces[d] = elems
    case, k = case_of(label)
    nperp = ()
    if case in (1, 2):
        nperp = tuple(("X", _root(n, (1, 1), (j, -1))) for j in range(2, 2 * k + 2))
    return GradedCentralizer(n, levi_factors(label), pieces, nperp)


def element_str(elem: dict) -> str:
    out = []
    for lab, c in sorted(elem.items(), key=lambda kv: lie.label_str(kv[0])):
        c = Fraction(c)
        coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
        out.append(f"{coeff}{lie.label_str(lab)}")
    return " + ".join(out).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# component groups

@dataclass(frozen=True)
class ComponentGroupDescriptor:
    group_type: str
    ambient: str
    order: int
    generators: tuple = ()


def odd_block_data(label: OrbitLabel) -> dict[int, int]:
    return {s: r for s, r in label.multiplicities.items() if s % 2}


def _abelian_type(elements, mul, identity) -> str:
    """Isomorphism type of a finite abelian 2-group from its power counts."""
    elements = list(elements)
    order = len(elements)
    if order == 1:
        return "1"

    def power(x, e):
        y = identity
        for _ in range(e):
            y = mul(y, x)
        return y

    counts = []
    j = 0
    while True:
        c = sum(1 for x in elements if power(x, 2 ** j) == identity)
        counts.append(c)
        if c == order:
            break
        j += 1
    # counts[j] = |{x : x^(2^j) = 1}|; number of cyclic factors of order >= 2^j
    factors = []
    for j in range(1, len(counts)):
        ratio = counts[j] // counts[j - 1]
        factors.append(ratio.bit_length() - 1)
    # factors[j-1] = number of cyclic factors with order >= 2^j
    cyc = []
    for j in range(len(factors)):
        nxt = factors[j + 1] if j + 1 < len(factors) else 0
        cyc += [2 ** (j + 1)] * (factors[j] - nxt)
    cyc.sort(reverse=True)
    return group_name(cyc)


def group_name(cyclic_orders) -> str:
    if not cyclic_orders:
        return "1"
    if all(c == 2 for c in cyclic_orders):
        m = len(cyclic_orders)
        return {1: "Z2", 2: "Z2xZ2"}.get(m, f"Z2^{m}")
    return "x".join(f"Z{c}" for c in cyclic_orders)


def _signed_subset_group(odd_sizes):
    """Elements (sign, subset) of even products of Ep's, one block per odd size.

    Ep_a Ep_b = -Ep_b Ep_a for distinct blocks and Ep_a^2 = (-1)^k for a block
    of size 2k+1.
    """
    m = len(odd_sizes)
    sq = [(-1) ** ((s - 1) // 2) for s in odd_sizes]

    def mul(x, y):
        sx, a = x
        sy, b = y
        sign = sx * sy
        # move each generator of b leftward past the later generators of a
        alist = sorted(a)
        for g in sorted(b):
            later = sum(1 for t in alist if t > g)
            sign *= (-1) ** later
            if g in alist:
                sign *= sq[g]
                alist.remove(g)
            else:
                alist.append(g)
                alist.sort()
        return (sign, frozenset(alist))

    elems = []
    for r in range(0, m + 1, 2):
        for sub in itertools.combinations(range(m), r):
            for s in (1, -1):
                elems.append((s, frozenset(sub)))
    return elems, mul, (1, frozenset())


def component_group(label: OrbitLabel, ambient: str = "Spin") -> ComponentGroupDescriptor:
    ambient = {"so": "SO", "spin": "Spin"}.get(ambient.lower(), ambient)
    odd = odd_block_data(label)
    m = len(odd)
    so_rank = max(m - 1, 0)
    if ambient == "SO":
        gens = tuple(f"rho(Ep{a}*Ep{b})" for a, b in zip(sorted(odd)[:-1], sorted(odd)[1:]))
        return ComponentGroupDescriptor(group_name([2] * so_rank), "SO", 2 ** so_rank, gens)
    if ambient != "Spin":
        raise OrbitError(f"unknown ambient {ambient}")
    if any(r > 1 for r in odd.values()):
        gens = tuple(f"Ep{a}*Ep{b}" for a, b in zip(sorted(odd)[:-1], sorted(odd)[1:]))
        return ComponentGroupDescriptor(group_name([2] * so_rank), "Spin", 2 ** so_rank, gens)
    sizes = sorted(odd, reverse=True)
    elems, mul, one = _signed_subset_group(sizes)
    abelian = all(mul(x, y) == mul(y, x) for x in elems for y in elems)
    gens = ("-1",) + tuple(f"Ep{sizes[0]}*Ep{b}" for b in sizes[1:])
    if not abelian:
        return ComponentGroupDescriptor(f"nonabelian({len(elems)})", "Spin", len(elems), gens)
    return ComponentGroupDescriptor(_abelian_type(elems, mul, one), "Spin", len(elems), gens)


# ---------------------------------------------------------------------------
# infinitesimal characters

@dataclass(frozen=True)
class InfinitesimalCharacter:
    blocks: tuple  # tuple of tuples of Fractions
    sep: str = "|"

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(c for b in self.blocks for c in b)

    def __str__(self) -> str:
        def f(c):
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        blocks = [b for b in self.blocks if b]
        return "(" + f" {self.sep} ".join(", ".join(f(c) for c in b) for b in blocks) + ")"


def infinitesimal_character(label: OrbitLabel, n: Optional[int] = None) -> tuple[InfinitesimalCharacter, ...]:
    n = label.n if n is None else n
    case, k = case_of(label)
    half = Fraction(1, 2)
    if case == 1:
        p = n // 2
        a = tuple(Fraction(j) + half for j in range(p - 1, -1, -1))
        b = tuple(Fraction(j) for j in range(p - 1, -1, -1))
        return (InfinitesimalCharacter((a, b), "|"),)
    if case == 2:
        a = tuple(Fraction(j) + half for j in range(k, -1, -1))
        b = tuple(Fraction(j) for j in range(n - k - 2, -1, -1))
        return (InfinitesimalCharacter((a, b), "|"),)
    if case == 3:
        base = [Fraction(2 * n - 1, 4) - j for j in range(n)]
        one = InfinitesimalCharacter((tuple(base),), "|")
        flipped = base[:-1] + [-base[-1]]
        two = InfinitesimalCharacter((tuple(flipped),), "|")
        return (one, two)
    a = tuple(Fraction(j) for j in range(k, 0, -1))
    b = tuple(Fraction(j) for j in range(n - k - 1, -1, -1))
    return (InfinitesimalCharacter((a, b), ";"),)


def infinitesimal_character_for(label: OrbitLabel) -> InfinitesimalCharacter:
    chars = infinitesimal_character(label)
    if len(chars) == 2:
        return chars[0] if label.very_even_tag == "I" else chars[1]
    return chars[0]
