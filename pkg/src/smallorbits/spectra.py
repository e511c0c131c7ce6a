"""K-type spectra of the small orbits and of their unipotent representations.

Two independent tables live here: the regular-function families R(O, psi)
(computed from centralizer fixed vectors) and the K-structures of the
unipotent modules Xi.  verify_matchup compares them weight by weight.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import rootsys
from .orbits import OrbitError, OrbitLabel, case_of
from .rootsys import LeviWeight, Weight

INTEGRAL = "integral"
HALF = "half-integral"


class SelectorError(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumFamily:
    """Dominant weights V(a_1..a_n) cut out by simple linear conditions.

    integrality None means both classes.  parity is the required value of
    sum a_i mod 2.  The first 2*pairs coordinates come in equal pairs; with
    last_sign the final pair is (a, -a).  The last zero_tail coordinates vanish.
    """
    n: int
    integrality: Optional[str] = None
    parity: Optional[int] = None
    zero_tail: int = 0
    pairs: int = 0
    last_sign: bool = False
    name: str = ""

    def contains(self, w: Weight) -> bool:
        if w.n != self.n or not rootsys.is_dominant(w):
            return False
        if self.integrality is not None and w.parity != self.integrality:
            return False
        if self.parity is not None:
            s = w.coord_sum()
            if s.denominator != 1 or int(s) % 2 != self.parity:
                return False
        t = w.twice
        if self.zero_tail and any(t[self.n - self.zero_tail:]):
            return False
        for i in range(self.pairs):
            a, b = t[2 * i], t[2 * i + 1]
            if self.last_sign and i == self.pairs - 1:
                if b != -a:
                    return False
            elif a != b:
                return False
        return True

    __contains__ = contains

    def describe(self) -> str:
        bits = []
        if self.pairs:
            shape = "pairs (a,a,b,b,...)" if not self.last_sign else "pairs (a,a,...,b,-b)"
            bits.append(shape if self.pairs * 2 == self.n else f"{self.pairs} {shape}")
        if self.zero_tail:
            bits.append(f"last {self.zero_tail} coordinates zero")
        if self.integrality:
            bits.append(f"a_i {'in Z' if self.integrality == INTEGRAL else 'in Z+1/2'}")
        if self.parity is not None:
            bits.append(f"sum a_i = {self.parity} mod 2")
        return (self.name + ": " if self.name else "") + ("; ".join(bits) or "all dominant weights")

    def to_dict(self) -> dict:
        return {
            "n": self.n, "integrality": self.integrality, "parity": self.parity,
            "zero_tail": self.zero_tail, "pairs": self.pairs, "last_sign": self.last_sign,
            "description": self.describe(),
        }


@dataclass(frozen=True)
class CharacterLabel:
    orbit: OrbitLabel
    psi: str

    def __str__(self):
        return f"{self.orbit} psi={self.psi}"


def psi_ids(orbit: OrbitLabel) -> list[str]:
    case, _ = case_of(orbit)
    return {1: ["1", "2", "3", "4"], 2: ["1", "2"], 3: ["Triv", "Sgn"], 4: ["Triv"]}[case]


def xi_ids(orbit: OrbitLabel) -> list[str]:
    case, _ = case_of(orbit)
    if case == 3:
        t = orbit.very_even_tag
        return [t, t + "'"]
    return {1: ["1", "2", "3", "4"], 2: ["1", "2"], 4: ["1"]}[case]


def character_labels(orbit: OrbitLabel) -> list[CharacterLabel]:
    return [CharacterLabel(orbit, s) for s in psi_ids(orbit)]


def _norm_psi(orbit, psi) -> str:
    s = str(psi).strip()
    if s.lower().startswith("psi"):
        s = s[3:].lstrip("_")
    ids = psi_ids(orbit)
    for i in ids:
        if i.lower() == s.lower():
            return i
    raise SelectorError(f"unknown psi {psi!r} for {orbit}; choose from {', '.join(ids)}")


def _norm_xi(orbit, xi) -> str:
    s = str(xi).strip()
    if s.lower().startswith("xi"):
        s = s[2:].lstrip("_")
    ids = xi_ids(orbit)
    if s in ids:
        return s
    raise SelectorError(f"unknown xi {xi!r} for {orbit}; choose from {', '.join(ids)}")


def regular_section_family(orbit: OrbitLabel, psi) -> SpectrumFamily:
    psi = _norm_psi(orbit, psi)
    case, k = case_of(orbit)
    n = orbit.n
    name = f"R({orbit}, psi={psi})"
    if case == 1:
        p = n // 2
        table = {
            "1": (INTEGRAL, 0),
            "2": (INTEGRAL, 1),
            "3": (HALF, p % 2),
            "4": (HALF, (p + 1) % 2),
        }
        integ, par = table[psi]
        return SpectrumFamily(n, integ, par, name=name)
    if case == 2:
        return SpectrumFamily(n, INTEGRAL, 0 if psi == "1" else 1, zero_tail=n - 2 * k - 2, name=name)
    if case == 3:
        integ = INTEGRAL if psi == "Triv" else HALF
        return SpectrumFamily(n, integ, pairs=n // 2, last_sign=orbit.very_even_tag == "II", name=name)
    return SpectrumFamily(n, INTEGRAL, pairs=k, zero_tail=n - 2 * k, name=name)


def unipotent_family(orbit: OrbitLabel, xi) -> SpectrumFamily:
    """K-structure of the unipotent module Xi (kept apart from the R table)."""
    xi = _norm_xi(orbit, xi)
    case, k = case_of(orbit)
    n = orbit.n
    name = f"Xi_{xi}({orbit})"
    if case == 1:
        p = n // 2
        rows = {"1": (INTEGRAL, 0), "2": (INTEGRAL, 1), "3": (HALF, p), "4": (HALF, p + 1)}
        integ, par = rows[xi]
        return SpectrumFamily(n, integ, par % 2, name=name)
    if case == 2:
        tail = n - (2 * k + 2)
        return SpectrumFamily(n, INTEGRAL, {"1": 0, "2": 1}[xi], zero_tail=tail, name=name)
    if case == 3:
        primed = xi.endswith("'")
        return SpectrumFamily(n, HALF if primed else INTEGRAL, pairs=n // 2,
                              last_sign=xi.startswith("II"), name=name)
    return SpectrumFamily(n, INTEGRAL, pairs=k, zero_tail=n - 2 * k, name=name)


def connected_spectrum(orbit: OrbitLabel) -> SpectrumFamily:
    """Functions on the cover transforming trivially under C_K(O)^0."""
    case, k = case_of(orbit)
    n = orbit.n
    name = f"R(~{orbit})"
    if case == 1:
        return SpectrumFamily(n, name=name)
    if case == 2:
        return SpectrumFamily(n, INTEGRAL, zero_tail=n - 2 * k - 2, name=name)
    if case == 3:
        return SpectrumFamily(n, pairs=n // 2, last_sign=orbit.very_even_tag == "II", name=name)
    return SpectrumFamily(n, INTEGRAL, pairs=k, zero_tail=n - 2 * k, name=name)


def unipotent_parameters(orbit: OrbitLabel, xi) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Langlands parameters (lambda_L, lambda_R) of Xi, stored not interpreted."""
    xi = _norm_xi(orbit, xi)
    case, k = case_of(orbit)
    n = orbit.n
    h = Fraction(1, 2)
    if case == 1:
        p = n // 2
        half = [Fraction(j) + h for j in range(p - 1, -1, -1)]
        whole = [Fraction(j) for j in range(p - 1, -1, -1)]
        lam = tuple(half + whole)
        flip = half[:-1] + [-half[-1]]
        w = {"1": lam, "2": tuple(flip + whole), "3": tuple(whole + half), "4": tuple(whole + flip)}[xi]
        return lam, tuple(-c for c in w)
    if case == 2:
        half = [Fraction(j) + h for j in range(k, -1, -1)]
        whole = [Fraction(j) for j in range(n - k - 2, -1, -1)]
        lam = tuple(half + whole)
        # the second parameter flips the last half-integral entry
        w = lam if xi == "1" else tuple(half[:-1] + [-half[-1]] + whole)
        return lam, tuple(-c for c in w)
    if case == 3:
        base = [Fraction(2 * n - 1, 4) - j for j in range(n)]
        shifted = [c - h for c in base]
        if xi.startswith("II"):
            base = base[:-1] + [-base[-1]]
            shifted = shifted[:-1] + [-shifted[-1]]
        lam = tuple(base)
        w = lam if not xi.endswith("'") else tuple(shifted)
        return lam, tuple(-c for c in w)
    lam = tuple([Fraction(j) for j in range(k, 0, -1)] + [Fraction(j) for j in range(n - k - 1, -1, -1)])
    return lam, tuple(-c for c in lam)


# ---------------------------------------------------------------------------
# enumeration

def enumerate_family(f: SpectrumFamily, cutoff, kind: str = "sum") -> list[Weight]:
    """Members of f with sum |a_i| <= cutoff (kind "sum") or a_1 <= cutoff (kind "a1")."""
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if kind == "sum":
        box = cutoff
    elif kind == "a1":
        box = cutoff * f.n
    else:
        raise ValueError(f"unknown cutoff kind {kind!r}")
    out = []
    for w in rootsys.dominant_weights_in_box(f.n, box, f.integrality):
        if kind == "a1" and (w.coords[0] if w.n else 0) > cutoff:
            continue
        if f.contains(w):
            out.append(w)
    return sorted(set(out), key=lambda w: w.coords)


# ---------------------------------------------------------------------------
# matchup

EXPECTED_PARTNER = {
    1: {"1": "1", "2": "2", "3": "3", "4": "4"},
    2: {"1": "1", "2": "2"},
    4: {"Triv": "1"},
}


def expected_partner(orbit: OrbitLabel, psi: str) -> str:
    case, _ = case_of(orbit)
    if case == 3:
        t = orbit.very_even_tag
        return t if psi == "Triv" else t + "'"
    return EXPECTED_PARTNER[case][psi]


@dataclass
class MatchupEntry:
    psi: str
    xi: Optional[str]
    expected_xi: str
    count: int
    matched: bool
    missing: list = field(default_factory=list)  # in R but not in the expected Xi
    extra: list = field(default_factory=list)  # in the expected Xi but not in R


@dataclass
class MatchupReport:
    orbit: OrbitLabel
    cutoff: Fraction
    entries: list
    disjoint: bool
    union_ok: bool
    union_count: int

    @property
    def ok(self) -> bool:
        return self.disjoint and self.union_ok and all(e.matched for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "orbit": str(self.orbit),
            "cutoff": str(self.cutoff),
            "ok": self.ok,
            "disjoint": self.disjoint,
            "union_equals_connected_spectrum": self.union_ok,
            "union_count": self.union_count,
            "pairs": [
                {"psi": e.psi, "xi": e.xi, "expected_xi": e.expected_xi, "count": e.count,
                 "matched": e.matched, "missing": [str(w) for w in e.missing],
                 "extra": [str(w) for w in e.extra]}
                for e in self.entries
            ],
        }


def verify_matchup(orbit: OrbitLabel, cutoff=8) -> MatchupReport:
    cutoff = Fraction(cutoff)
    n = orbit.n
    box = rootsys.dominant_weights_in_box(n, cutoff)
    r_sets = {psi: {w for w in box if regular_section_family(orbit, psi).contains(w)} for psi in psi_ids(orbit)}
    xi_sets = {xi: {w for w in box if unipotent_family(orbit, xi).contains(w)} for xi in xi_ids(orbit)}
    entries = []
    for psi, rs in r_sets.items():
        exp = expected_partner(orbit, psi)
        found = [xi for xi, xs in xi_sets.items() if xs == rs]
        xi = exp if exp in found else (found[0] if found else None)
        xs = xi_sets[exp]
        entries.append(MatchupEntry(
            psi, xi, exp, len(rs), xi == exp,
            sorted(rs - xs, key=lambda w: w.coords), sorted(xs - rs, key=lambda w: w.coords),
        ))
    seen: Counter = Counter()
    for rs in r_sets.values():
        seen.update(rs)
    disjoint = all(c == 1 for c in seen.values())
    conn = connected_spectrum(orbit)
    union = set(seen)
    union_ok = union == {w for w in box if conn.contains(w)}
    return MatchupReport(orbit, cutoff, entries, disjoint, union_ok, len(union))


# ---------------------------------------------------------------------------
# BGG bookkeeping for Case 1

@dataclass(frozen=True)
class BGGTerm:
    name: str
    levi_weight: LeviWeight  # w . lambda
    fixed_weight: LeviWeight  # the sp-fixed summand of S(n_perp) (x) F(w . lambda)
    degree: int  # k with the summand in S^k
    value: int  # -(h eigenvalue) on the fixed summand
    printed_value: int  # the closed form displayed for this term


@dataclass(frozen=True)
class BGGAnalysis:
    weight: Weight
    k: int
    fixed_weight: LeviWeight
    h_eigenvalue: int
    terms: tuple  # BGGTerm for w0, w1, w2, w3

    @property
    def separated(self) -> bool:
        v0 = self.terms[0].value
        return all(t.value != v0 for t in self.terms[1:])

    @property
    def printed_separated(self) -> bool:
        v0 = self.terms[0].printed_value
        return all(t.printed_value != v0 for t in self.terms[1:])

    @property
    def printed_agrees(self) -> dict:
        return {t.name: t.value == t.printed_value for t in self.terms}


def _levi_h(w: LeviWeight) -> int:
    # h = H(2, 1, ..., 1, 0) in the Levi coordinates
    return 2 * w.gl1 + sum(w.gl)


def _sp_fixed_summands(mu: LeviWeight) -> list[tuple[int, LeviWeight]]:
    x = mu.gl
    bound = sum(x[j] - x[j + 1] for j in range(len(x) - 1)) + 2
    out = []
    for k in range(0, bound + 1):
        for s in rootsys.pieri_tensor(mu, k):
            if rootsys.helgason_sp_fixed(s.gl):
                out.append((k, s))
    return out


def _dot_action(lam: list[int], rho: list[int], w: str) -> LeviWeight:
    n = len(lam)
    x = [a + r for a, r in zip(lam, rho)]
    if w == "w1":
        x[0], x[n - 2] = x[n - 2], x[0]
    elif w == "w2":
        x[1], x[n - 1] = x[n - 1], x[1]
    elif w == "w3":
        x[1], x[n - 1] = -x[n - 1], -x[1]
    y = [a - r for a, r in zip(x, rho)]
    return LeviWeight(y[0], tuple(y[1:n - 1]), y[n - 1])


def bgg_case1_analysis(lam: Weight, n: Optional[int] = None) -> BGGAnalysis:
    n = lam.n if n is None else n
    if n != lam.n or n % 2 or n < 4:
        raise ValueError("Case 1 needs even n >= 4")
    if not lam.is_integral or not rootsys.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant integral")
    a = [int(c) for c in lam.coords]
    A = lambda i: a[i - 1]  # 1-based
    levi = [-A(1)] + [-A(i) for i in range(n - 1, 1, -1)] + [-A(n)]
    rho = [-(n - 1)] + [-j for j in range(1, n - 1)] + [0]
    k = sum(A(i) - A(i + 1) for i in range(2, n - 1, 2))
    odd = sum(A(i) for i in range(1, n, 2))
    printed = {
        "w0": 2 * odd,
        "w1": 2 * (A(2) + sum(A(i) for i in range(3, n, 2)) + 1),
        "w2": 2 * (sum(A(i) for i in range(1, n - 2, 2)) + A(n) - 1),
        "w3": 2 * (sum(A(i) for i in range(1, n - 2, 2)) - A(n) - 1),
    }
    terms = []
    fixed0 = None
    for w in ("w0", "w1", "w2", "w3"):
        mu = LeviWeight(levi[0], tuple(levi[1:n - 1]), levi[n - 1]) if w == "w0" else _dot_action(levi, rho, w)
        summands = _sp_fixed_summands(mu)
        if len(summands) != 1:
            raise ArithmeticError(f"{w}: expected one sp-fixed summand, got {len(summands)}")
        deg, fw = summands[0]
        if w == "w0":
            fixed0 = (deg, fw)
        terms.append(BGGTerm(w, mu, fw, deg, -_levi_h(fw), printed[w]))
    return BGGAnalysis(lam, k, fixed0[1], _levi_h(fixed0[1]), tuple(terms))


# ---------------------------------------------------------------------------
# SPIN (x) SPIN

def _ones(p: int, j: int) -> Weight:
    return Weight.of(*([1] * j + [0] * (p - j)))


def pinrep_formula(p: int) -> tuple[Counter, Counter]:
    """The closed form for SPIN+ (x) SPIN+ and SPIN+ (x) SPIN- as printed."""
    same = Counter(_ones(p, 2 * k) for k in range(p // 2 + 1))
    mixed = Counter(_ones(p, 2 * k + 1) for k in range((p - 1) // 2 + 1))
    return same, mixed


@dataclass(frozen=True)
class PinrepResult:
    p: int
    formula_same: Counter
    formula_mixed: Counter
    oracle_same: Counter
    oracle_mixed: Counter

    @property
    def agrees(self) -> bool:
        return self.formula_same == self.oracle_same and self.formula_mixed == self.oracle_mixed

    @property
    def swapped(self) -> bool:
        return self.formula_same == self.oracle_mixed and self.formula_mixed == self.oracle_same

    def multiplicity_free(self) -> bool:
        return all(v == 1 for v in self.oracle_same.values()) and all(v == 1 for v in self.oracle_mixed.values())

    def total_dims(self) -> tuple[int, int]:
        d = lambda c: sum(rootsys.weyl_dim(w) * m for w, m in c.items())
        return d(self.oracle_same), d(self.oracle_mixed)


def pinrep_decomposition(p: int, max_dim: int = rootsys.D_CHAR) -> PinrepResult:
    if not 2 <= p <= 4:
        raise rootsys.CapacityError("pinrep oracle supports 2 <= p <= 4")
    sp = Weight.of(*([Fraction(1, 2)] * p))
    sm = Weight.of(*([Fraction(1, 2)] * (p - 1) + [Fraction(-1, 2)]))
    same = rootsys.tensor_decompose(sp, sp, max_dim=max_dim)
    mixed = rootsys.tensor_decompose(sp, sm, max_dim=max_dim)
    fs, fm = pinrep_formula(p)
    return PinrepResult(p, fs, fm, Counter(same), Counter(mixed))


def pinrep_ground_truth(p: int) -> tuple[Counter, Counter]:
    """The rule the oracle reproduces: forms of degree j = p mod 2 (same) and j = p-1 mod 2 (mixed)."""
    same = Counter(_ones(p, j) for j in range(p + 1) if j % 2 == p % 2)
    mixed = Counter(_ones(p, j) for j in range(p + 1) if j % 2 != p % 2)
    return same, mixed
