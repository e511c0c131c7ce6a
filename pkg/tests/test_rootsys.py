import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from smallorbits import rootsys
from smallorbits.rootsys import Weight


def brute_weyl_dim(coords):
    # product over positive roots e_i -+ e_j of <lam+rho, a>/<rho, a>, written out directly
    n = len(coords)
    rho = [Fraction(n - 1 - i) for i in range(n)]
    lr = [Fraction(c) + r for c, r in zip(coords, rho)]
    num = den = Fraction(1)
    for i, j in itertools.combinations(range(n), 2):
        num *= (lr[i] - lr[j]) * (lr[i] + lr[j])
        den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    return num / den


dominant = st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 4), min_size=n, max_size=n), st.booleans(), st.booleans()))


def _mk(data):
    a, half, neg = data
    a = sorted(a, reverse=True)
    coords = [Fraction(x) + (Fraction(1, 2) if half else 0) for x in a]
    if neg:
        coords[-1] = -coords[-1]
    return Weight.of(*coords)


def test_known_dims():
    assert rootsys.weyl_dim(Weight.of(1, 0, 0, 0)) == 8
    assert rootsys.weyl_dim(Weight.of(1, 1, 0, 0)) == 28
    assert rootsys.weyl_dim(Weight.of("1/2", "1/2", "1/2", "1/2")) == 8
    assert rootsys.weyl_dim(Weight.of(2, 0, 0, 0)) == 35
    assert rootsys.weyl_dim(Weight.of(1, 0, 0)) == 6


def test_weight_parse_roundtrip():
    w = Weight.parse("(3/2, 1/2, 1/2, -1/2)")
    assert str(w) == "(3/2, 1/2, 1/2, -1/2)"
    with pytest.raises(ValueError):
        Weight.of(1, "1/2")


@given(dominant)
def test_weyl_dim_matches_product_formula(data):
    w = _mk(data)
    assert rootsys.weyl_dim(w) == brute_weyl_dim(w.coords)


@given(dominant)
def test_freudenthal_total_is_weyl_dim(data):
    w = _mk(data)
    if rootsys.weyl_dim(w) > 3000:
        return
    table = rootsys.freudenthal(w)
    assert sum(table.entries.values()) == rootsys.weyl_dim(w)
    # characters are Weyl invariant: the multiplicity of mu and of its sign-flip pair agree
    for mu, m in table.entries.items():
        t = list(mu.twice)
        if len(t) >= 2:
            t[0], t[1] = -t[0], -t[1]
            assert table.entries.get(Weight(tuple(t)), 0) == m


def test_adjoint_character():
    table = rootsys.freudenthal(Weight.of(1, 1, 0, 0))
    assert table.entries[rootsys.zero(4)] == 4
    assert sum(1 for m in table.entries.values() if m == 1) == 24


@given(dominant, dominant)
def test_tensor_dims_multiply(d1, d2):
    a, b = _mk(d1), _mk(d2)
    if a.n != b.n or rootsys.weyl_dim(a) * rootsys.weyl_dim(b) > 4000:
        return
    dec = rootsys.tensor_decompose(a, b)
    assert sum(m * rootsys.weyl_dim(w) for w, m in dec.items()) == rootsys.weyl_dim(a) * rootsys.weyl_dim(b)
    assert all(m > 0 for m in dec.values())
    assert dec == rootsys.tensor_decompose(b, a)


def test_tensor_lex_and_height_orders_agree():
    a, b = Weight.of(1, 1, 0, 0), Weight.of(1, 0, 0, 0)
    assert rootsys.tensor_decompose(a, b, order="lex") == rootsys.tensor_decompose(a, b, order="height")


def test_capacity_error():
    with pytest.raises(rootsys.CapacityError):
        rootsys.freudenthal(Weight.of(9, 9, 9, 0), max_dim=100)


def test_dominance_and_box():
    ws = rootsys.dominant_weights_in_box(4, Fraction(2), "integral")
    assert all(rootsys.is_dominant(w) and w.abs_sum() <= 2 for w in ws)
    assert Weight.of(1, 1, 0, 0) in ws and Weight.of(1, 0, 0, 0) in ws
    assert rootsys.dominates(Weight.of(1, 1, 0, 0), rootsys.zero(4))


def _signed_perms(n):
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                yield perm, signs


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weyl_dim_freudenthal_exhaustive(n):
    for w in rootsys.dominant_weights_in_box(n, Fraction(2 * n)):
        if max(abs(c) for c in w.coords) <= 2:
            assert sum(rootsys.freudenthal(w).entries.values()) == rootsys.weyl_dim(w)


@given(dominant, st.randoms(use_true_random=False))
def test_freudenthal_weyl_group_invariance(data, rnd):
    w = _mk(data)
    if rootsys.weyl_dim(w) > 3000:
        return
    entries = rootsys.freudenthal(w).entries
    perm, signs = rnd.choice(list(_signed_perms(w.n)))
    for mu, m in list(entries.items())[:20]:
        t = tuple(signs[i] * mu.twice[perm[i]] for i in range(w.n))
        assert entries.get(Weight(t), 0) == m


@given(st.integers(1, 4).flatmap(lambda h: st.lists(st.integers(0, 4), min_size=2 * h, max_size=2 * h)),
       st.integers(-3, 3), st.integers(-3, 3))
def test_pieri_unit_coefficients_and_unique_sp_fixed(alphas, a1, an):
    # gl part is (-a_{n-1}, ..., -a_2) for a_2 >= ... >= a_{n-1}
    a = sorted(alphas, reverse=True)
    mu = rootsys.LeviWeight(-a1, tuple(-x for x in reversed(a)), -an)
    assert rootsys.pieri_tensor(mu, 0) == [mu]
    seen = Counter()
    fixed = []
    x = mu.gl
    top = sum(x[j] - x[j + 1] for j in range(len(x) - 1)) + 3
    for k in range(top):
        for s in rootsys.pieri_tensor(mu, k):
            seen[s] += 1
            if rootsys.helgason_sp_fixed(s.gl):
                fixed.append((k, s))
    assert all(v == 1 for v in seen.values())
    # the constraint system leaves exactly one paired weight: k_i = alpha_{i-1} - alpha_i on alternate rows
    k_want = sum(a[i] - a[i + 1] for i in range(0, len(a) - 1, 2))
    paired = []
    for i in range(0, len(a), 2):
        paired += [-a[i], -a[i]]
    assert fixed == [(k_want, rootsys.LeviWeight(-a1 + k_want, tuple(reversed(paired)), -an))]


def test_helgason_examples():
    assert rootsys.helgason_sp_fixed((3, 3, 1, 1))
    assert not rootsys.helgason_sp_fixed((2, 1, 1, 1))
    with pytest.raises(ValueError):
        rootsys.helgason_sp_fixed((1, 1, 1))
    assert rootsys.helgason_so_fixed((2, 0, 0))
    assert not rootsys.helgason_so_fixed((2, 1, 0))
