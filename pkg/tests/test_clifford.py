from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from smallorbits import clifford, lie
from smallorbits.clifford import CliffordElement, Space, cl_mul, gq
from smallorbits.orbits import component_group, enumerate_small_orbits, parse_orbit

# --- independent oracle: Jordan-Wigner spinor matrices --------------------

SX = sympy.Matrix([[0, 1], [1, 0]])
SY = sympy.Matrix([[0, -sympy.I], [sympy.I, 0]])
SZ = sympy.Matrix([[1, 0], [0, -1]])
SP = sympy.Matrix([[0, 1], [0, 0]])
SM = sympy.Matrix([[0, 0], [1, 0]])
ID2 = sympy.eye(2)


def _kron(mats):
    out = mats[0]
    for m in mats[1:]:
        out = sympy.kronecker_product(out, m)
    return out


def gen_matrix(space: Space, g: int):
    j, s = divmod(g, 2)
    if space.kind(j) == "hyp":
        local = 2 * SP if s == 0 else SM  # e f + f e = 2, e^2 = f^2 = 0
    else:
        local = SX if s == 0 else SY
    return _kron([SZ] * j + [local] + [ID2] * (space.n - j - 1))


def to_matrix(x: CliffordElement):
    dim = 2 ** x.space.n
    out = sympy.zeros(dim, dim)
    for mono, c in x.terms:
        m = sympy.eye(dim)
        for g in mono:
            m = m * gen_matrix(x.space, g)
        re = sympy.Rational(int(c.x.numerator), int(c.x.denominator))
        im = sympy.Rational(int(c.y.numerator), int(c.y.denominator))
        out += (re + sympy.I * im) * m
    return sympy.expand(out)


spaces = st.sampled_from([Space(2), Space(2, frozenset({1})), Space(3, frozenset({0})), Space(1, frozenset({0}))])


@st.composite
def elements(draw, space):
    d = {}
    for _ in range(draw(st.integers(0, 4))):
        gens = draw(st.lists(st.integers(0, 2 * space.n - 1), max_size=4))
        x = CliffordElement.scalar(space, 1)
        for g in gens:
            x = cl_mul(x, CliffordElement.gen(space, g))
        c = gq(draw(st.integers(-3, 3)), draw(st.integers(-2, 2)))
        for m, v in x.scale(c).terms:
            d[m] = d.get(m, clifford.ZERO) + v
    return CliffordElement.from_dict(space, d)


@given(st.data())
def test_associative(data):
    sp = data.draw(spaces)
    a, b, c = (data.draw(elements(sp)) for _ in range(3))
    assert cl_mul(cl_mul(a, b), c) == cl_mul(a, cl_mul(b, c))
    assert cl_mul(a, b + c) == cl_mul(a, b) + cl_mul(a, c)


@given(st.data())
def test_matches_spinor_matrices(data):
    sp = data.draw(spaces)
    a, b = data.draw(elements(sp)), data.draw(elements(sp))
    assert to_matrix(cl_mul(a, b)) == sympy.expand(to_matrix(a) * to_matrix(b))


@given(st.data())
def test_star_is_antiautomorphism(data):
    sp = data.draw(spaces)
    a, b = data.draw(elements(sp)), data.draw(elements(sp))
    assert clifford.star(cl_mul(a, b)) == cl_mul(clifford.star(b), clifford.star(a))
    assert clifford.alpha(cl_mul(a, b)) == cl_mul(clifford.alpha(a), clifford.alpha(b))


def test_generator_relations():
    sp = Space(2, frozenset({1}))
    e, f, v, w = (CliffordElement.gen(sp, g) for g in range(4))
    assert cl_mul(f, e) == 2 - cl_mul(e, f)
    assert cl_mul(e, e).is_zero() and cl_mul(f, f).is_zero()
    assert cl_mul(v, v) == 1 and cl_mul(w, w) == 1
    assert cl_mul(v, w) == -cl_mul(w, v)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ad_matches_standard_rep(n):
    for lab in lie.basis_labels(n):
        x = clifford.lie_element(lab, n)
        got = {k: clifford._re(v) for k, v in clifford.ad_on_vectors(x).items() if v != clifford.ZERO}
        assert got == {k: Fraction(v) for k, v in lie.std_matrix_n(lab, n).items() if v}


@pytest.mark.parametrize("n", [2, 3])
def test_lie_brackets_match(n):
    basis = clifford.lie_basis(n)
    labs = list(basis)
    for a in labs[::3]:
        for b in labs[::2]:
            want = clifford.clifford_from_lie(lie.bracket({a: 1}, {b: 1}, n), n)
            assert clifford.commutator(basis[a], basis[b]) == want


@pytest.mark.parametrize("k", range(0, 5))
def test_ep_square(k):
    assert clifford.ep_square(k) == (-1) ** k


@pytest.mark.parametrize("k,l", [(0, 0), (0, 1), (1, 1), (1, 2), (2, 3)])
def test_ep_anticommute(k, l):
    assert clifford.ep_commutation(k, l) == -1


@pytest.mark.parametrize("m", range(1, 5))
def test_ep2n(m):
    x = clifford.epsilon_2n(m)
    assert cl_mul(x, x) == (-1) ** m
    rho = clifford.rho_matrix(x)
    assert rho == {(i, i): gq(-1) for i in range(2 * m)}


def test_rho_rejects_non_pin():
    sp = Space(2)
    x = CliffordElement.scalar(sp, 1) + CliffordElement.gen(sp, 0)
    with pytest.raises(clifford.NotInPin):
        clifford.rho_matrix(x)


@pytest.mark.parametrize("n", range(2, 7))
def test_block_realization_jordan_type(n):
    for label, case, dim in enumerate_small_orbits(n):
        if dim == 0:
            continue
        real = clifford.block_realization(label)
        assert clifford.jordan_type_on_V(real.e) == list(label.partition)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_very_even_class(n):
    for tag in ("I", "II"):
        assert clifford.same_very_even_class(parse_orbit(",".join(["2"] * n) + ":" + tag))


@pytest.mark.parametrize("n", range(2, 7))
def test_component_group_tables(n):
    for label, case, dim in enumerate_small_orbits(n):
        tab = clifford.component_group_table(label)
        assert all(tab.checks.values()), (label, tab.checks)
        assert tab.group_type == component_group(label, "Spin").group_type
        # the table is a group: closed, associative, with identity at index 0
        t = tab.table
        r = range(len(t))
        assert all(t[0][i] == i for i in r)
        assert all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r)


@pytest.mark.parametrize("size", [1, 3, 5])
def test_theta_path(size):
    assert clifford.theta_path_check(size).ok


def test_ep2n_forms_differ_by_sign():
    for n in (1, 2, 3):
        x = clifford.epsilon_2n(n)
        y = clifford.vw_to_hyperbolic(clifford.epsilon_2n_vw(n), n - 1)
        assert y == -x


@pytest.mark.parametrize("n", [2, 3])
def test_lie_image_is_skew_and_even(n):
    for lab, x in clifford.lie_basis(n).items():
        assert (x + clifford.star(x)).is_zero()
        assert clifford.alpha(x) == x


def _Q_on(sp, a, b):
    # symmetric bilinear form on coordinate dicts {generator: coeff}
    return sum((ca * cb * gq(sp.Q(g, h)) for g, ca in a.items() for h, cb in b.items()), clifford.ZERO)


@pytest.mark.parametrize("text", ["3,2,2,1", "3,1,1,1,1,1", "5,3,1,1,1,1", "3,3,1,1,1,1,1,1"])
def test_rho_preserves_Q_on_ep_products(text):
    label = parse_orbit(text)
    real = clifford.block_realization(label)
    sp = real.space
    eps = [clifford.block_ep(real, b) for b in real.odd_blocks]
    prods = [cl_mul(eps[0], e) for e in eps[1:]] + eps
    for x in prods:
        rho = clifford.rho_matrix(x)
        cols = {g: {h: c for (h, gg), c in rho.items() if gg == g} for g in range(2 * sp.n)}
        for g in range(2 * sp.n):
            for h in range(g, 2 * sp.n):
                assert _Q_on(sp, cols[g], cols[h]) == gq(sp.Q(g, h))


@pytest.mark.parametrize("n", range(2, 7))
def test_table_order_and_so_quotient(n):
    for label, case, dim in enumerate_small_orbits(n):
        tab = clifford.component_group_table(label)
        order = len(tab.elements)
        assert 8 % order == 0
        so = component_group(label, "SO")
        # quotient by {+-1} has order dividing the SO group's
        assert so.order % max(order // 2, 1) == 0
