from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from smallorbits import lie, oracle, rootsys, spectra
from smallorbits.orbits import enumerate_small_orbits, parse_orbit, sl2_triple
from smallorbits.rootsys import Weight


def matmul(a, b):
    out = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + x * y
    return {k: v for k, v in out.items() if v}


def comm(a, b):
    ab, ba = matmul(a, b), matmul(b, a)
    out = dict(ab)
    for k, v in ba.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def combo(images, elem):
    out = {}
    for lab, c in elem.items():
        for k, v in images[lab].items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("lam,dim", [((1, 0, 0, 0), 8), ((1, 1, 0, 0), 28), ((2, 0, 0, 0), 35),
                                     ((1, 1, 1, 1), 35), ((1, 1, 1, -1), 35)])
def test_dims(lam, dim):
    assert oracle.build_irrep(Weight.of(*lam)).dim == dim


@pytest.mark.parametrize("lam", [(1, 1, 0), (2, 1, 0), (1, 1, 1, 0), (1, 0, 0, 0)])
def test_homomorphism(lam):
    w = Weight.of(*lam)
    rep = oracle.build_irrep(w)
    n = w.n
    imgs = rep.generator_images()
    labs = list(imgs)
    for a in labs:
        for b in labs:
            if a >= b:
                continue
            want = combo(imgs, lie.bracket({a: 1}, {b: 1}, n))
            assert comm(imgs[a], imgs[b]) == want, (a, b)


def test_highest_weight_vector_killed_by_raising():
    rep = oracle.build_irrep(Weight.of(2, 1, 0))
    top = rep.highest_weight.twice
    v = {(top, 0): 1}
    for r in lie.all_roots(3):
        if r > (0,) * 3:
            assert rep.apply(("X", r), v) == {}


@pytest.mark.parametrize("n", [3, 4])
def test_centralizer_closed(n):
    for label, case, dim in enumerate_small_orbits(n):
        basis = oracle.centralizer_basis(sl2_triple(label).e_matrix(), n)
        assert len(basis) == n * (2 * n - 1) - dim
        assert oracle.is_subalgebra(basis, n)


def test_centralizer_dim_case1():
    assert len(oracle.centralizer_basis(sl2_triple(parse_orbit("3,2,2,1")).e_matrix(), 4)) == 12


@pytest.mark.parametrize("orbit,lam,fixed,split", [
    ("3,2,2,1", (1, 0, 0, 0), 1, {"2": 1}),
    ("3,2,2,1", (1, 1, 0, 0), 1, {"1": 1}),
    ("2,2,2,2:I", (1, 1, 1, 1), 1, {"Triv": 1}),
    ("2,2,2,2:I", (1, 1, 1, -1), 0, {}),
    ("2,2,2,2:II", (1, 1, 1, -1), 1, {"Triv": 1}),
    ("2,2,1,1,1,1", (1, 1, 0, 0), 1, {"Triv": 1}),
    ("2,2,1,1,1,1", (1, 0, 0, 0), 0, {}),
])
def test_invariant_dimension_examples(orbit, lam, fixed, split):
    rep = oracle.invariant_dimension(parse_orbit(orbit), Weight.of(*lam))
    assert rep.fixed_dim == fixed
    assert rep.character_split == split


@settings(max_examples=8)
@given(st.integers(0, 1000), st.sampled_from([(2, 1, 0, 0), (1, 1, 1, 0), (2, 1, 1, 1)]))
def test_seed_independence(seed, lam):
    orbit = parse_orbit("3,2,2,1")
    w = Weight.of(*lam)
    oracle.clear_cache()
    a = oracle.invariant_dimension(orbit, w, seed=seed)
    oracle.clear_cache()
    b = oracle.invariant_dimension(orbit, w, seed=None)
    assert (a.fixed_dim, a.character_split) == (b.fixed_dim, b.character_split)


def test_capacity():
    with pytest.raises(rootsys.CapacityError):
        oracle.build_irrep(Weight.of(3, 2, 1, 0), max_dim=100)
    with pytest.raises(rootsys.CapacityError):
        oracle.cross_validate(parse_orbit("3,2,2,1,1,1"), 2)


def test_cross_validate_small_cutoff():
    for label, case, dim in enumerate_small_orbits(4):
        cv = oracle.cross_validate(label, 2)
        assert cv.ok, cv.discrepancies


def test_restriction_dims():
    for lam in rootsys.dominant_weights_in_box(4, Fraction(3)):
        res = oracle.restrict_to_product(lam, 2)
        total = sum(m * rootsys.weyl_dim(Weight(x)) * rootsys.weyl_dim(Weight(y)) for (x, y), m in res.items())
        assert total == rootsys.weyl_dim(lam)


def test_branching_p2():
    label = parse_orbit("3,2,2,1")
    for sigma, xi in zip(oracle.SIGMA_TYPES, "1234"):
        fam = spectra.unipotent_family(label, xi)
        got = oracle.branching_induction_oracle(2, sigma, 3)
        assert all(m == (1 if fam.contains(w) else 0) for w, m in got.items())


def test_branching_p1_swaps_integral_types():
    label = parse_orbit("3,1")
    got = oracle.branching_induction_oracle(1, "i", 4)
    fam2 = spectra.unipotent_family(label, "2")
    assert all(m == (1 if fam2.contains(w) else 0) for w, m in got.items())


@pytest.mark.parametrize("lam", [(1, 1, 0), (2, 1, 1), (1, 1, 1, 1), (1, 1, 0, 0)])
def test_torus_acts_on_root_vectors_by_the_root(lam):
    rep = oracle.build_irrep(Weight.of(*lam))
    n = rep.n
    imgs = rep.generator_images()
    for r in lie.all_roots(n):
        x = imgs[("X", r)]
        for k in range(n):
            want = {key: r[k] * v for key, v in x.items() if r[k]}
            assert comm(imgs[("H", k)], x) == want


def test_fixed_dim_at_most_one():
    for label, case, dim in enumerate_small_orbits(4):
        for lam in rootsys.dominant_weights_in_box(4, Fraction(3), "integral"):
            assert oracle.invariant_dimension(label, lam).fixed_dim <= 1
