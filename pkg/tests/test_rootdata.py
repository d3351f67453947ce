from fractions import Fraction as F

import pytest

from ordmod.cli import parse_algebra
from ordmod.linalg import solve, vadd, vneg, vscale, vsub, zero_vector
from ordmod.rootdata import ConstructionError, Family, FamilySpec, build_root_system

HALF = F(1, 2)

# name -> (h_dual, lacety, (even, odd) counts, marks, rho pairings, Weyl order)
EXPECTED = {
    "sl(2|1)": (F(1), 1, (2, 4), (1, 1), (1, 0), 2),
    "sl(3|1)": (F(2), 1, (6, 6), (1, 1, 1), (1, 1, 0), 6),
    "sl(3|2)": (F(1), 1, (8, 12), (1, 1, 1, 1), (1, 1, 0, -1), 12),
    "osp(2|2)": (F(1), 1, (2, 4), (1, 1), (0, 1), 2),
    "osp(2|4)": (F(2), 2, (8, 8), (1, 2, 1), (0, HALF, 1), 8),
    "osp(1|2)": (F(3, 2), 1, (2, 2), (2,), (F(1, 4),), 2),
    "osp(1|4)": (F(5, 2), 2, (8, 4), (2, 2), (HALF, F(1, 4)), 8),
    "osp(3|2)": (HALF, 1, (4, 6), (2, 2), (0, -F(1, 4)), 4),
    "osp(5|2)": (F(1), 2, (10, 10), (2, 2, 2), (0, 1, HALF), 16),
    "osp(6|2)": (F(2), 1, (14, 12), (2, 2, 1, 1), (0, 1, 1, 1), 48),
    "osp(4|4)": (F(1), 2, (12, 16), (2, 2, 1, 1), (HALF, 0, -HALF, -HALF), 32),
    "F(4)": (F(3), 2, (20, 16), (2, 3, 2, 1), (0, HALF, 1, 1), 96),
    "G(3)": (F(2), 3, (14, 14), (2, 4, 2), (0, F(1, 3), 1), 24),
    "sl(2)": (F(2), 1, (2, 0), (1,), (1,), 2),
    "sl(3)": (F(3), 1, (6, 0), (1, 1), (1, 1), 6),
    "sp(4)": (F(3), 2, (8, 0), (2, 1), (HALF, 1), 8),
    "g2": (F(4), 3, (12, 0), (3, 2), (F(1, 3), 1), 12),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_family_data(desk, name):
    h, lac, counts, marks, rho, order = EXPECTED[name]
    rs = desk[name]
    assert rs.h_dual == h
    assert rs.lacety == lac
    assert (len(rs.even_roots), len(rs.odd_roots)) == counts
    assert rs.marks == tuple(marks)
    assert rs.rho_pairings() == tuple(F(x) for x in rho)
    assert rs.weyl_order == order


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_structural_invariants(desk, name):
    rs = desk[name]
    roots = rs.even_roots | rs.odd_roots
    # Delta = Delta+ disjoint-union -Delta+
    assert {vneg(v) for v in rs.positive_roots} == roots - rs.positive_roots
    for a in rs.simple_roots:
        assert a in rs.positive_roots
    # rho pairing identity and the dual Coxeter identity, exactly
    for i, a in enumerate(rs.simple_roots):
        assert rs.inner(rs.rho, a) == HALF * rs.gram[i][i]
    assert rs.h_dual == rs.inner(rs.rho, rs.theta) + HALF * rs.inner(rs.theta, rs.theta)
    # theta: stated mark decomposition and local maximality
    theta = zero_vector(rs.dim)
    for mk, a in zip(rs.marks, rs.simple_roots):
        assert mk >= 1
        theta = vadd(theta, vscale(mk, a))
    assert theta == rs.theta and theta in rs.positive_roots
    for a in rs.simple_roots:
        assert vadd(rs.theta, a) not in roots
    # gram symmetric
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.gram[i][j] == rs.gram[j][i]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_even_simple_system(desk, name):
    rs = desk[name]
    even_pos = [v for v in rs.positive_roots if v in rs.even_roots]
    # indecomposable in the even positive system
    indec = {
        v
        for v in even_pos
        if not any(vsub(v, w) in rs.even_roots and vsub(v, w) in rs.positive_roots for w in even_pos if w != v)
    }
    assert indec == set(rs.even_simple)
    # linear independence via a nondegenerate Gram matrix
    gram = [[rs.inner(a, b) for b in rs.even_simple] for a in rs.even_simple]
    solve(gram, [F(0)] * len(gram))  # raises if singular
    # every even positive root is a nonnegative-integer combination
    for v in even_pos:
        coeffs = solve(
            [[rs.inner(a, b) for b in rs.even_simple] for a in rs.even_simple],
            [rs.inner(v, a) for a in rs.even_simple],
        )
        recon = zero_vector(rs.dim)
        for c, a in zip(coeffs, rs.even_simple):
            assert c.denominator == 1 and c >= 0
            recon = vadd(recon, vscale(c, a))
        assert recon == v


CARTAN_DISPLAYS = {
    "sl(2|1)": [[2, -1], [-1, 0]],
    "sl(3|2)": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 0, 1], [0, 0, -1, 2]],
    "osp(2|2)": [[0, -1], [-1, 2]],
    "osp(2|4)": [[0, -HALF, 0], [-1, 2, -2], [0, -1, 2]],
    "F(4)": [[0, -HALF, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "G(3)": [[0, -F(1, 3), 0], [-1, 2, -3], [0, -1, 2]],
}


@pytest.mark.parametrize("name", sorted(CARTAN_DISPLAYS))
def test_cartan_matrix_displays(desk, name):
    rs = desk[name]
    expected = tuple(tuple(F(x) for x in row) for row in CARTAN_DISPLAYS[name])
    assert rs.cartan_matrix() == expected


def test_sl21_examples(desk):
    rs = desk["sl(2|1)"]
    a1, a2 = rs.simple_roots
    assert rs.inner(rs.rho, a1) == 1 and rs.inner(rs.rho, a2) == 0
    assert rs.inner(a2, a2) == 0
    assert rs.coroot(a2) == a2  # isotropic convention
    assert rs.even_simple == (a1,)


def test_coroot_examples(desk):
    osp12 = desk["osp(1|2)"]
    (a1,) = osp12.simple_roots
    assert osp12.inner(a1, a1) == HALF
    assert osp12.coroot(a1) == vscale(4, a1)
    sl2 = desk["sl(2)"]
    assert sl2.coroot(sl2.theta) == sl2.theta
    with pytest.raises(ValueError):
        osp12.coroot(vscale(3, a1))


def test_inner_examples(desk):
    g3 = desk["G(3)"]
    a1, a2, _ = g3.simple_roots
    assert g3.inner(a1, a2) == -F(1, 3)
    assert g3.inner(zero_vector(g3.dim), a1) == 0
    sl21 = desk["sl(2|1)"]
    assert sl21.inner(sl21.simple_roots[1], sl21.simple_roots[1]) == 0
    with pytest.raises(ValueError):
        sl21.inner((F(1),), sl21.simple_roots[0])


def test_even_simple_examples(desk):
    osp14 = desk["osp(1|4)"]
    a1, a2 = osp14.simple_roots
    assert osp14.even_simple == (a1, vscale(2, a2))
    f4 = desk["F(4)"]
    assert f4.even_simple[0] == f4.theta
    assert f4.even_simple[1:] == f4.simple_roots[1:]


def test_osp_d22_example(desk):
    rs = desk["osp(4|4)"]
    assert rs.h_dual == 1
    assert rs.inner(rs.rho, rs.simple_roots[0]) == HALF


def test_derived_roots_registered(desk):
    assert "theta_1" in desk["sl(3|2)"].derived
    assert "theta_0" in desk["osp(2|4)"].derived
    for name in ("osp(3|2)", "osp(5|2)", "osp(6|2)", "osp(4|4)"):
        assert "alpha_prime_n" in desk[name].derived
    assert "theta_prime" in desk["F(4)"].derived
    assert "theta_prime" in desk["G(3)"].derived
    for rs in desk.values():
        for v in rs.derived.values():
            assert rs.is_root(v)


def test_construction_errors():
    with pytest.raises(ConstructionError, match="dual Coxeter number 0"):
        build_root_system(FamilySpec(Family.SL_SUPER, 2, 2))
    with pytest.raises(ConstructionError, match="n > m"):
        build_root_system(FamilySpec(Family.SL_SUPER, 1, 2))
    with pytest.raises(ConstructionError):
        build_root_system(FamilySpec(Family.OSP_D, 0, 1))


def test_h_dual_zero_is_constructible():
    rs = build_root_system(parse_algebra("osp(4|2)"))
    assert rs.h_dual == 0
