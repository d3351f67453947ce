import random
from fractions import Fraction as F

import pytest

from ordmod.linalg import identity, vadd, vscale, vsub, zero_vector
from ordmod.weyl import (
    AffineWeight,
    generate_weyl,
    level_weight,
    reflect,
    shifted_reflect,
    shifted_translate_act,
    translate,
    weyl_act,
)

SAMPLED = ["sl(2|1)", "sl(3|2)", "osp(2|4)", "osp(1|4)", "osp(3|2)", "osp(4|4)", "F(4)", "G(3)", "sp(4)", "g2"]


def _rand_vector(rs, rng):
    return tuple(F(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(rs.dim))


def _rand_span_vector(rs, rng):
    v = zero_vector(rs.dim)
    for a in rs.simple_roots:
        v = vadd(v, vscale(F(rng.randint(-4, 4), rng.choice([1, 2])), a))
    return v


def test_reflect_basics(desk):
    rs = desk["sl(2|1)"]
    a1, a2 = rs.simple_roots
    assert reflect(rs, a1, a1) == vscale(-1, a1)
    # theta = a1 + a2 reflects to a2
    assert reflect(rs, a1, rs.theta) == a2
    # fixed when orthogonal
    rs2 = desk["sl(3)"]
    b1, b2 = rs2.simple_roots
    orth = vadd(b1, vscale(2, b2))
    assert rs2.inner(orth, b1) == 0
    assert reflect(rs2, b1, orth) == orth


def test_reflect_isotropic_rejected(desk):
    rs = desk["sl(2|1)"]
    with pytest.raises(ValueError, match="isotropic"):
        reflect(rs, rs.simple_roots[1], rs.theta)


def test_group_orders(desk, desk_groups):
    for name, rs in desk.items():
        assert desk_groups[name].order == rs.weyl_order


def test_elements_permute_roots_and_preserve_parity(desk, desk_groups):
    for name in SAMPLED:
        rs, group = desk[name], desk_groups[name]
        roots = rs.even_roots | rs.odd_roots
        for w in group.elements:
            for v in rs.even_roots:
                assert w.apply(v) in rs.even_roots
            for v in rs.odd_roots:
                img = w.apply(v)
                assert img in roots and img in rs.odd_roots


def test_form_preservation_exhaustive(desk, desk_groups):
    rng = random.Random(7)
    for name in SAMPLED:
        rs, group = desk[name], desk_groups[name]
        v, w = _rand_vector(rs, rng), _rand_vector(rs, rng)
        for y in group.elements:
            assert rs.inner(y.apply(v), y.apply(w)) == rs.inner(v, w)


def test_inverse(desk, desk_groups):
    for name in SAMPLED:
        rs, group = desk[name], desk_groups[name]
        for y in group.elements:
            yinv = y.inverse(rs)
            assert yinv.matrix in group.index
            from ordmod.linalg import mat_mul

            assert mat_mul(y.matrix, yinv.matrix) == identity(rs.dim)


def test_weyl_cap(desk):
    with pytest.raises(RuntimeError, match="cap"):
        generate_weyl(desk["F(4)"], cap=10)


def test_translate_identity_and_vacuum(desk):
    rs = desk["osp(2|4)"]
    lam = AffineWeight(F(3, 2), rs.rho, F(-1, 3))
    assert translate(rs, zero_vector(rs.dim), lam) == lam
    # t_beta(Lambda_0) = Lambda_0 + beta - (beta, beta)/2 * delta
    beta = vadd(rs.simple_roots[1], vscale(2, rs.simple_roots[2]))
    lam0 = AffineWeight(F(1), zero_vector(rs.dim), F(0))
    out = translate(rs, beta, lam0)
    assert out.level == 1
    assert out.finite == beta
    assert out.delta_coeff == -rs.inner(beta, beta) / 2


def test_translate_homomorphism(desk):
    rng = random.Random(11)
    for name in SAMPLED:
        rs = desk[name]
        for _ in range(8):
            beta, gamma = _rand_span_vector(rs, rng), _rand_span_vector(rs, rng)
            lam = AffineWeight(F(rng.randint(-5, 5), rng.choice([1, 2, 3])), _rand_vector(rs, rng), F(rng.randint(-3, 3)))
            lhs = translate(rs, beta, translate(rs, gamma, lam))
            rhs = translate(rs, vadd(beta, gamma), lam)
            assert lhs == rhs
            assert lhs.level == lam.level


def test_level_invariant_under_group(desk, desk_groups):
    rs, group = desk["osp(3|2)"], desk_groups["osp(3|2)"]
    lam = AffineWeight(F(5, 4), rs.rho, F(1))
    for y in group.elements:
        assert weyl_act(y, lam).level == lam.level


def test_shifted_action_fixed_points(desk, desk_groups):
    for name in SAMPLED:
        rs, group = desk[name], desk_groups[name]
        vac = level_weight(rs, F(-1, 2))
        out = shifted_translate_act(rs, group.identity_element, zero_vector(rs.dim), vac)
        assert out == vac


def test_shifted_reflection_involution(desk):
    rng = random.Random(13)
    for name in SAMPLED:
        rs = desk[name]
        lam = AffineWeight(F(2, 3), _rand_vector(rs, rng), F(0))
        for gamma in rs.even_simple:
            assert shifted_reflect(rs, gamma, shifted_reflect(rs, gamma, lam)) == lam


def test_shifted_translate_worked_example(desk):
    # sl(2|1), u = 2: beta with (beta, a1) = 0, (beta, a2) = -1 sends the
    # boundary level weight to pairings (0, -1/2) at level -1/2.
    from ordmod.admissible import beta_from_marks, principal_level

    rs = desk["sl(2|1)"]
    group = generate_weyl(rs)
    beta = beta_from_marks(rs, group.identity_element, (0, 1))
    assert [rs.inner(beta, a) for a in rs.simple_roots] == [0, -1]
    lam = shifted_translate_act(rs, group.identity_element, beta, level_weight(rs, principal_level(rs, 2)))
    assert lam.level == F(-1, 2)
    assert [rs.inner(lam.finite, a) for a in rs.simple_roots] == [0, F(-1, 2)]


def test_pairing_identity(desk, desk_groups):
    # For lam = (t_beta y) . (K Lambda_0): (lam, a_i) = (h/u)(beta, a_i) + (rho, y^-1 a_i - a_i)
    from ordmod.admissible import beta_from_marks, candidate_weight

    rng = random.Random(17)
    for name in SAMPLED:
        rs, group = desk[name], desk_groups[name]
        for u in (1, 2, 3):
            from ordmod.admissible import principal_rejection_reason

            if principal_rejection_reason(rs, u) is not None:
                continue
            for y in group.elements if group.order <= 16 else group.elements[:16]:
                d = tuple(rng.randint(0, 2) for _ in range(rs.rank))
                beta = beta_from_marks(rs, y, d)
                lam = candidate_weight(rs, y, beta, u)
                yinv = y.inverse(rs)
                for a in rs.simple_roots:
                    expected = rs.h_dual / u * rs.inner(beta, a) + rs.inner(rs.rho, vsub(yinv.apply(a), a))
                    assert rs.inner(lam.finite, a) == expected
