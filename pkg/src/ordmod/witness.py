"""Constructive witnesses for the nonexistence arguments behind the classification.

For a nontrivial even Weyl element y, a witness is a vector alpha in a
positive lattice with ``theta + y^{-1} alpha`` still in the positive lattice,
packaged with the value ``(rho, alpha - y^{-1} alpha)``.  Three kinds occur,
depending on which Weyl factor y moves and on the sign the Weyl vector takes
on that side:

``theta``
    The three-branch recipe on a highest-root analogue theta_ref of the
    subsystem where the Weyl vector pairs positively: alpha = theta_ref when
    y^{-1} theta_ref is negative; alpha = k theta_ref for minimal k past the
    threshold when y^{-1} theta_ref is positive but not fixed; and
    alpha = k theta_ref + m alpha_j for a moved simple root alpha_j when
    theta_ref is fixed.  The bound must reach a per-family threshold, strictly
    or not depending on the family and branch.

``descent``
    On the side where the Weyl vector pairs negatively no positive threshold
    exists; the witness is a simple root of that subsystem sent negative by
    y^{-1}, and the verified fact is ``(rho, y^{-1} alpha - alpha) > 0``,
    i.e. a strictly negative bound.

``long_root``
    For the orthosymplectic families, elements of the symplectic Weyl factor
    that move the set of positive long roots admit a moved long root as a
    witness; the subgroup generated by the short-root reflections stabilizes
    that set and has none.  The bound is an even integer when the orthogonal
    side dominates (every long root pairs oddly with rho) and an integer
    otherwise.

Dispatch per family:

=============  =====================================================================
family         route for y != 1
=============  =====================================================================
sl(n), sp(4),  theta on the full system; branch 1 at threshold h_dual non-strict,
g2             branches 2-3 strict.
osp(1|2n)      theta on the full system; branch 1 at threshold n non-strict,
               branches 2-3 at n + 1/2 strict.
sl(n|m)        theta (theta_1, threshold n - m, all branches non-strict) when the
               first block moves, else descent on the second block.
osp(2|2n)      theta on theta_0 at threshold h_dual, strict.
osp(2m+1|2n),  second block moving: theta on theta_prime (orthogonal side longer,
osp(2m|2n)     m > n) or descent (m <= n), threshold h_dual strict; pure symplectic
               elements: moved long root if one exists, else descent (m > n) or
               theta on theta itself (m <= n, threshold h_dual strict).
F(4), G(3)     theta on theta_prime (threshold h_dual strict) when the orthogonal
               block moves; the residual reflection in theta uses branch 1 at
               threshold h_dual non-strict.
=============  =====================================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Vector, unit_vector, vadd, vneg, vscale, vsub
from .rootdata import Family, RootSystem
from .weyl import WeylElement

F = Fraction


@dataclass(frozen=True)
class WitnessResult:
    alpha: Vector
    bound: Fraction
    strict: bool
    kind: str  # "theta" | "descent" | "long_root"
    threshold: Fraction | None
    branch: int  # 1..3 for theta witnesses, 0 otherwise


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise RuntimeError(f"witness verification failed: {msg}")


def _in_positive_lattice(rs: RootSystem, v: Vector) -> bool:
    return all(c >= 0 for c in rs.root_coords(v))


def _least_multiplier(threshold: Fraction, denom: Fraction, strict: bool) -> int:
    """Smallest positive integer k with k*denom > threshold (or >= when not strict)."""
    q = threshold / denom
    k = math.floor(q) + 1 if strict else math.ceil(q)
    return max(k, 1)


def _moves_block(y: WeylElement, block: tuple[int, int]) -> bool:
    lo, hi = block
    for i in range(lo, hi):
        for j, entry in enumerate(y.matrix[i]):
            if entry != (1 if i == j else 0):
                return True
    return False


def _theta_witness(
    rs: RootSystem,
    y: WeylElement,
    theta_ref: Vector,
    j_candidates,
    branch1: tuple[Fraction, bool],
    rest: tuple[Fraction, bool],
) -> WitnessResult:
    yinv = y.inverse(rs)
    image = yinv.apply(theta_ref)
    if rs.is_positive_root(vneg(image)):
        branch = 1
        threshold, strict = branch1
        alpha = theta_ref
        bound = rs.inner(rs.rho, vsub(alpha, image))
    elif image == theta_ref:
        branch = 3
        threshold, strict = rest
        pick = None
        for aj in j_candidates:
            denom = rs.inner(rs.rho, vsub(aj, yinv.apply(aj)))
            if denom > 0:
                pick = (aj, denom)
                break
        if pick is None:
            raise RuntimeError("no moved simple root although y is not the identity")
        aj, denom = pick
        mult = _least_multiplier(threshold, denom, strict)
        alpha = vscale(mult, aj)
        while not _in_positive_lattice(rs, vadd(rs.theta, yinv.apply(alpha))):
            alpha = vadd(alpha, theta_ref)
        bound = mult * denom
    else:
        branch = 2
        threshold, strict = rest
        _check(rs.is_positive_root(image), "y^-1 theta_ref is not a root")
        denom = rs.inner(rs.rho, vsub(theta_ref, image))
        _check(denom > 0, "nonpositive pairing against a dominated positive root")
        k = _least_multiplier(threshold, denom, strict)
        alpha = vscale(k, theta_ref)
        bound = k * denom
    _check(bound == rs.inner(rs.rho, vsub(alpha, yinv.apply(alpha))), "bound mismatch")
    _check(_in_positive_lattice(rs, vadd(rs.theta, yinv.apply(alpha))), "theta + y^-1 alpha not in Q+")
    _check(bound > threshold if strict else bound >= threshold, "threshold not reached")
    return WitnessResult(alpha, bound, strict, "theta", threshold, branch)


def _descent_witness(rs: RootSystem, y: WeylElement, simples) -> WitnessResult:
    yinv = y.inverse(rs)
    for a in simples:
        img = yinv.apply(a)
        if rs.is_positive_root(vneg(img)):
            bound = rs.inner(rs.rho, vsub(a, img))
            _check(bound < 0, "descent bound must be strictly negative")
            _check(_in_positive_lattice(rs, vadd(rs.theta, img)), "theta + y^-1 alpha not in Q+")
            return WitnessResult(a, bound, True, "descent", None, 0)
    raise RuntimeError("no descended simple root although the block moves")


def sp_long_positive_roots(rs: RootSystem) -> tuple[Vector, ...]:
    """The positive long roots 2*delta_i of the symplectic even factor."""
    if rs.spec.family not in (Family.OSP_B, Family.OSP_D):
        raise ValueError("long-root data exists only for the osp families")
    lo, hi = rs.blocks["w1"]
    roots = tuple(vscale(2, unit_vector(rs.dim, i)) for i in range(lo, hi))
    for r in roots:
        if not rs.is_positive_root(r):
            raise RuntimeError("expected positive long root missing from the root set")
    return roots


def _moved_long_root(rs: RootSystem, y: WeylElement) -> Vector | None:
    yinv = y.inverse(rs)
    longs = sp_long_positive_roots(rs)
    long_set = set(longs)
    for a in longs:
        img = yinv.apply(a)
        if img in long_set:
            continue
        _check(vneg(img) in long_set, "image of a long root is not a long root")
        return a
    return None


def find_long_root_witness(rs: RootSystem, y: WeylElement) -> Vector:
    """A positive long root of the symplectic factor sent negative by y^{-1}.

    Raises ValueError when y falls outside the symplectic Weyl factor or
    stabilizes the positive long roots (the short-root subgroup).
    """
    if rs.spec.family not in (Family.OSP_B, Family.OSP_D):
        raise ValueError("long-root witnesses exist only for the osp families")
    if "w2" in rs.blocks and _moves_block(y, rs.blocks["w2"]):
        raise ValueError("y moves the orthogonal block; it is not in the symplectic Weyl factor")
    alpha = _moved_long_root(rs, y)
    if alpha is None:
        raise ValueError("stabilizer element has no witness: y preserves the positive long roots")
    yinv = y.inverse(rs)
    bound = rs.inner(rs.rho, vsub(alpha, yinv.apply(alpha)))
    if rs.spec.family is Family.OSP_B and rs.spec.m > rs.spec.n:
        for gamma in sp_long_positive_roots(rs):
            val = rs.inner(rs.rho, gamma)
            _check(val.denominator == 1 and int(val) % 2 == 1, "(rho, long root) must be odd")
        _check(bound.denominator == 1 and int(bound) % 2 == 0, "long-root bound must be even")
    else:
        _check(bound.denominator == 1, "long-root bound must be an integer")
    return alpha


def find_witness(rs: RootSystem, y: WeylElement) -> WitnessResult:
    """Dispatch per family and per the moving factor of y; see the module table."""
    if y.is_identity():
        raise ValueError("witness requires y != 1")
    if rs.h_dual <= 0:
        raise ValueError(f"{rs.name} has h_dual = {rs.h_dual}: witness thresholds are undefined")
    fam = rs.spec.family
    h = rs.h_dual
    if fam in (Family.SIMPLE_A, Family.SIMPLE_B2, Family.SIMPLE_G2):
        return _theta_witness(rs, y, rs.theta, rs.simple_roots, (h, False), (h, True))
    if fam is Family.OSP_B and rs.spec.m == 0:
        n = F(rs.spec.n)
        return _theta_witness(rs, y, rs.theta, rs.simple_roots, (n, False), (n + F(1, 2), True))
    if fam is Family.SL_SUPER:
        nm = F(rs.spec.n - rs.spec.m)
        if _moves_block(y, rs.blocks["w1"]):
            return _theta_witness(
                rs, y, rs.derived["theta_1"], rs.subsystem_simples["w1"], (nm, False), (nm, False)
            )
        return _descent_witness(rs, y, rs.subsystem_simples["w2"])
    if fam is Family.OSP_C:
        return _theta_witness(
            rs, y, rs.derived["theta_0"], rs.subsystem_simples["w1"], (h, True), (h, True)
        )
    if fam in (Family.OSP_B, Family.OSP_D):
        ortho_long = rs.spec.m > rs.spec.n
        if _moves_block(y, rs.blocks["w2"]):
            if ortho_long:
                return _theta_witness(
                    rs, y, rs.derived["theta_prime"], rs.subsystem_simples["w2"], (h, True), (h, True)
                )
            return _descent_witness(rs, y, rs.subsystem_simples["w2"])
        if _moved_long_root(rs, y) is not None:
            alpha = find_long_root_witness(rs, y)
            bound = rs.inner(rs.rho, vsub(alpha, y.inverse(rs).apply(alpha)))
            _check(_in_positive_lattice(rs, vadd(rs.theta, y.inverse(rs).apply(alpha))),
                   "theta + y^-1 alpha not in Q+")
            return WitnessResult(alpha, bound, False, "long_root", None, 0)
        if ortho_long:
            return _descent_witness(rs, y, rs.subsystem_simples["w1_prime"])
        return _theta_witness(
            rs, y, rs.theta, rs.subsystem_simples["w1_prime"], (h, True), (h, True)
        )
    if fam in (Family.F4, Family.G3):
        if _moves_block(y, rs.blocks["w2"]):
            return _theta_witness(
                rs, y, rs.derived["theta_prime"], rs.subsystem_simples["w2"], (h, True), (h, True)
            )
        return _theta_witness(rs, y, rs.theta, (), (h, False), (h, True))
    raise ValueError(f"unsupported family {fam}")
