"""Boundary admissible levels and principal admissible weight candidates.

A principal boundary level has the shape ``h_dual/u - h_dual`` for a positive
integer u coprime to the relevant numerical data of the algebra; the odd
orthosymplectic series ``osp(1|2n)`` additionally carries a subprincipal
series ``(2n-1)/(2u) - h_dual`` for even u.

Candidates at a principal level come from pairs (y, beta) with y in the even
Weyl group, subject to the positivity of the images of the u-shifted simple
system under the affine action of t_beta y.  Writing d_i = -(beta, y alpha_i),
positivity forces every d_i to be a nonnegative integer (positive when
y alpha_i is a negative root) with the mark-weighted sum of the d_i bounded by
u; since every mark is at least 1 the search space is finite.  beta is
recovered from d by an exact linear solve and normalized to the span of the
simple roots.  Enumeration is a pure function of (y, d), evaluated per y and
merged in a deterministic order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .linalg import Vector, solve, vadd, vneg, vscale, zero_vector
from .rootdata import Family, RootSystem
from .weyl import AffineWeight, WeylElement, WeylGroup, generate_weyl, level_weight, shifted_translate_act

F = Fraction


class RejectedLevelError(ValueError):
    """u does not define a principal boundary level for this algebra."""


@dataclass(frozen=True)
class BoundaryLevel:
    u: int
    level: Fraction
    kind: str  # "principal" | "subprincipal"


def principal_level(rs: RootSystem, u: int) -> Fraction:
    return rs.h_dual / u - rs.h_dual


def principal_rejection_reason(rs: RootSystem, u: int) -> str | None:
    """None when u defines a principal boundary level, else the violated condition."""
    if u < 1:
        return f"u must be a positive integer, got {u}"
    h = rs.h_dual
    if h == 0:
        return f"h_dual = 0: {rs.name} admits no boundary admissible levels"
    if h.denominator == 1:
        if math.gcd(u, int(h)) != 1:
            return f"gcd(u, h_dual) = gcd({u}, {h}) != 1"
        if math.gcd(u, rs.lacety) != 1:
            return f"gcd(u, lacety) = gcd({u}, {rs.lacety}) != 1"
    else:
        # Half-integral h_dual: the single condition gcd(2u, 2 h_dual) = 1.
        two_h = int(2 * h)
        if math.gcd(2 * u, two_h) != 1:
            reason = f"gcd(2u, 2 h_dual) = gcd({2 * u}, {two_h}) != 1"
            if _subprincipal_level(rs, u) is not None:
                reason += f"; u={u} gives only a subprincipal level, which is out of classification scope"
            return reason
    return None


def _subprincipal_level(rs: RootSystem, u: int) -> Fraction | None:
    """The subprincipal level for osp(1|2n) at even u coprime to 2n-1, else None."""
    if rs.spec.family is not Family.OSP_B or rs.spec.m != 0:
        return None
    n = rs.spec.n
    if u % 2 == 0 and math.gcd(u, 2 * n - 1) == 1:
        return F(2 * n - 1, 2 * u) - rs.h_dual
    return None


def boundary_levels(rs: RootSystem, u_max: int) -> list[BoundaryLevel]:
    """All boundary levels with u <= u_max, sorted by u; empty when h_dual = 0."""
    if u_max < 1:
        raise ValueError(f"u_max must be >= 1, got {u_max}")
    if rs.h_dual == 0:
        return []
    out: list[BoundaryLevel] = []
    for u in range(1, u_max + 1):
        if principal_rejection_reason(rs, u) is None:
            out.append(BoundaryLevel(u, principal_level(rs, u), "principal"))
        sub = _subprincipal_level(rs, u)
        if sub is not None:
            out.append(BoundaryLevel(u, sub, "subprincipal"))
    return out


@dataclass(frozen=True)
class Candidate:
    """One (y, d) solution with its recovered beta and canonical weight."""

    y_index: int
    y: WeylElement
    d: tuple[int, ...]
    beta: Vector
    weight: AffineWeight


def beta_from_marks(rs: RootSystem, y: WeylElement, d) -> Vector:
    """The unique beta in the span of the simple roots with (beta, y alpha_i) = -d_i."""
    n = rs.rank
    images = [y.apply(a) for a in rs.simple_roots]
    rows = [[rs.inner(img, a) for a in rs.simple_roots] for img in images]
    try:
        coeffs = solve(rows, [F(-di) for di in d])
    except RuntimeError as exc:
        raise RuntimeError("singular pairing system; the realization is broken") from exc
    beta = zero_vector(rs.dim)
    for c, a in zip(coeffs, rs.simple_roots):
        beta = vadd(beta, vscale(c, a))
    return beta


def candidate_weight(rs: RootSystem, y: WeylElement, beta: Vector, u: int) -> AffineWeight:
    """Dot action of t_beta y on the level weight, with the delta part dropped."""
    start = level_weight(rs, principal_level(rs, u))
    return shifted_translate_act(rs, y, beta, start).canonical()


def affine_positivity_recheck(rs: RootSystem, u: int, y: WeylElement, beta: Vector) -> bool:
    """Check directly that t_beta y maps {u delta - theta, alpha_1..alpha_n} to positive affine roots.

    A real affine root gamma + c delta is positive iff c > 0, or c = 0 and
    gamma is a positive finite root.  This recomputes every delta coefficient
    from beta, independent of the d-tuple bookkeeping of the enumeration.
    """

    def positive_affine(gamma: Vector, c: Fraction) -> bool:
        if c.denominator != 1:
            return False
        if c != 0:
            return c > 0
        return rs.is_positive_root(gamma)

    y_theta = y.apply(rs.theta)
    if not positive_affine(vneg(y_theta), F(u) + rs.inner(beta, y_theta)):
        return False
    for a in rs.simple_roots:
        ya = y.apply(a)
        if not positive_affine(ya, -rs.inner(beta, ya)):
            return False
    return True


def _weighted_tuples(marks, lows, limit) -> Iterator[tuple[int, ...]]:
    """All integer tuples d with d_i >= lows[i] and sum(marks_i * d_i) <= limit."""

    def rec(i: int, budget: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(marks):
            yield prefix
            return
        d = lows[i]
        while marks[i] * d <= budget:
            yield from rec(i + 1, budget - marks[i] * d, prefix + (d,))
            d += 1

    committed = sum(mk * lo for mk, lo in zip(marks, lows))
    if committed > limit:
        return iter(())
    return rec(0, limit, ())


def _candidates_for_y(rs: RootSystem, u: int, y: WeylElement, y_index: int) -> list[Candidate]:
    images = [y.apply(a) for a in rs.simple_roots]
    lows = []
    for img in images:
        if rs.is_positive_root(img):
            lows.append(0)
        elif rs.is_positive_root(vneg(img)):
            lows.append(1)
        else:
            raise RuntimeError("Weyl image of a simple root is not a root")
    y_theta = y.apply(rs.theta)
    if rs.is_positive_root(y_theta):
        limit = u - 1
    elif rs.is_positive_root(vneg(y_theta)):
        limit = u
    else:
        raise RuntimeError("Weyl image of theta is not a root")
    out = []
    for d in _weighted_tuples(rs.marks, lows, limit):
        beta = beta_from_marks(rs, y, d)
        if not affine_positivity_recheck(rs, u, y, beta):
            raise RuntimeError("enumerated candidate failed the affine positivity recheck")
        out.append(Candidate(y_index, y, d, beta, candidate_weight(rs, y, beta, u)))
    return out


def enumerate_candidates(rs: RootSystem, u: int, group: WeylGroup | None = None) -> list[Candidate]:
    """The complete finite candidate list at the principal level for u.

    Raises :class:`RejectedLevelError` when u fails the coprimality
    conditions (including the subprincipal-only case of osp(1|2n)).
    """
    reason = principal_rejection_reason(rs, u)
    if reason is not None:
        raise RejectedLevelError(f"{rs.name}, u={u}: {reason}")
    if group is None:
        group = generate_weyl(rs)
    out: list[Candidate] = []
    for idx, y in enumerate(group.elements):
        out.extend(_candidates_for_y(rs, u, y, idx))
    out.sort(key=lambda c: (c.y_index, c.d))
    return out
