"""Finite-dimensionality filter: dominance and integrality on the even simple system.

A highest weight gives a finite-dimensional module only if its pairing with
every coroot of the even simple system is a nonnegative integer.  The single
uniform rule ``2 (lam, gamma) / (gamma, gamma) in Z_{>=0}`` over the even
simple system reproduces the per-family sign and scaling conditions (negative
square lengths flip the sign, short roots rescale the integrality lattice).
The rule is used strictly as a filter: it never asserts that a surviving
weight is finite-dimensional for the type II families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Vector
from .rootdata import RootSystem
from .weyl import AffineWeight


@dataclass(frozen=True)
class DominanceVerdict:
    accepted: bool
    violations: tuple[tuple[Vector, Fraction], ...]


def is_even_dominant_integral(rs: RootSystem, weight: AffineWeight) -> DominanceVerdict:
    """Accept iff 2(lam, gamma)/(gamma, gamma) is a nonnegative integer for every even simple gamma."""
    violations = []
    for gamma in rs.even_simple:
        value = 2 * rs.inner(weight.finite, gamma) / rs.inner(gamma, gamma)
        if value.denominator != 1 or value < 0:
            violations.append((gamma, value))
    return DominanceVerdict(not violations, tuple(violations))
