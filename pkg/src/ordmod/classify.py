"""Classification runs: enumerate, filter, deduplicate, compare to closed forms.

The classifier composes the candidate enumeration with the even-dominance
filter and deduplicates the surviving weights modulo delta.  Closed-form
expectations: the type I families (``sl(n|m)`` and ``osp(2|2n)``) have exactly
u modules at the level for u, the p-th carrying pairing ``-(p/u) h_dual`` at
the odd node and zero elsewhere; every other supported family has the vacuum
module alone.  A nonvacuum survivor for one of the vacuum-only families is a
discrepancy and is surfaced verbatim in the report, never dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .admissible import Candidate, enumerate_candidates, principal_level
from .dominance import is_even_dominant_integral
from .rootdata import ODD, RootSystem, TYPE_ONE_FAMILIES
from .weyl import AffineWeight, WeylGroup

F = Fraction

PASS = "PASS"
COUNT_MISMATCH = "COUNT_MISMATCH"
WEIGHT_MISMATCH = "WEIGHT_MISMATCH"


@dataclass(frozen=True)
class CanonicalWeight:
    """Level plus the pairings with the simple roots, in node order."""

    level: Fraction
    pairings: tuple[Fraction, ...]


@dataclass(frozen=True)
class Report:
    family: str
    u: int
    found: tuple[CanonicalWeight, ...]
    expected: tuple[CanonicalWeight, ...]
    verdict: str
    candidate_stats: dict


def is_type_one(rs: RootSystem) -> bool:
    return rs.spec.family in TYPE_ONE_FAMILIES


def odd_node(rs: RootSystem) -> int:
    """0-based index of the unique odd simple node (type I families)."""
    return rs.parity.index(ODD)


def canonical_weight(rs: RootSystem, weight: AffineWeight) -> CanonicalWeight:
    return CanonicalWeight(weight.level, tuple(rs.inner(weight.finite, a) for a in rs.simple_roots))


def vacuum_weight(rs: RootSystem, u: int) -> CanonicalWeight:
    return CanonicalWeight(principal_level(rs, u), (F(0),) * rs.rank)


def surviving_candidates(rs: RootSystem, u: int, group: WeylGroup | None = None) -> list[Candidate]:
    return [
        c
        for c in enumerate_candidates(rs, u, group)
        if is_even_dominant_integral(rs, c.weight).accepted
    ]


def classify(rs: RootSystem, u: int, group: WeylGroup | None = None) -> tuple[CanonicalWeight, ...]:
    """Distinct canonical weights of the surviving candidates, sorted by pairings."""
    distinct = {canonical_weight(rs, c.weight) for c in surviving_candidates(rs, u, group)}
    return tuple(sorted(distinct, key=lambda w: w.pairings))


def expected_closed_form(rs: RootSystem, u: int) -> tuple[CanonicalWeight, ...]:
    """u weights supported at the odd node for type I, the vacuum alone otherwise."""
    level = principal_level(rs, u)
    if not is_type_one(rs):
        return (vacuum_weight(rs, u),)
    node = odd_node(rs)
    out = []
    for p in range(u):
        odd_pairing = -F(p, u) * rs.h_dual
        # The closed form writes the weight against Lambda_0 and the odd
        # fundamental weight; with the odd node's comark equal to 1 the level
        # contributions must reproduce the boundary level exactly.
        lambda0_coeff = (F(p + 1, u) - 1) * rs.h_dual
        if lambda0_coeff + odd_pairing != level:
            raise RuntimeError("closed-form level consistency failed (odd-node comark != 1?)")
        pairings = tuple(odd_pairing if i == node else F(0) for i in range(rs.rank))
        out.append(CanonicalWeight(level, pairings))
    return tuple(sorted(out, key=lambda w: w.pairings))


def verdict_for(rs: RootSystem, u: int, found, expected) -> str:
    """PASS iff the sets agree exactly; a nonvacuum survivor of a vacuum-only
    family is always a WEIGHT_MISMATCH so it gets surfaced, never dropped."""
    found_set, expected_set = set(found), set(expected)
    if found_set == expected_set:
        return PASS
    if not is_type_one(rs) and any(w != vacuum_weight(rs, u) for w in found_set):
        return WEIGHT_MISMATCH
    if len(found_set) != len(expected_set):
        return COUNT_MISMATCH
    return WEIGHT_MISMATCH


def verify(rs: RootSystem, u: int, group: WeylGroup | None = None) -> Report:
    """Exact set comparison of the classifier output against the closed form."""
    candidates = enumerate_candidates(rs, u, group)
    survivors = [c for c in candidates if is_even_dominant_integral(rs, c.weight).accepted]
    found = tuple(sorted({canonical_weight(rs, c.weight) for c in survivors}, key=lambda w: w.pairings))
    expected = expected_closed_form(rs, u)
    verdict = verdict_for(rs, u, found, expected)
    stats = {
        "candidates": len(candidates),
        "survivors": len(survivors),
        "distinct": len(found),
    }
    return Report(rs.name, u, found, expected, verdict, stats)
