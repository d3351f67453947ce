"""Exact classification of ordinary irreducible modules of affine vertex
operator superalgebras at boundary admissible levels."""

from .admissible import (
    BoundaryLevel,
    Candidate,
    RejectedLevelError,
    affine_positivity_recheck,
    beta_from_marks,
    boundary_levels,
    candidate_weight,
    enumerate_candidates,
    principal_level,
    principal_rejection_reason,
)
from .classify import CanonicalWeight, Report, classify, expected_closed_form, verify
from .dominance import DominanceVerdict, is_even_dominant_integral
from .rootdata import ConstructionError, Family, FamilySpec, RootSystem, build_root_system
from .weyl import (
    AffineWeight,
    WeylElement,
    WeylGroup,
    generate_weyl,
    level_weight,
    reflect,
    shifted_reflect,
    shifted_translate_act,
    translate,
)
from .witness import WitnessResult, find_long_root_witness, find_witness

__version__ = "0.1.0"

__all__ = [
    "AffineWeight",
    "BoundaryLevel",
    "Candidate",
    "CanonicalWeight",
    "ConstructionError",
    "DominanceVerdict",
    "Family",
    "FamilySpec",
    "RejectedLevelError",
    "Report",
    "RootSystem",
    "WeylElement",
    "WeylGroup",
    "WitnessResult",
    "affine_positivity_recheck",
    "beta_from_marks",
    "boundary_levels",
    "build_root_system",
    "candidate_weight",
    "classify",
    "enumerate_candidates",
    "expected_closed_form",
    "find_long_root_witness",
    "find_witness",
    "generate_weyl",
    "is_even_dominant_integral",
    "level_weight",
    "principal_level",
    "principal_rejection_reason",
    "reflect",
    "shifted_reflect",
    "shifted_translate_act",
    "translate",
    "verify",
]
