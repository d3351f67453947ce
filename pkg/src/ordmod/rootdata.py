"""Exact root data for basic classical Lie superalgebras and small simple Lie algebras.

Each supported family is realized on explicit rational coordinates carrying a
diagonal invariant bilinear form, normalized so that a root of maximal square
length has ``(alpha, alpha) = 2`` and the dual Coxeter number is nonnegative.
Root sets are written out explicitly from the standard epsilon/delta lists;
the constructor then *verifies* every structural identity (Weyl-vector
pairings, the dual Coxeter number, highest-root marks and local maximality,
root counts, closure of the root set under even simple reflections) instead
of trusting the tables.

Supported families:

* ``sl(n|m)`` with ``n > m > 0`` (``sl(n|n)`` is rejected: its form degenerates
  and the dual Coxeter number vanishes),
* ``osp(2|2n)``, ``osp(2m+1|2n)`` with ``m >= 0``, ``osp(2m|2n)`` with ``m >= 2``,
* the exceptional superalgebras ``F(4)`` and ``G(3)``,
* the simple Lie algebras ``sl(n)``, ``sp(4)`` and ``g2`` used as base cases.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .linalg import (
    Matrix,
    Vector,
    invert,
    is_zero,
    mat_vec,
    unit_vector,
    vadd,
    vneg,
    vscale,
    vsub,
    zero_vector,
)

F = Fraction
HALF = F(1, 2)

EVEN = 0
ODD = 1


class ConstructionError(ValueError):
    """Raised when family parameters violate a construction constraint."""


class Family(Enum):
    SL_SUPER = "sl_super"
    OSP_C = "osp_c"
    OSP_B = "osp_b"
    OSP_D = "osp_d"
    F4 = "f4"
    G3 = "g3"
    SIMPLE_A = "simple_a"
    SIMPLE_B2 = "simple_b2"
    SIMPLE_G2 = "simple_g2"


TYPE_ONE_FAMILIES = frozenset({Family.SL_SUPER, Family.OSP_C})
SIMPLE_FAMILIES = frozenset({Family.SIMPLE_A, Family.SIMPLE_B2, Family.SIMPLE_G2})


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters (unused ones stay 0)."""

    family: Family
    n: int = 0
    m: int = 0


def validate_spec(spec: FamilySpec) -> None:
    fam, n, m = spec.family, spec.n, spec.m
    if fam is Family.SL_SUPER:
        if n == m:
            raise ConstructionError(
                f"sl({n}|{m}) has dual Coxeter number 0: no boundary admissible levels"
            )
        if not n > m > 0:
            raise ConstructionError(
                f"sl(n|m) requires n > m > 0, got n={n}, m={m}"
                + (f" (use sl({m}|{n}): the two are isomorphic)" if m > n > 0 else "")
            )
    elif fam is Family.OSP_C:
        if n < 1:
            raise ConstructionError(f"osp(2|2n) requires n >= 1, got n={n}")
    elif fam is Family.OSP_B:
        if n < 1 or m < 0:
            raise ConstructionError(f"osp(2m+1|2n) requires n >= 1 and m >= 0, got m={m}, n={n}")
    elif fam is Family.OSP_D:
        if n < 1 or m < 2:
            raise ConstructionError(f"osp(2m|2n) requires n >= 1 and m >= 2, got m={m}, n={n}")
    elif fam is Family.SIMPLE_A:
        if n < 1:
            raise ConstructionError(f"sl(k) requires k >= 2, got rank {n}")


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise RuntimeError(f"root-data invariant violated: {msg}")


@dataclass(eq=False)
class RootSystem:
    """Immutable root data for one algebra; safe to share between workers."""

    spec: FamilySpec
    name: str
    dim: int
    signature: Vector
    simple_roots: tuple[Vector, ...]
    parity: tuple[int, ...]
    gram: Matrix
    even_roots: frozenset[Vector]
    odd_roots: frozenset[Vector]
    positive_roots: frozenset[Vector]
    theta: Vector
    marks: tuple[int, ...]
    rho: Vector
    h_dual: Fraction
    lacety: int
    even_simple: tuple[Vector, ...]
    derived: dict[str, Vector]
    weyl_order: int
    blocks: dict[str, tuple[int, int]]
    subsystem_simples: dict[str, tuple[Vector, ...]]
    _gram_inv: Matrix = field(repr=False, default=())
    _coords: dict[Vector, Vector] = field(repr=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def inner(self, v: Vector, w: Vector) -> Fraction:
        """Evaluate the invariant bilinear form on ambient coordinates."""
        if len(v) != self.dim or len(w) != self.dim:
            raise ValueError(f"dimension mismatch: expected vectors of length {self.dim}")
        return sum((s * a * b for s, a, b in zip(self.signature, v, w)), F(0))

    def root_coords(self, v: Vector) -> Vector:
        """Coefficients of v in the simple-root basis; v must lie in their span."""
        cached = self._coords.get(v)
        if cached is not None:
            return cached
        pairings = [self.inner(v, a) for a in self.simple_roots]
        coeffs = mat_vec(self._gram_inv, pairings)
        recon = zero_vector(self.dim)
        for c, a in zip(coeffs, self.simple_roots):
            recon = vadd(recon, vscale(c, a))
        if recon != v:
            raise ValueError("vector does not lie in the span of the simple roots")
        self._coords[v] = coeffs
        return coeffs

    def is_root(self, v: Vector) -> bool:
        return v in self.even_roots or v in self.odd_roots

    def is_positive_root(self, v: Vector) -> bool:
        return v in self.positive_roots

    def coroot(self, alpha: Vector) -> Vector:
        """alpha itself when isotropic, otherwise 2*alpha/(alpha, alpha)."""
        if not (self.is_root(alpha) or alpha in self.derived.values()):
            raise ValueError("coroot is defined only on roots and registered derived roots")
        norm = self.inner(alpha, alpha)
        if norm == 0:
            return alpha
        return vscale(F(2) / norm, alpha)

    def cartan_matrix(self) -> Matrix:
        """Row i is raw (alpha_i, alpha_j) when alpha_i is isotropic, else 2(alpha_i, alpha_j)/(alpha_i, alpha_i)."""
        rows = []
        for i, a in enumerate(self.simple_roots):
            norm = self.gram[i][i]
            if norm == 0:
                rows.append(tuple(self.gram[i]))
            else:
                rows.append(tuple(F(2) * x / norm for x in self.gram[i]))
        return tuple(rows)

    def rho_pairings(self) -> Vector:
        return tuple(self.inner(self.rho, a) for a in self.simple_roots)


# ---------------------------------------------------------------------------
# Per-family realizations.  Coordinates and self-pairings follow the usual
# epsilon/delta conventions; two-case sign choices keep h_dual >= 0 with the
# square length of a longest root equal to 2.
# ---------------------------------------------------------------------------


@dataclass
class _Raw:
    name: str
    signature: Vector
    simple_roots: list[Vector]
    parity: list[int]
    even_roots: set[Vector]
    odd_roots: set[Vector]
    marks: list[int]
    h_dual: Fraction
    lacety: int
    counts: tuple[int, int]
    even_simple: list[Vector]
    derived: dict[str, Vector]
    weyl_order: int
    blocks: dict[str, tuple[int, int]]
    subsystem_simples: dict[str, list[Vector]]


def _pm(vs: set[Vector]) -> set[Vector]:
    return vs | {vneg(v) for v in vs}


def _build_sl_super(spec: FamilySpec) -> _Raw:
    n, m = spec.n, spec.m
    dim = n + m
    eps = [unit_vector(dim, i) for i in range(n)]
    dlt = [unit_vector(dim, n + j) for j in range(m)]
    simple = (
        [vsub(eps[i], eps[i + 1]) for i in range(n - 1)]
        + [vsub(eps[n - 1], dlt[0])]
        + [vsub(dlt[j], dlt[j + 1]) for j in range(m - 1)]
    )
    even = {vsub(eps[i], eps[j]) for i in range(n) for j in range(n) if i != j}
    even |= {vsub(dlt[i], dlt[j]) for i in range(m) for j in range(m) if i != j}
    odd = _pm({vsub(e, d) for e in eps for d in dlt})
    derived = {"theta_1": vsub(eps[0], eps[n - 1])}
    return _Raw(
        name=f"sl({n}|{m})",
        signature=(F(1),) * n + (F(-1),) * m,
        simple_roots=simple,
        parity=[EVEN] * (n - 1) + [ODD] + [EVEN] * (m - 1),
        even_roots=even,
        odd_roots=odd,
        marks=[1] * (n + m - 1),
        h_dual=F(n - m),
        lacety=1,
        counts=(n * (n - 1) + m * (m - 1), 2 * n * m),
        even_simple=simple[: n - 1] + simple[n:],
        derived=derived,
        weyl_order=math.factorial(n) * math.factorial(m),
        blocks={"w1": (0, n), "w2": (n, n + m)},
        subsystem_simples={"w1": simple[: n - 1], "w2": simple[n:]},
    )


def _build_osp_c(spec: FamilySpec) -> _Raw:
    n = spec.n
    dim = n + 1
    eps = unit_vector(dim, 0)
    dlt = [unit_vector(dim, 1 + i) for i in range(n)]
    simple = (
        [vsub(eps, dlt[0])]
        + [vsub(dlt[i], dlt[i + 1]) for i in range(n - 1)]
        + [vscale(2, dlt[n - 1])]
    )
    even = {vsub(dlt[i], dlt[j]) for i in range(n) for j in range(n) if i != j}
    even |= _pm({vadd(dlt[i], dlt[j]) for i in range(n) for j in range(i + 1, n)})
    even |= _pm({vscale(2, d) for d in dlt})
    odd = _pm({vadd(eps, d) for d in dlt}) | _pm({vsub(eps, d) for d in dlt})
    return _Raw(
        name=f"osp(2|{2 * n})",
        signature=(F(-1, 2),) + (HALF,) * n,
        simple_roots=simple,
        parity=[ODD] + [EVEN] * n,
        even_roots=even,
        odd_roots=odd,
        marks=[1] + [2] * (n - 1) + [1],
        h_dual=F(n),
        lacety=2 if n > 1 else 1,
        counts=(2 * n * n, 4 * n),
        even_simple=simple[1:],
        derived={"theta_0": vscale(2, dlt[0])},
        weyl_order=2**n * math.factorial(n),
        blocks={"w1": (1, n + 1)},
        subsystem_simples={"w1": simple[1:]},
    )


def _sp_so_roots(dlt: list[Vector], eps: list[Vector], odd_short: bool) -> tuple[set[Vector], set[Vector]]:
    """Even/odd root lists shared by the osp(2m+1|2n) and osp(2m|2n) realizations.

    The symplectic block contributes +-delta_i +- delta_j and +-2 delta_i; the
    orthogonal block contributes +-eps_i +- eps_j, plus +-eps_i exactly when the
    odd dimension is odd (odd_short also switches +-delta_i into the odd set).
    """
    n, m = len(dlt), len(eps)
    even: set[Vector] = set()
    even |= {vsub(dlt[i], dlt[j]) for i in range(n) for j in range(n) if i != j}
    even |= _pm({vadd(dlt[i], dlt[j]) for i in range(n) for j in range(i + 1, n)})
    even |= _pm({vscale(2, d) for d in dlt})
    even |= {vsub(eps[i], eps[j]) for i in range(m) for j in range(m) if i != j}
    even |= _pm({vadd(eps[i], eps[j]) for i in range(m) for j in range(i + 1, m)})
    odd: set[Vector] = set()
    odd |= _pm({vadd(d, e) for d in dlt for e in eps})
    odd |= _pm({vsub(d, e) for d in dlt for e in eps})
    if odd_short:
        even |= _pm(set(eps))
        odd |= _pm(set(dlt))
    return even, odd


def _build_osp_b(spec: FamilySpec) -> _Raw:
    m, n = spec.m, spec.n
    dim = n + m
    dlt = [unit_vector(dim, i) for i in range(n)]
    eps = [unit_vector(dim, n + j) for j in range(m)]
    if m <= n:
        signature = (HALF,) * n + (F(-1, 2),) * m
        h_dual = F(n - m) + HALF
        lacety = 2 if n > 1 else 1
    else:
        signature = (F(-1),) * n + (F(1),) * m
        h_dual = F(2 * (m - n) - 1)
        lacety = 2
    tail = [vsub(dlt[n - 1], eps[0])] if m else [dlt[n - 1]]
    simple = (
        [vsub(dlt[i], dlt[i + 1]) for i in range(n - 1)]
        + tail
        + [vsub(eps[j], eps[j + 1]) for j in range(m - 1)]
        + ([eps[m - 1]] if m else [])
    )
    even, odd = _sp_so_roots(dlt, eps, odd_short=True)
    alpha_prime = vscale(2, dlt[n - 1])
    derived = {}
    blocks = {"w1": (0, n)}
    subsystem: dict[str, list[Vector]] = {}
    weyl_order = 2**n * math.factorial(n)
    if m:
        derived["alpha_prime_n"] = alpha_prime
        blocks["w2"] = (n, n + m)
        subsystem = {"w1_prime": simple[: n - 1], "w2": simple[n:]}
        weyl_order *= 2**m * math.factorial(m)
        name = f"osp({2 * m + 1}|{2 * n})"
    else:
        subsystem = {"w1": simple[: n - 1] + [alpha_prime]}
        name = f"osp(1|{2 * n})"
    if m >= 2:
        derived["theta_prime"] = vadd(eps[0], eps[1])
    return _Raw(
        name=name,
        signature=signature,
        simple_roots=simple,
        parity=[EVEN] * (n - 1) + [ODD] + [EVEN] * m,
        even_roots=even,
        odd_roots=odd,
        marks=[2] * (n + m),
        h_dual=h_dual,
        lacety=lacety,
        counts=(2 * n * n + 2 * m * m, 4 * n * m + 2 * n),
        even_simple=simple[: n - 1] + [alpha_prime] + simple[n:],
        derived=derived,
        weyl_order=weyl_order,
        blocks=blocks,
        subsystem_simples=subsystem,
    )


def _build_osp_d(spec: FamilySpec) -> _Raw:
    m, n = spec.m, spec.n
    dim = n + m
    dlt = [unit_vector(dim, i) for i in range(n)]
    eps = [unit_vector(dim, n + j) for j in range(m)]
    if m <= n:
        signature = (HALF,) * n + (F(-1, 2),) * m
        h_dual = F(n - m + 1)
        lacety = 2
    else:
        signature = (F(-1),) * n + (F(1),) * m
        h_dual = F(2 * (m - n - 1))
        lacety = 1
    simple = (
        [vsub(dlt[i], dlt[i + 1]) for i in range(n - 1)]
        + [vsub(dlt[n - 1], eps[0])]
        + [vsub(eps[j], eps[j + 1]) for j in range(m - 1)]
        + [vadd(eps[m - 2], eps[m - 1])]
    )
    even, odd = _sp_so_roots(dlt, eps, odd_short=False)
    alpha_prime = vscale(2, dlt[n - 1])
    derived = {"alpha_prime_n": alpha_prime}
    if m >= 3:
        derived["theta_prime"] = vadd(eps[0], eps[1])
    return _Raw(
        name=f"osp({2 * m}|{2 * n})",
        signature=signature,
        simple_roots=simple,
        parity=[EVEN] * (n - 1) + [ODD] + [EVEN] * m,
        even_roots=even,
        odd_roots=odd,
        marks=[2] * (n + m - 2) + [1, 1],
        h_dual=h_dual,
        lacety=lacety,
        counts=(2 * n * n + 2 * m * (m - 1), 4 * n * m),
        even_simple=simple[: n - 1] + [alpha_prime] + simple[n:],
        derived=derived,
        weyl_order=2**n * math.factorial(n) * 2 ** (m - 1) * math.factorial(m),
        blocks={"w1": (0, n), "w2": (n, n + m)},
        subsystem_simples={"w1_prime": simple[: n - 1], "w2": simple[n:]},
    )


def _build_f4(spec: FamilySpec) -> _Raw:
    dim = 4
    delta = unit_vector(dim, 0)
    eps = [unit_vector(dim, 1 + i) for i in range(3)]
    a1 = (HALF, -HALF, -HALF, -HALF)
    simple = [a1, eps[2], vsub(eps[1], eps[2]), vsub(eps[0], eps[1])]
    even = _pm({delta}) | _pm(set(eps))
    even |= {vsub(eps[i], eps[j]) for i in range(3) for j in range(3) if i != j}
    even |= _pm({vadd(eps[i], eps[j]) for i in range(3) for j in range(i + 1, 3)})
    odd = {
        (HALF * s0, HALF * s1, HALF * s2, HALF * s3)
        for s0, s1, s2, s3 in itertools.product((1, -1), repeat=4)
    }
    return _Raw(
        name="F(4)",
        signature=(F(-3), F(1), F(1), F(1)),
        simple_roots=simple,
        parity=[ODD, EVEN, EVEN, EVEN],
        even_roots=even,
        odd_roots=odd,
        marks=[2, 3, 2, 1],
        h_dual=F(3),
        lacety=2,
        counts=(20, 16),
        even_simple=[delta, simple[1], simple[2], simple[3]],
        derived={"theta_prime": vadd(eps[0], eps[1])},
        weyl_order=96,
        blocks={"w1": (0, 1), "w2": (1, 4)},
        subsystem_simples={"w2": simple[1:]},
    )


def _build_g3(spec: FamilySpec) -> _Raw:
    # eps_i = e_i - (e_1+e_2+e_3)/3 on unit coordinates keeps the form diagonal
    # while enforcing eps_1 + eps_2 + eps_3 = 0.
    dim = 4
    delta = unit_vector(dim, 0)
    third = F(1, 3)
    eps = [
        tuple(F(0) if k == 0 else (F(1) - third if k == 1 + i else -third) for k in range(dim))
        for i in range(3)
    ]
    simple = [vadd(delta, eps[0]), eps[1], vsub(eps[2], eps[1])]
    even = _pm({vscale(2, delta)}) | _pm(set(eps))
    even |= {vsub(eps[i], eps[j]) for i in range(3) for j in range(3) if i != j}
    odd = _pm({delta})
    odd |= _pm({vadd(delta, e) for e in eps}) | _pm({vsub(delta, e) for e in eps})
    return _Raw(
        name="G(3)",
        signature=(F(-2, 3), F(1), F(1), F(1)),
        simple_roots=simple,
        parity=[ODD, EVEN, EVEN],
        even_roots=even,
        odd_roots=odd,
        marks=[2, 4, 2],
        h_dual=F(2),
        lacety=3,
        counts=(14, 14),
        even_simple=[vscale(2, delta), simple[1], simple[2]],
        derived={"theta_prime": vsub(eps[2], eps[0])},
        weyl_order=24,
        blocks={"w1": (0, 1), "w2": (1, 4)},
        subsystem_simples={"w2": simple[1:]},
    )


def _build_simple_a(spec: FamilySpec) -> _Raw:
    n = spec.n
    dim = n + 1
    e = [unit_vector(dim, i) for i in range(dim)]
    simple = [vsub(e[i], e[i + 1]) for i in range(n)]
    even = {vsub(e[i], e[j]) for i in range(dim) for j in range(dim) if i != j}
    return _Raw(
        name=f"sl({n + 1})",
        signature=(F(1),) * dim,
        simple_roots=simple,
        parity=[EVEN] * n,
        even_roots=even,
        odd_roots=set(),
        marks=[1] * n,
        h_dual=F(n + 1),
        lacety=1,
        counts=(n * (n + 1), 0),
        even_simple=list(simple),
        derived={},
        weyl_order=math.factorial(n + 1),
        blocks={"w1": (0, dim)},
        subsystem_simples={"w1": list(simple)},
    )


def _build_simple_b2(spec: FamilySpec) -> _Raw:
    e = [unit_vector(2, 0), unit_vector(2, 1)]
    simple = [vsub(e[0], e[1]), vscale(2, e[1])]
    even = _pm({vsub(e[0], e[1]), vadd(e[0], e[1]), vscale(2, e[0]), vscale(2, e[1])})
    return _Raw(
        name="sp(4)",
        signature=(HALF, HALF),
        simple_roots=simple,
        parity=[EVEN, EVEN],
        even_roots=even,
        odd_roots=set(),
        marks=[2, 1],
        h_dual=F(3),
        lacety=2,
        counts=(8, 0),
        even_simple=list(simple),
        derived={},
        weyl_order=8,
        blocks={"w1": (0, 2)},
        subsystem_simples={"w1": list(simple)},
    )


def _build_simple_g2(spec: FamilySpec) -> _Raw:
    dim = 3
    third = F(1, 3)
    eps = [
        tuple(F(1) - third if k == i else -third for k in range(dim))
        for i in range(3)
    ]
    simple = [eps[0], vsub(eps[1], eps[0])]
    even = _pm(set(eps))
    even |= {vsub(eps[i], eps[j]) for i in range(3) for j in range(3) if i != j}
    return _Raw(
        name="g2",
        signature=(F(1),) * 3,
        simple_roots=simple,
        parity=[EVEN, EVEN],
        even_roots=even,
        odd_roots=set(),
        marks=[3, 2],
        h_dual=F(4),
        lacety=3,
        counts=(12, 0),
        even_simple=list(simple),
        derived={},
        weyl_order=12,
        blocks={"w1": (0, 3)},
        subsystem_simples={"w1": list(simple)},
    )


_BUILDERS = {
    Family.SL_SUPER: _build_sl_super,
    Family.OSP_C: _build_osp_c,
    Family.OSP_B: _build_osp_b,
    Family.OSP_D: _build_osp_d,
    Family.F4: _build_f4,
    Family.G3: _build_g3,
    Family.SIMPLE_A: _build_simple_a,
    Family.SIMPLE_B2: _build_simple_b2,
    Family.SIMPLE_G2: _build_simple_g2,
}


def build_root_system(spec: FamilySpec) -> RootSystem:
    """Construct and fully verify the root data for one family instance."""
    validate_spec(spec)
    raw = _BUILDERS[spec.family](spec)
    dim = len(raw.signature)
    rank = len(raw.simple_roots)

    def inner(v: Vector, w: Vector) -> Fraction:
        return sum((s * a * b for s, a, b in zip(raw.signature, v, w)), F(0))

    gram = tuple(tuple(inner(a, b) for b in raw.simple_roots) for a in raw.simple_roots)
    for i in range(rank):
        for j in range(rank):
            _check(gram[i][j] == gram[j][i], "gram matrix must be symmetric")
    try:
        gram_inv = invert(gram)
    except RuntimeError as exc:
        raise RuntimeError(
            f"root-data invariant violated: degenerate form on the simple roots of {raw.name}"
        ) from exc

    for i in range(rank):
        if gram[i][i] == 0:
            _check(raw.parity[i] == ODD, f"{raw.name}: isotropic simple root {i + 1} must be odd")

    roots = raw.even_roots | raw.odd_roots
    _check(not (raw.even_roots & raw.odd_roots), f"{raw.name}: even/odd root sets overlap")
    _check(len(raw.even_roots) == raw.counts[0], f"{raw.name}: even root count")
    _check(len(raw.odd_roots) == raw.counts[1], f"{raw.name}: odd root count")

    coords: dict[Vector, Vector] = {}
    positive: set[Vector] = set()
    allow_half = spec.family is Family.F4
    for v in roots:
        pair = [inner(v, a) for a in raw.simple_roots]
        c = mat_vec(gram_inv, pair)
        recon = zero_vector(dim)
        for cj, a in zip(c, raw.simple_roots):
            recon = vadd(recon, vscale(cj, a))
        _check(recon == v, f"{raw.name}: root outside the span of the simple roots")
        for cj in c:
            if allow_half and v in raw.odd_roots:
                _check((2 * cj).denominator == 1, f"{raw.name}: odd-root coefficient not in (1/2)Z")
            else:
                _check(cj.denominator == 1, f"{raw.name}: root coefficient not an integer")
        coords[v] = c
        nonneg = all(cj >= 0 for cj in c)
        nonpos = all(cj <= 0 for cj in c)
        _check(nonneg != nonpos, f"{raw.name}: root with mixed-sign coefficients")
        if nonneg:
            positive.add(v)

    _check({vneg(v) for v in positive} == roots - positive, f"{raw.name}: Delta != Delta+ U -Delta+")
    for i, a in enumerate(raw.simple_roots):
        _check(a in positive, f"{raw.name}: simple root {i + 1} not positive")
        expected_parity = ODD if a in raw.odd_roots else EVEN
        _check(raw.parity[i] == expected_parity, f"{raw.name}: declared parity of simple root {i + 1}")

    theta = zero_vector(dim)
    for mk, a in zip(raw.marks, raw.simple_roots):
        _check(mk >= 1, f"{raw.name}: mark < 1")
        theta = vadd(theta, vscale(mk, a))
    _check(theta in positive, f"{raw.name}: theta not a positive root")
    for a in raw.simple_roots:
        _check(vadd(theta, a) not in roots, f"{raw.name}: theta + simple root is still a root")

    rho = zero_vector(dim)
    for v in positive:
        half = vscale(HALF, v)
        rho = vadd(rho, half) if v in raw.even_roots else vsub(rho, half)
    for i, a in enumerate(raw.simple_roots):
        _check(inner(rho, a) == HALF * gram[i][i], f"{raw.name}: Weyl-vector pairing at node {i + 1}")

    h_dual = inner(rho, theta) + HALF * inner(theta, theta)
    _check(h_dual == raw.h_dual, f"{raw.name}: dual Coxeter number ({h_dual} != {raw.h_dual})")

    sharp = [inner(v, v) for v in raw.even_roots if inner(v, v) > 0]
    _check(bool(sharp), f"{raw.name}: no even roots of positive square length")
    ratio = max(sharp) / min(sharp)
    _check(ratio.denominator == 1 and int(ratio) == raw.lacety, f"{raw.name}: lacety ({ratio} != {raw.lacety})")

    even_pos = sorted(v for v in positive if v in raw.even_roots)
    indecomposable = {
        v for v in even_pos
        if not any(vsub(v, w) in raw.even_roots and vsub(v, w) in positive for w in even_pos if w != v)
    }
    _check(indecomposable == set(raw.even_simple), f"{raw.name}: even simple system mismatch")

    for v in raw.derived.values():
        _check(v in roots, f"{raw.name}: derived root not in Delta")

    rs = RootSystem(
        spec=spec,
        name=raw.name,
        dim=dim,
        signature=raw.signature,
        simple_roots=tuple(raw.simple_roots),
        parity=tuple(raw.parity),
        gram=gram,
        even_roots=frozenset(raw.even_roots),
        odd_roots=frozenset(raw.odd_roots),
        positive_roots=frozenset(positive),
        theta=theta,
        marks=tuple(raw.marks),
        rho=rho,
        h_dual=h_dual,
        lacety=raw.lacety,
        even_simple=tuple(raw.even_simple),
        derived=dict(raw.derived),
        weyl_order=raw.weyl_order,
        blocks=dict(raw.blocks),
        subsystem_simples={k: tuple(v) for k, v in raw.subsystem_simples.items()},
        _gram_inv=gram_inv,
        _coords=coords,
    )

    # The root sets come from fixed tables; closure under the even simple
    # reflections is checked here rather than assumed.
    for g in rs.even_simple:
        norm = rs.inner(g, g)
        for v in roots:
            img = vsub(v, vscale(F(2) * rs.inner(v, g) / norm, g))
            _check(img in roots, f"{raw.name}: reflection image leaves the root set")
            same = (img in raw.even_roots) == (v in raw.even_roots)
            _check(same, f"{raw.name}: reflection changes root parity")
    return rs
