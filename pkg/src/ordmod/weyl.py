"""Finite even Weyl groups and the affine translation action on weights.

Group elements are exact rational orthogonal matrices acting on the ambient
coordinates of a :class:`~ordmod.rootdata.RootSystem`; the group is the
breadth-first closure of the reflections in the even simple system, so words
are shortest witnesses with respect to that generator order.

Affine weights are stored as (level, finite part, delta coefficient); the
group acts on the finite part only and fixes the level and delta directions.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .linalg import Matrix, Vector, identity, mat_mul, mat_vec, vadd, vscale, vsub, zero_vector
from .rootdata import RootSystem

F = Fraction


def reflect(rs: RootSystem, alpha: Vector, v: Vector) -> Vector:
    """Reflect v in the hyperplane orthogonal to the non-isotropic root alpha."""
    norm = rs.inner(alpha, alpha)
    if norm == 0:
        raise ValueError("reflection undefined for isotropic root")
    return vsub(v, vscale(F(2) * rs.inner(v, alpha) / norm, alpha))


def reflection_matrix(rs: RootSystem, alpha: Vector) -> Matrix:
    cols = [reflect(rs, alpha, e) for e in identity(rs.dim)]
    return tuple(tuple(cols[j][i] for j in range(rs.dim)) for i in range(rs.dim))


@dataclass(frozen=True)
class WeylElement:
    """An orthogonal transformation of the root space with a generator word."""

    matrix: Matrix
    word: tuple[int, ...] = field(compare=False)

    def apply(self, v: Vector) -> Vector:
        return mat_vec(self.matrix, v)

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return self.matrix == identity(n)

    def inverse(self, rs: RootSystem) -> "WeylElement":
        # Orthogonality for the diagonal form S means M^-1 = S^-1 M^T S.
        s = rs.signature
        n = rs.dim
        inv = tuple(
            tuple(s[j] * self.matrix[j][i] / s[i] for j in range(n)) for i in range(n)
        )
        return WeylElement(inv, tuple(reversed(self.word)))


@dataclass(frozen=True)
class WeylGroup:
    elements: tuple[WeylElement, ...]
    generators: tuple[WeylElement, ...]
    index: dict[Matrix, int] = field(compare=False, hash=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_element(self) -> WeylElement:
        return self.elements[0]

    def index_of(self, w: WeylElement) -> int:
        return self.index[w.matrix]

    def __contains__(self, w: WeylElement) -> bool:
        return w.matrix in self.index


def _preserves_form(rs: RootSystem, m: Matrix) -> bool:
    n = rs.dim
    s = rs.signature
    for i in range(n):
        for j in range(i, n):
            val = sum(m[k][i] * s[k] * m[k][j] for k in range(n))
            if val != (s[i] if i == j else 0):
                return False
    return True


def generate_weyl(rs: RootSystem, cap: int = 10**6) -> WeylGroup:
    """Breadth-first closure of the reflections in the even simple system."""
    gens = tuple(
        WeylElement(reflection_matrix(rs, g), (i,)) for i, g in enumerate(rs.even_simple)
    )
    ident = WeylElement(identity(rs.dim), ())
    seen: dict[Matrix, WeylElement] = {ident.matrix: ident}
    order: list[WeylElement] = [ident]
    frontier = [ident]
    while frontier:
        nxt: list[WeylElement] = []
        for w in frontier:
            for i, g in enumerate(gens):
                prod = WeylElement(mat_mul(w.matrix, g.matrix), w.word + (i,))
                if prod.matrix not in seen:
                    if len(seen) >= cap:
                        raise RuntimeError(f"Weyl closure exceeded the element cap {cap}")
                    seen[prod.matrix] = prod
                    order.append(prod)
                    nxt.append(prod)
        frontier = nxt
    for w in order:
        if not _preserves_form(rs, w.matrix):
            raise RuntimeError("Weyl element does not preserve the bilinear form")
    if len(order) != rs.weyl_order:
        raise RuntimeError(
            f"Weyl group of {rs.name} has order {len(order)}, expected {rs.weyl_order}"
        )
    return WeylGroup(
        elements=tuple(order),
        generators=gens,
        index={w.matrix: i for i, w in enumerate(order)},
    )


@dataclass(frozen=True)
class AffineWeight:
    """A weight written as (value on the central element, finite part, delta coefficient)."""

    level: Fraction
    finite: Vector
    delta_coeff: Fraction

    def __post_init__(self):
        object.__setattr__(self, "level", F(self.level))
        object.__setattr__(self, "finite", tuple(F(c) for c in self.finite))
        object.__setattr__(self, "delta_coeff", F(self.delta_coeff))

    def pairing(self, rs: RootSystem, gamma: Vector) -> Fraction:
        """Pairing with a finite root depends on the finite part alone."""
        return rs.inner(self.finite, gamma)

    def canonical(self) -> "AffineWeight":
        """Drop the delta coefficient; weights are classified up to multiples of delta."""
        return replace(self, delta_coeff=F(0))


def level_weight(rs: RootSystem, level) -> AffineWeight:
    """The multiple `level * Lambda_0` as an affine weight."""
    return AffineWeight(F(level), zero_vector(rs.dim), F(0))


def rho_hat(rs: RootSystem) -> AffineWeight:
    return AffineWeight(rs.h_dual, rs.rho, F(0))


def translate(rs: RootSystem, beta: Vector, w: AffineWeight) -> AffineWeight:
    """t_beta(w) = w + w(k) beta - ((w, beta) + w(k)(beta, beta)/2) delta."""
    shift = rs.inner(w.finite, beta) + w.level * rs.inner(beta, beta) / 2
    return AffineWeight(w.level, vadd(w.finite, vscale(w.level, beta)), w.delta_coeff - shift)


def weyl_act(y: WeylElement, w: AffineWeight) -> AffineWeight:
    """y fixes Lambda_0 and delta, so it acts on the finite part only."""
    return AffineWeight(w.level, y.apply(w.finite), w.delta_coeff)


def shifted_translate_act(rs: RootSystem, y: WeylElement, beta: Vector, w: AffineWeight) -> AffineWeight:
    """The dot action of t_beta y: shift by the affine Weyl vector, act, unshift."""
    rh = rho_hat(rs)
    shifted = AffineWeight(w.level + rh.level, vadd(w.finite, rh.finite), w.delta_coeff)
    moved = translate(rs, beta, weyl_act(y, shifted))
    return AffineWeight(moved.level - rh.level, vsub(moved.finite, rh.finite), moved.delta_coeff)


def shifted_reflect(rs: RootSystem, alpha: Vector, w: AffineWeight) -> AffineWeight:
    """Dot action of the reflection in a non-isotropic even root."""
    rh = rho_hat(rs)
    shifted_finite = vadd(w.finite, rh.finite)
    return AffineWeight(w.level, vsub(reflect(rs, alpha, shifted_finite), rh.finite), w.delta_coeff)
