"""Tiny exact linear algebra over `fractions.Fraction`.

Vectors and matrices are immutable tuples so they can live inside frozen
dataclasses and sets.  Every system in this package has rank at most seven,
so plain Gaussian elimination with exact pivots is all we need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vector(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def unit_vector(dim: int, k: int) -> Vector:
    return tuple(Fraction(1 if i == k else 0) for i in range(dim))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vscale(c, u: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(len(b))) for j in cols) for row in a
    )


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def _eliminate(aug: list[list[Fraction]], n: int) -> None:
    """Reduce the left n columns of an augmented matrix to the identity."""
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise RuntimeError("singular matrix")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]


def solve(mat: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector:
    """Solve the square system mat @ x = rhs; raises RuntimeError if singular."""
    n = len(rhs)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    _eliminate(aug, n)
    return tuple(aug[i][n] for i in range(n))


def invert(mat: Sequence[Sequence[Fraction]]) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises RuntimeError if singular."""
    n = len(mat)
    aug = [
        [Fraction(mat[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    _eliminate(aug, n)
    return tuple(tuple(aug[i][n:]) for i in range(n))
