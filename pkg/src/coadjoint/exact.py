"""Exact linear algebra over the rationals.

Vectors and matrices are tuples of ``fractions.Fraction``; every operation
here is division-exact and deterministic, so rank and kernel decisions are
stable under permutation and scaling of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]  # tuple of rows

ZERO = Fraction(0)
ONE = Fraction(1)


def vector(entries: Iterable) -> Vector:
    return tuple(Fraction(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zeros(n: int, m: int) -> Matrix:
    return tuple(zero_vector(m) for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u: Vector, c: Fraction) -> Vector:
    return tuple(a * c for a in u)


def vec_dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero_vector(u: Vector) -> bool:
    return all(a == 0 for a in u)


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(r, s) for r, s in zip(a, b))


def mat_scale(a: Matrix, c: Fraction) -> Matrix:
    return tuple(vec_scale(r, c) for r in a)


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), ZERO)


def is_zero_matrix(m: Matrix) -> bool:
    return all(is_zero_vector(r) for r in m)


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[0])


def kernel(m: Matrix) -> list[Vector]:
    """Basis of the right kernel {v : m v = 0}."""
    if not m:
        return []
    ncols = len(m[0])
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix; raises InputError if singular."""
    n = len(m)
    work = [list(row) + list(unit_vector(n, i)) for i, row in enumerate(m)]
    reduced, pivots = rref(work)
    if pivots != list(range(n)):
        raise InputError("matrix is singular")
    return tuple(tuple(reduced[i][n:]) for i in range(n))


def exp_nilpotent(m: Matrix, t: Fraction = ONE) -> Matrix:
    """Exact exp(t m) for nilpotent m; raises InputError otherwise."""
    n = len(m)
    t = Fraction(t)
    result = identity(n)
    term = identity(n)
    for k in range(1, n + 1):
        term = mat_scale(mat_mul(m, term), t / k)
        if is_zero_matrix(term):
            return result
        result = mat_add(result, term)
    if not is_zero_matrix(mat_mul(m, term)):
        raise InputError("matrix is not nilpotent")
    return result


def to_float_rows(m: Matrix) -> list[list[float]]:
    return [[float(x) for x in row] for row in m]


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held in reduced column-echelon canonical form.

    ``basis`` stores the canonical generators as vectors (the columns of the
    n x k canonical matrix). The form is unique per subspace: two subspaces
    are equal iff their dataclass fields compare equal.
    """

    ambient_dim: int
    basis: Matrix

    @staticmethod
    def span(ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> "Subspace":
        vs = [vector(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise InputError(f"vector length {len(v)} != ambient dim {ambient_dim}")
        rows, _ = rref(vs)
        return Subspace(ambient_dim, tuple(tuple(r) for r in rows))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(b) if x != 0) for b in self.basis)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Residual of v after eliminating the pivot coordinates; linear in v."""
        w = list(Fraction(x) for x in v)
        for b, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                w = [x - c * y for x, y in zip(w, b)]
        return tuple(w)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return is_zero_vector(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ambient_dim, list(self.basis) + list(other.basis))

    def basis_floats(self) -> list[list[float]]:
        return [[float(x) for x in b] for b in self.basis]
