"""Lie algebras over the rationals: bracket tables, series, quotients, bases.

A Lie algebra is given by its dimension, basis labels and a sparse table of
structure constants [e_i, e_j] = sum_k c_ijk e_k stored for i < j only;
antisymmetry supplies the other half. All classification decisions run in
exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError, InvalidAlgebraError, NotAnIdealError
from . import exact
from .exact import Matrix, Subspace, Vector

StructureTable = Mapping[tuple[int, int, int], Fraction]


@dataclass(frozen=True)
class Covector:
    """Element of the dual space, as coefficients over the dual basis."""

    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, "coeffs", exact.vector(self.coeffs))

    @staticmethod
    def zero(n: int) -> "Covector":
        return Covector(exact.zero_vector(n))

    @staticmethod
    def dual(n: int, i: int) -> "Covector":
        return Covector(exact.unit_vector(n, i))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def apply(self, v: Sequence[Fraction]) -> Fraction:
        return exact.vec_dot(self.coeffs, exact.vector(v))

    def is_zero(self) -> bool:
        return exact.is_zero_vector(self.coeffs)

    def __add__(self, other: "Covector") -> "Covector":
        return Covector(exact.vec_add(self.coeffs, other.coeffs))

    def __mul__(self, c) -> "Covector":
        return Covector(exact.vec_scale(self.coeffs, Fraction(c)))

    __rmul__ = __mul__

    def floats(self) -> list[float]:
        return [float(x) for x in self.coeffs]


class LieAlgebra:
    """Immutable bracket table; treat instances as frozen values."""

    def __init__(self, dim: int, basis_names: Sequence[str], structure: StructureTable):
        if dim < 1:
            raise InputError("algebras of dimension 0 are rejected")
        names = tuple(basis_names)
        if len(names) != dim:
            raise InputError(f"{len(names)} basis names for dimension {dim}")
        if len(set(names)) != dim:
            raise InputError("basis names must be distinct")
        table: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), c in structure.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputError(f"structure index ({i},{j},{k}) out of range for dim {dim}")
            if i >= j:
                raise InputError(f"structure constants must be stored with i < j, got ({i},{j})")
            c = Fraction(c)
            if c != 0:
                table[(i, j, k)] = c
        self.dim = dim
        self.basis_names = names
        self.structure = table
        pairs: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), c in table.items():
            pairs.setdefault((i, j), {})[k] = c
        self.pairs = pairs  # (i, j) with i < j -> {k: c_ijk}, zero entries dropped
        self._basis_ad: list[Matrix | None] = [None] * dim

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.basis_names == other.basis_names
            and self.structure == other.structure
        )

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"

    def name_index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise InputError(f"unknown basis name {name!r}") from None

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] in basis coordinates."""
        if i == j:
            return exact.zero_vector(self.dim)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        out = [Fraction(0)] * self.dim
        for k, c in self.pairs.get((i, j), {}).items():
            out[k] = sign * c
        return tuple(out)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        x = exact.vector(x)
        y = exact.vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("bracket arguments must match the algebra dimension")
        out = [Fraction(0)] * self.dim
        for (i, j), comps in self.pairs.items():
            coef = x[i] * y[j] - x[j] * y[i]
            if coef:
                for k, c in comps.items():
                    out[k] += coef * c
        return tuple(out)

    def basis_ad(self, i: int) -> Matrix:
        cached = self._basis_ad[i]
        if cached is None:
            cols = [self.bracket_basis(i, j) for j in range(self.dim)]
            cached = exact.transpose(exact.matrix(cols))
            self._basis_ad[i] = cached
        return cached


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    residual: Vector


def validate_algebra(alg: LieAlgebra) -> list[JacobiViolation]:
    """All index triples where the Jacobi identity fails, with exact residuals."""
    n = alg.dim
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (exact.unit_vector(n, t) for t in (i, j, k))
                r = exact.vec_add(
                    exact.vec_add(
                        alg.bracket(ei, alg.bracket(ej, ek)),
                        alg.bracket(ej, alg.bracket(ek, ei)),
                    ),
                    alg.bracket(ek, alg.bracket(ei, ej)),
                )
                if not exact.is_zero_vector(r):
                    violations.append(JacobiViolation((i, j, k), r))
    return violations


def require_valid(alg: LieAlgebra) -> None:
    violations = validate_algebra(alg)
    if violations:
        raise InvalidAlgebraError(violations)


def ad_matrix(alg: LieAlgebra, x: Sequence[Fraction]) -> Matrix:
    """Matrix of ad_x, i.e. column j is [x, e_j]; linear in x."""
    x = exact.vector(x)
    if len(x) != alg.dim:
        raise InputError("coefficient vector must match the algebra dimension")
    cols = [alg.bracket(x, exact.unit_vector(alg.dim, j)) for j in range(alg.dim)]
    return exact.transpose(exact.matrix(cols))


@dataclass(frozen=True)
class UnimodularityResult:
    unimodular: bool
    witness_index: int | None = None
    witness_name: str | None = None
    witness_trace: Fraction | None = None

    def __bool__(self) -> bool:
        return self.unimodular


def is_unimodular(alg: LieAlgebra) -> UnimodularityResult:
    """Whether trace(ad_x) vanishes for all x; checking basis elements suffices
    since x -> trace(ad_x) is linear. On failure the first bad basis element
    and its trace are returned as a witness."""
    for i in range(alg.dim):
        t = exact.trace(alg.basis_ad(i))
        if t != 0:
            return UnimodularityResult(False, i, alg.basis_names[i], t)
    return UnimodularityResult(True)


def _bracket_span(alg: LieAlgebra, v: Subspace, w: Subspace) -> Subspace:
    vecs = [alg.bracket(a, b) for a in v.basis for b in w.basis]
    return Subspace.span(alg.dim, vecs)


def _series(alg: LieAlgebra, step) -> list[Subspace]:
    terms = [Subspace.full(alg.dim)]
    while True:
        nxt = step(terms[-1])
        if nxt.dim == terms[-1].dim:
            return terms
        terms.append(nxt)


def derived_series(alg: LieAlgebra) -> list[Subspace]:
    """g = g^(0) > g^(1) > ... with g^(k+1) = [g^(k), g^(k)], until it stabilizes."""
    return _series(alg, lambda v: _bracket_span(alg, v, v))


def lower_central_series(alg: LieAlgebra) -> list[Subspace]:
    """g = g_0 > g_1 > ... with g_(k+1) = [g, g_k], until it stabilizes."""
    full = Subspace.full(alg.dim)
    return _series(alg, lambda v: _bracket_span(alg, full, v))


def is_solvable(alg: LieAlgebra) -> bool:
    return derived_series(alg)[-1].dim == 0


def is_nilpotent(alg: LieAlgebra) -> bool:
    return lower_central_series(alg)[-1].dim == 0


def center(alg: LieAlgebra) -> Subspace:
    """{x : [x, e_i] = 0 for all i}, as the kernel of the stacked ad system."""
    rows: list[Vector] = []
    for i in range(alg.dim):
        m = alg.basis_ad(i)
        # [x, e_i] = -ad_{e_i} x, so stack the basis ad matrices
        rows.extend(m)
    return Subspace.span(alg.dim, exact.kernel(exact.matrix(rows)))


@dataclass(frozen=True)
class QuotientResult:
    algebra: LieAlgebra
    complement_indices: tuple[int, ...]
    projection: Matrix  # (n-k) x n, sends old coordinates to quotient coordinates

    def project(self, v: Sequence[Fraction]) -> Vector:
        return exact.mat_vec(self.projection, exact.vector(v))


def quotient_algebra(alg: LieAlgebra, ideal: Subspace) -> QuotientResult:
    """Quotient by a verified ideal, on the complement of the ideal's pivot rows."""
    from .orbits import is_ideal  # deferred: orbits depends on this module

    check = is_ideal(alg, ideal)
    if not check.ok:
        raise NotAnIdealError(check.witness)
    if ideal.dim == alg.dim:
        raise InputError("quotient by the full algebra has dimension 0, which is rejected")
    pivot_set = set(ideal.pivots)
    complement = tuple(i for i in range(alg.dim) if i not in pivot_set)
    m = len(complement)
    # residual after reducing mod the ideal is supported on the complement rows
    reduced = [ideal.reduce(exact.unit_vector(alg.dim, j)) for j in range(alg.dim)]
    projection = exact.matrix([[reduced[j][c] for j in range(alg.dim)] for c in complement])
    structure: dict[tuple[int, int, int], Fraction] = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = exact.mat_vec(projection, alg.bracket_basis(complement[a], complement[b]))
            for k, c in enumerate(w):
                if c != 0:
                    structure[(a, b, k)] = c
    names = tuple(alg.basis_names[i] for i in complement)
    return QuotientResult(LieAlgebra(m, names, structure), complement, projection)


def semidirect_from_derivation(
    d: Sequence[Sequence[Fraction]], names: Sequence[str] | None = None
) -> LieAlgebra:
    """Abelian V extended by a generator T acting as [T, v] = D v.

    Valid for arbitrary D (Jacobi is automatic on an abelian V); the result
    is unimodular exactly when trace(D) = 0.
    """
    dm = exact.matrix(d)
    n = len(dm)
    if any(len(r) != n for r in dm):
        raise InputError("derivation matrix must be square")
    if names is None:
        names = tuple(f"V{i + 1}" for i in range(n)) + ("T",)
    structure: dict[tuple[int, int, int], Fraction] = {}
    for j in range(n):
        col = tuple(dm[k][j] for k in range(n))
        for k, c in enumerate(col):
            if c != 0:
                structure[(j, n, k)] = -c  # [e_j, T] = -D e_j
    return LieAlgebra(n + 1, names, structure)


def change_of_basis(alg: LieAlgebra, t: Matrix) -> LieAlgebra:
    """Structure constants in the basis whose vectors are the columns of t."""
    t = exact.matrix(t)
    t_inv = exact.inverse(t)  # raises InputError when singular
    n = alg.dim
    cols = exact.transpose(t)
    structure: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = exact.mat_vec(t_inv, alg.bracket(cols[i], cols[j]))
            for k, c in enumerate(w):
                if c != 0:
                    structure[(i, j, k)] = c
    return LieAlgebra(n, alg.basis_names, structure)


def transform_covector(ell: Covector, t: Matrix) -> Covector:
    """Coefficients of the same functional over the new basis (columns of t)."""
    return Covector(exact.mat_vec(exact.transpose(exact.matrix(t)), ell.coeffs))


def transform_subspace(v: Subspace, t: Matrix) -> Subspace:
    """The same subspace expressed in new-basis coordinates (columns of t)."""
    t_inv = exact.inverse(exact.matrix(t))
    return Subspace.span(v.ambient_dim, [exact.mat_vec(t_inv, b) for b in v.basis])
