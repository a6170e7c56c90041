"""Floating-point coadjoint flows that cross-check the exact engine.

Points on an orbit are produced by composing one-parameter coadjoint flows
ell -> ell o exp(-t ad_x) in double precision (the same sign convention as
the exact module). Samples are deterministic: each point draws its own
generator from the pair (seed, point index), so serial and parallel sweeps
agree bit for bit.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import Covector, LieAlgebra
from .errors import InputError
from .exact import Subspace

Word = tuple[tuple[int, float], ...]


def matrix_exp(m: np.ndarray) -> np.ndarray:
    """exp(m) by scaling and squaring with a truncated series.

    The series is summed until terms fall below 1e-20 relative, which keeps
    the self-check identities of this module below 1e-12 for the matrix
    sizes supported here (n <= 64).
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError("matrix_exp expects a square matrix")
    if m.shape[0] > 64:
        raise InputError("matrix_exp supports dimension at most 64")
    if not np.all(np.isfinite(m)):
        raise InputError("matrix_exp requires finite entries")
    n = m.shape[0]
    norm = np.linalg.norm(m, np.inf)
    squarings = 0
    if norm > 0.5:
        squarings = int(np.ceil(np.log2(norm / 0.5)))
        m = m / (2.0**squarings)
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 40):
        term = term @ m / k
        result = result + term
        if np.max(np.abs(term)) < 1e-20 * max(1.0, np.max(np.abs(result))):
            break
    for _ in range(squarings):
        result = result @ result
    return result


def ad_matrices_float(alg: LieAlgebra) -> list[np.ndarray]:
    """Float ad matrices of the basis elements."""
    out = []
    for i in range(alg.dim):
        out.append(np.array([[float(x) for x in row] for row in alg.basis_ad(i)]))
    return out


def coadjoint_flow(
    alg: LieAlgebra, ell: Covector | Sequence[float], x: Sequence[float], t: float
) -> np.ndarray:
    """Coefficients of ell o exp(-t ad_x): transpose(exp(-t M)) applied to ell."""
    lam = np.asarray(ell.floats() if isinstance(ell, Covector) else ell, dtype=float)
    mats = ad_matrices_float(alg)
    m = sum(float(c) * mats[i] for i, c in enumerate(x))
    return matrix_exp(-t * m).T @ lam


@dataclass(frozen=True)
class OrbitSample:
    base: tuple[float, ...]
    points: tuple[tuple[float, ...], ...]
    words: tuple[Word, ...]  # each entry: (basis index, flow time)
    seed: int
    tolerance: float


def _apply_word(mats: Sequence[np.ndarray], base: np.ndarray, word: Word) -> np.ndarray:
    point = base
    for idx, step in word:
        point = matrix_exp(-step * mats[idx]).T @ point
    return point


def replay_point(alg: LieAlgebra, base: Sequence[float], word: Word) -> np.ndarray:
    """Re-apply a recorded word to the base point (bit-identical to sampling)."""
    return _apply_word(ad_matrices_float(alg), np.asarray(base, dtype=float), word)


def orbit_sample(
    alg: LieAlgebra,
    ell: Covector,
    n_points: int = 200,
    word_length: int = 8,
    step_scale: float = 1.0,
    seed: int = 0,
    tolerance: float = 1e-9,
) -> OrbitSample:
    """Sample the orbit of ell with random products of one-parameter flows."""
    if n_points < 1:
        raise InputError("n_points must be at least 1")
    mats = ad_matrices_float(alg)
    base = np.asarray(ell.floats())
    points = []
    words = []
    for index in range(n_points):
        rng = np.random.default_rng((seed, index))
        word = tuple(
            (int(rng.integers(0, alg.dim)), float(rng.uniform(-step_scale, step_scale)))
            for _ in range(word_length)
        )
        points.append(tuple(float(v) for v in _apply_word(mats, base, word)))
        words.append(word)
    return OrbitSample(tuple(float(v) for v in base), tuple(points), tuple(words), seed, tolerance)


def affine_membership(
    point: Sequence[float], ell: Covector | Sequence[float], direction: Subspace, tol: float
) -> bool:
    """Whether point - ell projects onto the direction subspace up to tol (sup norm)."""
    base = np.asarray(ell.floats() if isinstance(ell, Covector) else ell, dtype=float)
    resid = np.asarray(point, dtype=float) - base
    for b, p in zip(direction.basis_floats(), direction.pivots):
        c = resid[p]
        if c != 0.0:
            resid = resid - c * np.asarray(b)
    return bool(np.max(np.abs(resid), initial=0.0) < tol)


def tangent_rank(alg: LieAlgebra, point: Sequence[float], tol: float = 1e-8) -> int:
    """Numeric rank of the skew form at a float point: singular values > tol * largest."""
    lam = np.asarray(point, dtype=float)
    rows = np.array([m.T @ lam for m in ad_matrices_float(alg)])
    # row i is y -> point([e_i, y])
    if not np.any(rows):
        return 0
    sv = np.linalg.svd(rows, compute_uv=False)
    return int(np.sum(sv > tol * sv[0]))


@dataclass(frozen=True)
class Term:
    """c * prod(var^power) * exp(sum(rate * var)) over named variables."""

    coeff: Fraction
    powers: tuple[tuple[str, int], ...] = ()
    exponents: tuple[tuple[str, Fraction], ...] = ()

    def evaluate(self, values: Mapping[str, float]) -> float:
        out = float(self.coeff)
        for name, p in self.powers:
            out *= values[name] ** p
        arg = 0.0
        for name, r in self.exponents:
            arg += float(r) * values[name]
        if arg:
            out *= float(np.exp(arg))
        return out


def evaluate_terms(terms: Sequence[Term], values: Mapping[str, float]) -> float:
    return sum(t.evaluate(values) for t in terms)


@dataclass(frozen=True)
class FixtureInvariant:
    """A rational function of the dual coordinates, constant or signed on one orbit."""

    name: str
    numerator: tuple[Term, ...]
    denominator: tuple[Term, ...]
    expected: Fraction | None = None  # value the fraction must take on the orbit
    sign: int | None = None  # +1 / -1: required strict sign of the fraction
    functional: str | None = None  # name of the base functional whose orbit this constrains

    def evaluate(self, values: Mapping[str, float]) -> tuple[float, float]:
        return evaluate_terms(self.numerator, values), evaluate_terms(self.denominator, values)


@dataclass(frozen=True)
class InvariantResult:
    name: str
    max_deviation: float  # |value - expected| for value invariants, 0.0 for sign checks
    worst_value: float
    skipped_points: int
    passed: bool


@dataclass(frozen=True)
class InvariantReport:
    results: tuple[InvariantResult, ...]
    warnings: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.passed


def fixture_invariant_check(
    sample: OrbitSample,
    invariants: Sequence[FixtureInvariant],
    tol: float,
    dual_names: Sequence[str],
) -> InvariantReport:
    """Evaluate orbit invariants on every sampled point.

    Points where a denominator falls below 10 * tol are skipped with a
    warning rather than contributing a spurious deviation.
    """
    warnings: list[str] = []
    results = []
    for inv in invariants:
        max_dev = 0.0
        worst = float("inf") if inv.sign is not None else 0.0
        skipped = 0
        ok = True
        for p_index, point in enumerate(sample.points):
            values = dict(zip(dual_names, point))
            num, den = inv.evaluate(values)
            if abs(den) < 10.0 * tol:
                skipped += 1
                warnings.append(
                    f"{inv.name}: denominator {den:.3e} below guard at point {p_index}, skipped"
                )
                continue
            value = num / den
            if inv.sign is not None:
                signed = value * inv.sign
                worst = min(worst, signed)
                if signed <= 0.0:
                    ok = False
            else:
                dev = abs(value - float(inv.expected))
                max_dev = max(max_dev, dev)
                if dev >= tol:
                    ok = False
        if inv.sign is not None and worst == float("inf"):
            worst = 0.0
        results.append(InvariantResult(inv.name, max_dev, worst, skipped, ok))
    return InvariantReport(tuple(results), tuple(warnings))


@dataclass(frozen=True)
class Parametrization:
    """Closed-form orbit coordinates as functions of named real parameters."""

    name: str
    params: tuple[str, ...]
    coords: tuple[tuple[str, tuple[Term, ...]], ...]  # (dual name, terms)

    def evaluate(self, dual_names: Sequence[str], values: Mapping[str, float]) -> np.ndarray:
        by_name = dict(self.coords)
        out = []
        for name in dual_names:
            terms = by_name.get(name, ())
            out.append(evaluate_terms(terms, values))
        return np.asarray(out)


@dataclass(frozen=True)
class MidpointCheck:
    passed: bool
    midpoint_error: float
    invariant_deviations: tuple[tuple[str, float], ...]

    def __bool__(self) -> bool:
        return self.passed


def midpoint_witness_check(
    left: Parametrization,
    right: Parametrization,
    invariants: Sequence[FixtureInvariant],
    dual_names: Sequence[str],
    p: float,
    a: float,
    target: Sequence[float],
    tol: float,
    invariant_tol: float | None = None,
) -> MidpointCheck:
    """Whether the average of the two parametrized orbit points hits the target.

    Both endpoints are additionally required to satisfy the value invariants,
    certifying that they lie on the orbit the invariants describe.
    """
    inv_tol = tol if invariant_tol is None else invariant_tol
    values = {"p": float(p), "a": float(a)}
    l1 = left.evaluate(dual_names, values)
    l2 = right.evaluate(dual_names, values)
    mid = 0.5 * (l1 + l2)
    err = float(np.max(np.abs(mid - np.asarray(target, dtype=float))))
    ok = err < tol
    deviations = []
    for inv in invariants:
        if inv.expected is None:
            continue
        for tag, pt in (("left", l1), ("right", l2)):
            coords = dict(zip(dual_names, pt))
            num, den = inv.evaluate(coords)
            dev = abs(num / den - float(inv.expected))
            deviations.append((f"{inv.name}/{tag}", dev))
            if dev >= inv_tol:
                ok = False
    return MidpointCheck(ok, err, tuple(deviations))


def write_samples_csv(sample: OrbitSample, dual_names: Sequence[str], path: str) -> None:
    """One row per sampled point; header is the dual coordinate names."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(dual_names)
        for point in sample.points:
            writer.writerow([repr(v) for v in point])
