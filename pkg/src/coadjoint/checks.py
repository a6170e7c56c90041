"""Numeric/exact consistency checks that tie samples back to the exact engine."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import flows, orbits
from .algebra import Covector
from .documents import AlgebraDocument, FlowPin
from .errors import InputError
from .exact import unit_vector
from .flows import InvariantReport, MidpointCheck, OrbitSample


@dataclass(frozen=True)
class PinResult:
    pin: FlowPin
    observed: float
    expected: float
    ok: bool


@dataclass(frozen=True)
class OrbitCheckResult:
    algebra: str
    functional: str
    n_points: int
    orbit_dim: int
    base_rank: int
    rank_ok: bool
    membership_checked: bool
    membership_failures: int
    invariants: InvariantReport | None
    pins: tuple[PinResult, ...]

    @property
    def passed(self) -> bool:
        return (
            self.rank_ok
            and self.membership_failures == 0
            and (self.invariants is None or self.invariants.passed)
            and all(p.ok for p in self.pins)
        )


def _matching_functional_name(doc: AlgebraDocument, ell: Covector) -> str | None:
    for fname, coeffs in doc.functionals:
        if tuple(coeffs) == ell.coeffs:
            return fname
    return None


def run_orbit_checks(
    doc: AlgebraDocument,
    ell: Covector,
    n_points: int = 200,
    word_length: int = 8,
    step_scale: float = 1.0,
    seed: int = 0,
    tol: float = 1e-9,
) -> tuple[OrbitSample, OrbitCheckResult]:
    """Sample the orbit and cross-check it against the exact classification.

    Always checked: the numeric tangent rank at the (rational) base point
    equals the exact orbit dimension. When the stabilizer is an ideal the
    orbit stays inside its affine hull, so hull membership is enforced on
    every sample. Fixture invariants and flow pins recorded for this
    functional are checked as well.
    """
    alg = doc.algebra()
    ell_name = _matching_functional_name(doc, ell)

    stab = orbits.stabilizer(alg, ell)
    orbit_dim = alg.dim - stab.dim
    si = orbits.is_ideal(alg, stab).ok
    hull = orbits.affine_hull(alg, ell)

    sample = flows.orbit_sample(
        alg, ell, n_points=n_points, word_length=word_length,
        step_scale=step_scale, seed=seed, tolerance=tol,
    )

    base_rank = flows.tangent_rank(alg, sample.base)
    rank_ok = base_rank == orbit_dim

    membership_failures = 0
    if si:
        for point in sample.points:
            if not flows.affine_membership(point, ell, hull.direction, tol):
                membership_failures += 1

    invariant_report = None
    pins: list[PinResult] = []
    fx = doc.orbit_fixtures
    if fx is not None and ell_name is not None:
        active = [inv for inv in fx.invariants if inv.functional == ell_name]
        if active:
            invariant_report = flows.fixture_invariant_check(sample, active, tol, doc.basis)
        for pin in fx.flow_pins:
            if pin.functional != ell_name:
                continue
            gen = unit_vector(alg.dim, alg.name_index(pin.generator))
            flowed = flows.coadjoint_flow(alg, ell, gen, 1.0)
            coord = alg.name_index(pin.coordinate)
            observed = float(flowed[coord])
            expected = float(ell.coeffs[coord]) * math.exp(float(pin.rate))
            pins.append(PinResult(pin, observed, expected, abs(observed - expected) < tol))

    result = OrbitCheckResult(
        algebra=doc.name,
        functional=ell_name or "inline",
        n_points=n_points,
        orbit_dim=orbit_dim,
        base_rank=base_rank,
        rank_ok=rank_ok,
        membership_checked=si,
        membership_failures=membership_failures,
        invariants=invariant_report,
        pins=tuple(pins),
    )
    return sample, result


def midpoint_check_for_document(
    doc: AlgebraDocument,
    p: float,
    a: float,
    target: Covector,
    tol: float = 1e-9,
    invariant_tol: float | None = None,
) -> MidpointCheck:
    """Run the convex-midpoint witness using the document's recorded pair."""
    fx = doc.orbit_fixtures
    if fx is None or fx.midpoint_pair is None:
        raise InputError(f"document {doc.name!r} carries no midpoint parametrization pair")
    left = fx.parametrization(fx.midpoint_pair[0])
    right = fx.parametrization(fx.midpoint_pair[1])
    value_invariants = [inv for inv in fx.invariants if inv.expected is not None]
    return flows.midpoint_witness_check(
        left,
        right,
        value_invariants,
        doc.basis,
        p,
        a,
        np.asarray(target.floats()),
        tol,
        invariant_tol,
    )
