"""Spectral obstruction to the exponential map being a diffeomorphism.

A solvable Lie algebra cannot belong to an exponential group if some ad_x has
a nonzero purely imaginary eigenvalue. That condition is decided exactly:
take the characteristic polynomial p of ad_x, form the polynomial q whose
roots are the squares of the roots of p, and count the distinct real roots
of q in (-inf, 0) with a Sturm sequence. A positive count is a sound
refutation; the converse direction has no finite test, so anything that is
neither nilpotent nor refuted is reported as unverified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import exact, polynomials
from .algebra import LieAlgebra, ad_matrix, is_nilpotent, is_solvable
from .exact import Vector

VERIFIED_NILPOTENT = "verified_nilpotent"
REFUTED = "refuted"
UNVERIFIED = "unverified"


@dataclass(frozen=True)
class SpectrumCertificate:
    """Exact decision data for one candidate element."""

    element: Vector
    charpoly: tuple[Fraction, ...]  # of ad_x, monic, constant term first
    squares_poly: tuple[Fraction, ...]  # roots are the squared eigenvalues
    negative_root_count: int

    @property
    def has_witness(self) -> bool:
        return self.negative_root_count > 0


def imaginary_spectrum_certificate(alg: LieAlgebra, x: Sequence[Fraction]) -> SpectrumCertificate:
    """Decide exactly whether ad_x has a nonzero purely imaginary eigenvalue."""
    x = exact.vector(x)
    m = ad_matrix(alg, x)
    n = alg.dim
    scale = 1
    for row in m:
        for c in row:
            scale = scale * c.denominator // gcd(scale, c.denominator)
    m_int = [[int(c * scale) for c in row] for row in m]
    p_int = polynomials.charpoly_int(m_int)
    q_int = polynomials.squares_of_roots(p_int)
    count = polynomials.count_negative_roots(q_int)
    # unscale: eigenvalues of the integer matrix are scale * eigenvalues of ad_x
    p = tuple(Fraction(c, scale ** (n - i)) for i, c in enumerate(p_int))
    q = tuple(Fraction(c, scale ** (2 * (n - i))) for i, c in enumerate(q_int))
    return SpectrumCertificate(x, p, q, count)


@dataclass(frozen=True)
class ExponentialityStatus:
    status: str  # verified_nilpotent | refuted | unverified
    reason: str | None = None  # "not_solvable" | "imaginary_spectrum" when refuted
    witness_name: str | None = None
    certificate: SpectrumCertificate | None = None


def _rational_samples(dim: int, count: int, seed: int):
    """Seeded rational vectors with numerators and denominators bounded by 10."""
    rng = random.Random(seed)
    for _ in range(count):
        v = tuple(Fraction(rng.randint(-10, 10), rng.randint(1, 10)) for _ in range(dim))
        if not exact.is_zero_vector(v):
            yield v


def exponentiality_status(alg: LieAlgebra, sample_count: int = 200, seed: int = 0) -> ExponentialityStatus:
    """Tri-state exponentiality verdict.

    Positive certification exists only for nilpotent algebras. Refutation is
    by non-solvability or by an exact imaginary-spectrum witness found among
    the basis elements and ``sample_count`` seeded rational combinations.
    Everything else is unverified, never claimed exponential.
    """
    if is_nilpotent(alg):
        return ExponentialityStatus(VERIFIED_NILPOTENT)
    if not is_solvable(alg):
        return ExponentialityStatus(REFUTED, reason="not_solvable")
    for i in range(alg.dim):
        cert = imaginary_spectrum_certificate(alg, exact.unit_vector(alg.dim, i))
        if cert.has_witness:
            return ExponentialityStatus(
                REFUTED,
                reason="imaginary_spectrum",
                witness_name=alg.basis_names[i],
                certificate=cert,
            )
    for x in _rational_samples(alg.dim, sample_count, seed):
        cert = imaginary_spectrum_certificate(alg, x)
        if cert.has_witness:
            return ExponentialityStatus(REFUTED, reason="imaginary_spectrum", certificate=cert)
    return ExponentialityStatus(UNVERIFIED)
