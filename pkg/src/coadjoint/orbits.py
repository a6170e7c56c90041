"""Coadjoint-orbit classification at the Lie-algebra level.

For a functional ell on a solvable Lie algebra, everything here is driven by
the skew bilinear form (x, y) -> ell([x, y]): its kernel is the stabilizer
subalgebra, the rank is the orbit dimension, and the largest ideal contained
in the stabilizer is the Lie algebra of the projective kernel of the
attached irreducible representation. The top-level ``classify`` assembles
the square-integrability and coherent-state verdicts that those data decide.

Convention, pinned once for the whole package: the coadjoint flow of ell
along x at time t is ell o exp(-t ad_x), so coefficient vectors map by
transpose(exp(-t M)) with M = ad_x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exact
from .algebra import (
    Covector,
    LieAlgebra,
    ad_matrix,
    center,
    is_nilpotent,
    is_solvable,
    is_unimodular,
    quotient_algebra,
    require_valid,
)
from .exact import Matrix, Subspace, Vector
from .errors import InputError
from .spectral import REFUTED, ExponentialityStatus, exponentiality_status

CS_BY_SI = "cs_by_si"
CS_IFF_SI_FALSE = "cs_iff_si_false"
CS_INDETERMINATE = "indeterminate_nonunimodular_quotient"

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


def skew_form(alg: LieAlgebra, ell: Covector) -> Matrix:
    """Matrix with entries ell([e_i, e_j]); exactly skew-symmetric."""
    if ell.dim != alg.dim:
        raise InputError("functional dimension does not match the algebra")
    n = alg.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), comps in alg.pairs.items():
        v = sum((ell.coeffs[k] * c for k, c in comps.items()), Fraction(0))
        if v:
            m[i][j] = v
            m[j][i] = -v
    return exact.matrix(m)


def stabilizer(alg: LieAlgebra, ell: Covector) -> Subspace:
    """Kernel of the skew form: {x : ell([x, y]) = 0 for all y}."""
    return Subspace.span(alg.dim, exact.kernel(skew_form(alg, ell)))


def orbit_dimension(alg: LieAlgebra, ell: Covector) -> int:
    """Rank of the skew form; even, and equal to dim minus the stabilizer dim."""
    return alg.dim - stabilizer(alg, ell).dim


@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    # on failure: (basis index i, offending subspace vector, the escaping bracket)
    witness: tuple[int, Vector, Vector] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_ideal(alg: LieAlgebra, v: Subspace) -> IdealCheck:
    """Whether [g, v] is contained in v, with an escaping bracket as witness."""
    for i in range(alg.dim):
        e_i = exact.unit_vector(alg.dim, i)
        for b in v.basis:
            w = alg.bracket(e_i, b)
            if not v.contains(w):
                return IdealCheck(False, (i, b, w))
    return IdealCheck(True)


def largest_ideal_in(alg: LieAlgebra, v: Subspace) -> Subspace:
    """The unique maximal ideal of the algebra contained in v.

    Fixed-point iteration V_{k+1} = {x in V_k : [e_i, x] in V_k for all i};
    each step is one exact linear solve and the dimension strictly drops
    until the fixed point, so at most dim steps run. Maximality needs no
    tie-breaking: the sum of two ideals inside v is again an ideal inside v,
    so a unique largest one exists.
    """
    current = v
    while current.dim > 0:
        m = current.dim
        rows: list[list[Fraction]] = []
        reduced_images = []
        for i in range(alg.dim):
            e_i = exact.unit_vector(alg.dim, i)
            reduced_images.append([current.reduce(alg.bracket(e_i, b)) for b in current.basis])
        for per_i in reduced_images:
            for coord in range(alg.dim):
                row = [per_i[j][coord] for j in range(m)]
                if any(c != 0 for c in row):
                    rows.append(row)
        if not rows:
            return current
        coeff_kernel = exact.kernel(exact.matrix(rows))
        if len(coeff_kernel) == m:
            return current
        vectors = []
        for a in coeff_kernel:
            w = exact.zero_vector(alg.dim)
            for c, b in zip(a, current.basis):
                w = exact.vec_add(w, exact.vec_scale(b, c))
            vectors.append(w)
        current = Subspace.span(alg.dim, vectors)
    return current


def projective_kernel_algebra(alg: LieAlgebra, ell: Covector) -> Subspace:
    """Largest ideal inside the stabilizer of ell."""
    return largest_ideal_in(alg, stabilizer(alg, ell))


def si_mod_pker(alg: LieAlgebra, ell: Covector) -> bool:
    """Square-integrability modulo the projective kernel: the stabilizer is an ideal."""
    return is_ideal(alg, stabilizer(alg, ell)).ok


@dataclass(frozen=True)
class AffineHull:
    """ell plus the annihilator of its stabilizer, with an exact membership test."""

    base: Covector
    direction: Subspace  # subspace of the dual, in dual coordinates

    def contains(self, f: Covector) -> bool:
        return self.direction.contains(exact.vec_sub(f.coeffs, self.base.coeffs))


def annihilator(v: Subspace) -> Subspace:
    """{f in the dual : f(b) = 0 for every b in v}, in dual coordinates."""
    if v.dim == 0:
        return Subspace.full(v.ambient_dim)
    return Subspace.span(v.ambient_dim, exact.kernel(exact.matrix(v.basis)))


def affine_hull(alg: LieAlgebra, ell: Covector) -> AffineHull:
    return AffineHull(ell, annihilator(stabilizer(alg, ell)))


def coadjoint_flow_exact(alg: LieAlgebra, ell: Covector, x: Sequence[Fraction], t: Fraction) -> Covector:
    """Ad*(exp t x) ell = ell o exp(-t ad_x), exact; requires ad_x nilpotent."""
    a = exact.exp_nilpotent(ad_matrix(alg, x), -Fraction(t))
    return Covector(exact.mat_vec(exact.transpose(a), ell.coeffs))


def adjoint_transport_exact(alg: LieAlgebra, v: Subspace, x: Sequence[Fraction], t: Fraction) -> Subspace:
    """Ad(exp t x) v = exp(t ad_x) v, exact; requires ad_x nilpotent.

    Matches coadjoint_flow_exact: the stabilizer of the flowed functional is
    the transported stabilizer.
    """
    a = exact.exp_nilpotent(ad_matrix(alg, x), Fraction(t))
    return Subspace.span(v.ambient_dim, [exact.mat_vec(a, b) for b in v.basis])


def cs_witness_check(alg: LieAlgebra, ell_orbit: Covector, f: Covector) -> bool:
    """Whether the stabilizer of a candidate moment-map value f equals the
    projective-kernel algebra of the orbit of ell_orbit, as canonical subspaces."""
    return stabilizer(alg, f) == projective_kernel_algebra(alg, ell_orbit)


@dataclass(frozen=True)
class ClassificationReport:
    solvable: bool
    nilpotent: bool
    unimodular: bool
    exponentiality: ExponentialityStatus
    stabilizer: Subspace
    orbit_dim: int
    stabilizer_is_ideal: bool
    pker_algebra: Subspace
    si_mod_pker: bool
    quotient_unimodular: bool
    affine_hull_direction: Subspace
    orbit_closed_affine: str  # yes | no | unknown
    cs_status: str
    notes: tuple[str, ...]


def _closedness_verdict(
    alg: LieAlgebra,
    ell: Covector,
    si: bool,
    quotient_unimodular: bool,
    hull: AffineHull,
    orbit_dim: int,
) -> str:
    if si and quotient_unimodular:
        return YES
    # A hull point whose own orbit dimension differs cannot lie in the orbit,
    # so the orbit is a proper subset of the hull. Candidates: 0 and
    # rescalings of ell.
    candidates = [Covector.zero(alg.dim)]
    for c in (Fraction(2), Fraction(-1), Fraction(1, 2)):
        candidates.append(c * ell)
    for g in candidates:
        if g.coeffs == ell.coeffs:
            continue
        if hull.contains(g) and orbit_dimension(alg, g) != orbit_dim:
            return NO
    return UNKNOWN


def classify(
    alg: LieAlgebra,
    ell: Covector,
    *,
    exponentiality_samples: int = 16,
    seed: int = 0,
) -> ClassificationReport:
    """Full orbit-level classification of (algebra, functional).

    A non-exponential algebra is analyzed anyway: the linear algebra is well
    defined, but a warning note records that the square-integrability and
    coherent-state conclusions assume an exponential group.
    """
    require_valid(alg)
    if ell.dim != alg.dim:
        raise InputError("functional dimension does not match the algebra")

    solvable = is_solvable(alg)
    nilpotent = is_nilpotent(alg)
    unimod = is_unimodular(alg)
    expo = exponentiality_status(alg, sample_count=exponentiality_samples, seed=seed)

    stab = stabilizer(alg, ell)
    orbit_dim = alg.dim - stab.dim
    ideal_check = is_ideal(alg, stab)
    pker = largest_ideal_in(alg, stab)
    si = ideal_check.ok

    if pker.dim == alg.dim:
        quotient_unimod = True  # trivial quotient group
    else:
        quotient_unimod = bool(is_unimodular(quotient_algebra(alg, pker).algebra))

    hull = affine_hull(alg, ell)
    closed_affine = _closedness_verdict(alg, ell, si, quotient_unimod, hull, orbit_dim)

    if si:
        cs_status = CS_BY_SI
    elif quotient_unimod:
        cs_status = CS_IFF_SI_FALSE
    else:
        cs_status = CS_INDETERMINATE

    notes = []
    if not unimod:
        notes.append(
            f"algebra is not unimodular: trace(ad_{unimod.witness_name}) = {unimod.witness_trace}"
        )
    if expo.status == REFUTED:
        which = (
            f"witness {expo.witness_name}" if expo.witness_name else f"reason: {expo.reason}"
        )
        notes.append(
            "exponentiality refuted (" + which + "); square-integrability and "
            "coherent-state verdicts assume an exponential group and are formal here"
        )

    return ClassificationReport(
        solvable=solvable,
        nilpotent=nilpotent,
        unimodular=unimod.unimodular,
        exponentiality=expo,
        stabilizer=stab,
        orbit_dim=orbit_dim,
        stabilizer_is_ideal=ideal_check.ok,
        pker_algebra=pker,
        si_mod_pker=si,
        quotient_unimodular=quotient_unimod,
        affine_hull_direction=hull.direction,
        orbit_closed_affine=closed_affine,
        cs_status=cs_status,
        notes=tuple(notes),
    )
