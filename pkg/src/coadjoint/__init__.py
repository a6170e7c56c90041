"""Exact coadjoint-orbit classification for solvable Lie algebras.

The exact side (rational arithmetic throughout) computes stabilizers,
projective-kernel algebras, square-integrability and coherent-state
verdicts; the numeric side samples coadjoint flows in floating point and
cross-checks the exact answers on orbit geometry.
"""

from .algebra import (
    Covector,
    JacobiViolation,
    LieAlgebra,
    QuotientResult,
    UnimodularityResult,
    ad_matrix,
    center,
    change_of_basis,
    derived_series,
    is_nilpotent,
    is_solvable,
    is_unimodular,
    lower_central_series,
    quotient_algebra,
    semidirect_from_derivation,
    transform_covector,
    transform_subspace,
    validate_algebra,
)
from .checks import midpoint_check_for_document, run_orbit_checks
from .documents import (
    AlgebraDocument,
    emit_algebra,
    emit_report,
    parse_algebra,
    report_document,
)
from .errors import InputError, InvalidAlgebraError, NotAnIdealError, ParseError
from .exact import Subspace
from .fixtures import fixtures, get_fixture
from .flows import (
    FixtureInvariant,
    OrbitSample,
    Parametrization,
    affine_membership,
    coadjoint_flow,
    fixture_invariant_check,
    matrix_exp,
    midpoint_witness_check,
    orbit_sample,
    tangent_rank,
    write_samples_csv,
)
from .orbits import (
    AffineHull,
    ClassificationReport,
    IdealCheck,
    adjoint_transport_exact,
    affine_hull,
    classify,
    coadjoint_flow_exact,
    cs_witness_check,
    is_ideal,
    largest_ideal_in,
    orbit_dimension,
    projective_kernel_algebra,
    si_mod_pker,
    skew_form,
    stabilizer,
)
from .spectral import (
    ExponentialityStatus,
    SpectrumCertificate,
    exponentiality_status,
    imaginary_spectrum_certificate,
)

__version__ = "0.1.0"
