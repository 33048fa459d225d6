"""
Identidades polinomiales: Psi_n, Phi_n, determinantes D_n y factor Theta.
"""

from .builtin import builtin_identities_check
from .cache import PsiCache
from .determinants import block_rows, det_block, theta_factor
from .errors import (
    CertificationError,
    IdentityError,
    LevelNotSupportedError,
    PsiNotFoundError,
    RepeatedShiftError,
    ShiftParameterError,
    TupleLengthError,
    ZeroHVectorError,
)
from .models import BlockDet, IdentityReport, Minor, PhiResult, PsiResult, ThetaResult
from .psi import (
    DEFAULT_CAPS,
    DEGREE_SIX_PSI2,
    check_nonvanishing,
    check_vanishing,
    expand_psi,
    extract_phi,
    find_psi,
    phi_recombines,
    specialization_checks,
    w_monomials,
)
from .shift import shift_coefficients, shift_direct, shift_poly_coeffs

__all__ = [
    "find_psi",
    "check_vanishing",
    "check_nonvanishing",
    "expand_psi",
    "extract_phi",
    "phi_recombines",
    "specialization_checks",
    "w_monomials",
    "DEFAULT_CAPS",
    "DEGREE_SIX_PSI2",
    "builtin_identities_check",
    "det_block",
    "block_rows",
    "theta_factor",
    "shift_poly_coeffs",
    "shift_coefficients",
    "shift_direct",
    "PsiCache",
    "PsiResult",
    "PhiResult",
    "Minor",
    "BlockDet",
    "ThetaResult",
    "IdentityReport",
    "IdentityError",
    "PsiNotFoundError",
    "LevelNotSupportedError",
    "TupleLengthError",
    "CertificationError",
    "RepeatedShiftError",
    "ZeroHVectorError",
    "ShiftParameterError",
]
