"""
vinoslice - Conteos exactos e identidades polinomiales para sistemas de
Vinogradov con una rebanada omitida.
"""

__version__ = "0.1.0"

from .algebra import MultiPoly, linear_dependency
from .classification import build_T_sets, classify, classify_all, root_pair_bound
from .counting import (
    brute_force_oracle,
    count_aux,
    count_lifted,
    count_sliced,
    count_u2,
    count_vmvt,
    rep_power_sums,
)
from .harness import bound_calculator, emit_report, fit_exponent, parse_report
from .identities import (
    builtin_identities_check,
    det_block,
    extract_phi,
    find_psi,
    shift_poly_coeffs,
    theta_factor,
)
from .models import BoundParams, CountReport, ExperimentResult, FitResult, SliceParams
from .systems import WellConditionedTuple, monomial_tuple, validate_tuple
from .utils.logging import configure_from_env, get_logger
from .cli import main as cli_main

# Configurar logging desde variables de entorno
configure_from_env()

__all__ = [
    "MultiPoly",
    "linear_dependency",
    "WellConditionedTuple",
    "validate_tuple",
    "monomial_tuple",
    "rep_power_sums",
    "count_sliced",
    "count_aux",
    "count_vmvt",
    "count_lifted",
    "count_u2",
    "brute_force_oracle",
    "find_psi",
    "extract_phi",
    "det_block",
    "theta_factor",
    "shift_poly_coeffs",
    "builtin_identities_check",
    "build_T_sets",
    "classify",
    "classify_all",
    "root_pair_bound",
    "fit_exponent",
    "bound_calculator",
    "emit_report",
    "parse_report",
    "SliceParams",
    "CountReport",
    "FitResult",
    "BoundParams",
    "ExperimentResult",
    "get_logger",
    "cli_main",
]
