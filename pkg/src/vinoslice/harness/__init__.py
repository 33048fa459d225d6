"""
Arnés de experimentos: ajustes, cotas, informes y sondas.
"""

from .bounds import bound_calculator, r1_parity_bound, r1_parity_kappa, r1_range_bound, slice_s_range
from .errors import (
    HarnessError,
    InsufficientPointsError,
    NonIncreasingGridError,
    ParameterDomainError,
    ReportFormatError,
    ReportWriteError,
    ZeroCountError,
)
from .experiments import (
    DEFAULT_GRID,
    DEFAULT_TOLERANCE,
    aux_growth_probe,
    classification_fit,
    count_system,
    diagonal_probe,
    lifted_bound_probe,
    run_count_grid,
    u2_probe,
)
from .fit import fit_exponent
from .report import (
    CSV_COLUMNS,
    REPORT_FORMATS,
    SCHEMA_VERSION,
    count_reports,
    emit_report,
    parse_report,
    to_entry,
    write_report,
)

__all__ = [
    "fit_exponent",
    "bound_calculator",
    "r1_range_bound",
    "r1_parity_bound",
    "r1_parity_kappa",
    "slice_s_range",
    "emit_report",
    "parse_report",
    "write_report",
    "count_reports",
    "to_entry",
    "run_count_grid",
    "count_system",
    "aux_growth_probe",
    "lifted_bound_probe",
    "diagonal_probe",
    "u2_probe",
    "classification_fit",
    "DEFAULT_GRID",
    "DEFAULT_TOLERANCE",
    "CSV_COLUMNS",
    "REPORT_FORMATS",
    "SCHEMA_VERSION",
    "HarnessError",
    "InsufficientPointsError",
    "ZeroCountError",
    "NonIncreasingGridError",
    "ParameterDomainError",
    "ReportFormatError",
    "ReportWriteError",
]
