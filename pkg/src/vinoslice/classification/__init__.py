"""
Clasificación de soluciones y conjuntos de coeficientes T_{n,m}.
"""

from .classify import (
    MAX_S,
    ClassificationSummary,
    DivisibilityDiagnostic,
    SolutionClassifier,
    SolutionLabel,
    class_exponent_targets,
    classify,
    classify_all,
    divisibility_diagnostic,
)
from .errors import (
    ClassificationError,
    LevelCapExceededError,
    NotASolutionError,
    ZeroPolynomialError,
)
from .roots import BoundCheck, layer_root_count, lemma41_bound_check, root_pair_bound
from .tsets import CoefficientSets, build_T_sets, coefficient_layer

__all__ = [
    "build_T_sets",
    "coefficient_layer",
    "CoefficientSets",
    "SolutionClassifier",
    "SolutionLabel",
    "ClassificationSummary",
    "DivisibilityDiagnostic",
    "classify",
    "classify_all",
    "divisibility_diagnostic",
    "class_exponent_targets",
    "root_pair_bound",
    "lemma41_bound_check",
    "layer_root_count",
    "BoundCheck",
    "MAX_S",
    "ClassificationError",
    "NotASolutionError",
    "LevelCapExceededError",
    "ZeroPolynomialError",
]
