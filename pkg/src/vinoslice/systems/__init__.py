"""
Tuplas de polinomios, formas sigma y coeficientes omega.
"""

from .errors import (
    CommonPositiveRootError,
    DegreesNotStrictlyDecreasingError,
    EmptyTupleError,
    IndexOutOfRangeError,
    InvalidSliceError,
    TupleError,
    TupleFileError,
    ZeroPolynomialInTupleError,
)
from .tuples import (
    WellConditionedTuple,
    load_tuple_file,
    monomial_tuple,
    omega,
    parse_tuple_text,
    sigma,
    sigma_forms,
    validate_tuple,
)
from .unipoly import UniPoly

__all__ = [
    "UniPoly",
    "WellConditionedTuple",
    "validate_tuple",
    "monomial_tuple",
    "omega",
    "sigma",
    "sigma_forms",
    "parse_tuple_text",
    "load_tuple_file",
    "TupleError",
    "EmptyTupleError",
    "ZeroPolynomialInTupleError",
    "DegreesNotStrictlyDecreasingError",
    "CommonPositiveRootError",
    "IndexOutOfRangeError",
    "InvalidSliceError",
    "TupleFileError",
]
