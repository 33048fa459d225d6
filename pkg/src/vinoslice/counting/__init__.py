"""
Conteos exactos de valores medios y oráculo de fuerza bruta.
"""

from .counts import (
    aux_pair_map,
    count_aux,
    count_lifted,
    count_sliced,
    count_u2,
    count_vmvt,
    diagonal_aux_lower_bound,
    diagonal_count,
    rep_power_sums,
    u2_upper_bound,
    zero_sum_count,
)
from .errors import (
    CapacityExceededError,
    CountingError,
    IncompatibleKeysError,
    InvalidCountParametersError,
    OracleCeilingExceededError,
)
from .oracle import (
    DEFAULT_CEILING,
    SystemDescriptor,
    aux_solutions,
    brute_force_oracle,
    iter_aux_solutions,
)
from .repmap import DEFAULT_CAPACITY, KeyPacker, PowerKey, RepMap, encode_key
from .solutions import enumerate_aux_solutions

__all__ = [
    "rep_power_sums",
    "count_sliced",
    "count_aux",
    "count_vmvt",
    "count_lifted",
    "count_u2",
    "u2_upper_bound",
    "aux_pair_map",
    "diagonal_aux_lower_bound",
    "diagonal_count",
    "zero_sum_count",
    "SystemDescriptor",
    "brute_force_oracle",
    "aux_solutions",
    "iter_aux_solutions",
    "enumerate_aux_solutions",
    "KeyPacker",
    "PowerKey",
    "RepMap",
    "encode_key",
    "DEFAULT_CAPACITY",
    "DEFAULT_CEILING",
    "CountingError",
    "CapacityExceededError",
    "OracleCeilingExceededError",
    "InvalidCountParametersError",
    "IncompatibleKeysError",
]
