"""
Fixtures compartidas de la batería de tests.
"""

import pytest

from vinoslice.identities.cache import PsiCache
from vinoslice.systems.tuples import WellConditionedTuple, monomial_tuple, validate_tuple
from vinoslice.systems.unipoly import UniPoly


@pytest.fixture
def quadratic() -> WellConditionedTuple:
    """(z^2, z, 1)."""
    return monomial_tuple(3, 1)


@pytest.fixture
def quartic() -> WellConditionedTuple:
    """(z^4, z^3, z^2, z, 1)."""
    return monomial_tuple(5, 1)


@pytest.fixture
def cubic_gap() -> WellConditionedTuple:
    """(z^3, z, 1)."""
    return validate_tuple([UniPoly.monomial(3), UniPoly.monomial(1), UniPoly.monomial(0)])


@pytest.fixture
def linear() -> WellConditionedTuple:
    """(z)."""
    return validate_tuple([UniPoly([0, 1])])


@pytest.fixture
def psi_cache(tmp_path) -> PsiCache:
    return PsiCache(str(tmp_path / "psi_cache"))
