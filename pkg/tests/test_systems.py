"""
Tests de tuplas bien condicionadas, formas sigma y coeficientes omega.
"""

import pytest
from pydantic import ValidationError

from vinoslice.algebra import MultiPoly, zh_gens
from vinoslice.models import SliceParams
from vinoslice.systems import (
    CommonPositiveRootError,
    DegreesNotStrictlyDecreasingError,
    EmptyTupleError,
    IndexOutOfRangeError,
    InvalidSliceError,
    TupleFileError,
    UniPoly,
    ZeroPolynomialInTupleError,
    load_tuple_file,
    monomial_tuple,
    omega,
    parse_tuple_text,
    sigma,
    sigma_forms,
    validate_tuple,
)


class TestUniPoly:
    def test_trailing_zeros_trimmed(self):
        assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert UniPoly([0, 0]).is_zero()
        assert UniPoly([]).degree == -1

    def test_call(self):
        assert UniPoly([1, 0, 3])(2) == 13

    def test_derivative(self):
        assert UniPoly.monomial(3).derivative().coeffs == (0, 0, 3)

    def test_shift(self):
        assert UniPoly.monomial(2).shift(1).coeffs == (1, 2, 1)

    def test_to_multipoly(self):
        gens = zh_gens(2)
        p = UniPoly([1, 0, 2]).to_multipoly("z2", gens)
        assert p == MultiPoly.parse("2*z2^2 + 1", gens)


class TestValidateTuple:
    def test_monomial_tuple(self):
        assert monomial_tuple(3, 1).degrees == (2, 1, 0)
        assert monomial_tuple(4, 2).degrees == (2, 1, 0)
        assert monomial_tuple(2, 1).degrees == (1, 0)

    def test_invalid_slice(self):
        with pytest.raises(InvalidSliceError):
            monomial_tuple(3, 3)
        with pytest.raises(InvalidSliceError):
            monomial_tuple(3, 0)

    def test_common_positive_root(self):
        with pytest.raises(CommonPositiveRootError) as excinfo:
            validate_tuple([UniPoly([-1, 0, 1]), UniPoly([-1, 1])])
        assert excinfo.value.root == 1

    def test_root_at_zero_is_allowed(self):
        f = validate_tuple([UniPoly.monomial(2), UniPoly.monomial(1)])
        assert f.t == 2

    def test_degrees_must_decrease(self):
        with pytest.raises(DegreesNotStrictlyDecreasingError):
            validate_tuple([UniPoly.monomial(1), UniPoly.monomial(2), UniPoly.monomial(0)])

    def test_empty_and_zero(self):
        with pytest.raises(EmptyTupleError):
            validate_tuple([])
        with pytest.raises(ZeroPolynomialInTupleError):
            validate_tuple([UniPoly.monomial(1), UniPoly([0])])

    def test_one_indexed_access(self, quadratic):
        assert quadratic[1] == UniPoly.monomial(2)
        assert quadratic.values(3) == (9, 3, 1)
        with pytest.raises(IndexOutOfRangeError):
            quadratic[4]

    def test_prefix(self, quartic):
        assert quartic.prefix(3).degrees == (4, 3, 2)


class TestSigmaAndOmega:
    def test_sigma(self, quadratic):
        gens = zh_gens(2)
        assert sigma(quadratic, 1, 2) == MultiPoly.parse("h1*z1^2 + h2*z2^2", gens)
        assert sigma(quadratic, 3, 1) == MultiPoly.parse("h1", zh_gens(1))

    def test_sigma_forms(self, quadratic):
        forms = sigma_forms(quadratic, 3, 2)
        assert [form.total_degree() for form in forms] == [3, 2, 1]

    def test_omega(self):
        assert omega(1, 2) == 0
        assert omega(2, 2) == 1
        assert omega(4, 2) == 6

    def test_omega_domain(self):
        with pytest.raises(IndexOutOfRangeError):
            omega(0, 1)


class TestTupleFiles:
    def test_parse_text(self):
        f = parse_tuple_text("# (z^2 + 1, z, 1)\n1,0,1\n\n0,1\n1\n")
        assert f.degrees == (2, 1, 0)
        assert f.to_text() == "1,0,1\n0,1\n1\n"

    def test_parse_text_rejects_garbage(self):
        with pytest.raises(TupleFileError) as excinfo:
            parse_tuple_text("1,0\na,b\n")
        assert excinfo.value.line == 2

    def test_load_file(self, tmp_path):
        path = tmp_path / "f.txt"
        path.write_text("0,0,1\n0,1\n1\n", encoding="utf-8")
        assert load_tuple_file(path) == monomial_tuple(3, 1)

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(TupleFileError):
            load_tuple_file(tmp_path / "missing.txt")


class TestSliceParams:
    def test_valid(self):
        params = SliceParams(s=2, k=3, r=1, X=10)
        assert params.H is None

    def test_r_must_be_below_k(self):
        with pytest.raises(ValidationError):
            SliceParams(s=2, k=3, r=3, X=10)

    def test_positive_box(self):
        with pytest.raises(ValidationError):
            SliceParams(s=2, k=3, r=1, X=0)
