"""
Tests de polinomios multivariados y de la búsqueda de dependencias lineales.
"""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from vinoslice.algebra import (
    ArityMismatchError,
    MultiPoly,
    NotDivisibleError,
    PolynomialDivisionByZeroError,
    PolynomialParseError,
    UncertifiedKernelError,
    VariableOrderMismatchError,
    linear_dependency,
    mp_divide_exact,
    mp_eval,
    mp_mul,
    mp_product,
    vandermonde,
    w_gens,
    z_gens,
    zh_gens,
)
from vinoslice.algebra.dependency import normalize_vector, search_kernel

XY = ("x", "y")

terms_2d = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-20, 20),
    max_size=6,
)
points_2d = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def _var(name: str, gens=XY) -> MultiPoly:
    return MultiPoly.variable(gens, name)


class TestMultiPoly:
    """Aritmética, evaluación y forma textual."""

    def test_difference_of_squares(self):
        x, y = _var("x"), _var("y")
        assert (x + y) * (x - y) == x**2 - y**2

    def test_text_form_is_grlex_descending(self):
        w1, w2, w3 = (MultiPoly.variable(w_gens(3), g) for g in w_gens(3))
        psi = w2**2 * -1 + w1 * w3
        assert psi.to_text() == "1*w1*w3 - 1*w2^2"

    def test_text_form_leading_negative(self):
        assert (_var("y") - _var("x")).to_text() == "-1*x + 1*y"

    def test_zero_text(self):
        assert MultiPoly.zero(XY).to_text() == "0"
        assert MultiPoly.zero(XY) == 0

    def test_parse_round_trip(self):
        gens = zh_gens(2)
        p = MultiPoly.parse("h1*h2*(z1 - z2)^2", gens)
        assert MultiPoly.parse(p.to_text(), gens) == p
        assert p.total_degree() == 4

    def test_parse_rejects_unknown_variable(self):
        with pytest.raises(PolynomialParseError):
            MultiPoly.parse("x + z", XY)

    def test_mixed_orders_rejected(self):
        with pytest.raises(VariableOrderMismatchError):
            _var("x") + MultiPoly.variable(("y", "x"), "x")

    def test_evaluate(self):
        p = MultiPoly.parse("3*x^2*y - 2*y + 7", XY)
        assert p.evaluate([2, 5]) == 3 * 4 * 5 - 10 + 7
        assert (_var("x") - _var("y")).evaluate([5, 5]) == 0

    def test_mp_mul_and_mp_eval(self):
        gens = zh_gens(2)
        diff = MultiPoly.parse("z1 - z2", gens)
        h1 = MultiPoly.variable(gens, "h1")
        assert mp_mul(diff, h1) == MultiPoly.parse("h1*z1 - h1*z2", gens)
        assert mp_mul(diff, h1).to_text() == mp_mul(h1, diff).to_text()
        form = MultiPoly.parse("h1*z1^2 + h2*z2^2", gens)
        assert mp_eval(form, [1, 2, 3, 4]) == 19

    def test_mp_mul_rejects_mixed_orders(self):
        with pytest.raises(VariableOrderMismatchError):
            mp_mul(_var("x"), MultiPoly.variable(("y", "x"), "x"))

    def test_evaluate_arity(self):
        with pytest.raises(ArityMismatchError):
            _var("x").evaluate([1])

    def test_evaluate_big_integers(self):
        p = _var("x") ** 5
        assert p.evaluate([10**20, 0]) == 10**100

    def test_exact_division(self):
        x, y = _var("x"), _var("y")
        assert mp_divide_exact(x**3 - y**3, x - y) == x**2 + x * y + y**2

    def test_division_with_remainder(self):
        x, y = _var("x"), _var("y")
        with pytest.raises(NotDivisibleError):
            mp_divide_exact(x**2 + y, x - y)

    def test_division_by_zero(self):
        with pytest.raises(PolynomialDivisionByZeroError):
            mp_divide_exact(_var("x"), MultiPoly.zero(XY))

    def test_product_of_nothing_is_one(self):
        assert mp_product([], XY) == 1

    def test_bidegree(self):
        gens = zh_gens(2)
        p = MultiPoly.parse("h1*z1^2 + h1*h2*z2", gens)
        assert p.bidegree(z_gens(2), z_gens(2, "h")) == (2, 2)

    def test_coefficients_in(self):
        gens = zh_gens(1)
        p = MultiPoly.parse("3*h1*z1^2 - 2*h1 + 5*z1", gens)
        coeffs = p.coefficients_in(["h1"])
        assert coeffs[(1,)] == MultiPoly.parse("3*z1^2 - 2", ("z1",))
        assert coeffs[(0,)] == MultiPoly.parse("5*z1", ("z1",))

    def test_specialize(self):
        p = MultiPoly.parse("x^2*y + y", XY)
        assert p.specialize({"x": 3}) == MultiPoly.parse("10*y", ("y",))

    def test_compose(self):
        w = MultiPoly.parse("w1*w3 - w2^2", w_gens(3))
        gens = zh_gens(2)
        forms = {
            f"w{j + 1}": MultiPoly.parse(f"h1*z1^{2 - j} + h2*z2^{2 - j}", gens)
            for j in range(3)
        }
        expected = MultiPoly.parse("h1*h2*(z1 - z2)^2", gens)
        assert w.compose(forms, gens) == expected

    def test_primitive(self):
        p = MultiPoly.parse("-4*x + 6*y", XY)
        assert p.primitive() == MultiPoly.parse("2*x - 3*y", XY)

    def test_vandermonde(self):
        gens = z_gens(3)
        v = vandermonde(gens, gens)
        assert v.evaluate([1, 2, 3]) == -2
        assert v.total_degree() == 3

    @given(terms_2d, terms_2d, points_2d)
    @settings(max_examples=50, deadline=None)
    def test_evaluation_is_multiplicative(self, a, b, point):
        p = MultiPoly.from_terms(XY, a)
        q = MultiPoly.from_terms(XY, b)
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
        assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)

    @given(terms_2d, terms_2d)
    @settings(max_examples=50, deadline=None)
    def test_product_divides_back(self, a, b):
        p = MultiPoly.from_terms(XY, a)
        q = MultiPoly.from_terms(XY, b)
        assume(not q.is_zero())
        assert mp_divide_exact(p * q, q) == p


class TestLinearDependency:
    """Búsqueda de núcleo con certificación simbólica."""

    def test_normalize_vector(self):
        assert normalize_vector([0, -4, 6]) == (0, 2, -3)
        assert normalize_vector([0, 0]) == (0, 0)

    def test_finds_dependency(self):
        gens = ("z1", "h1")
        z1, h1 = (MultiPoly.variable(gens, g) for g in gens)
        result = linear_dependency([h1 * (h1 * z1**2), (h1 * z1) ** 2])
        assert result.found
        assert result.coefficients == (1, -1)
        assert result.degree == 4

    def test_independent_polynomials(self):
        z = MultiPoly.variable(("z",), "z")
        assert not linear_dependency([z, z**2]).found

    def test_degree_cap_filters_candidates(self):
        z = MultiPoly.variable(("z",), "z")
        polys = [z, z * 2, z**2]
        result = linear_dependency(polys, degree_cap=1, degrees=[1, 1, 2])
        assert result.coefficients == (2, -1, 0)
        assert result.degree == 1

    def test_deterministic_for_seed(self):
        z = MultiPoly.variable(("z",), "z")
        polys = [z, z * 3, z**2 - z]
        assert linear_dependency(polys, seed=7) == linear_dependency(polys, seed=7)

    def test_empty_kernel_search(self):
        assert search_kernel(lambda rng: [], 0, lambda v: True) is None

    def test_uncertified_kernel_raises(self):
        def sample_row(rng):
            v = int(rng.integers(1, 100))
            return [v, 2 * v]

        with pytest.raises(UncertifiedKernelError) as info:
            search_kernel(sample_row, 2, lambda v: False, max_attempts=2)
        assert info.value.attempts == 2
