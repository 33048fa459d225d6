"""
Tests de Psi_n, Phi_n, determinantes por bloques, factor Theta y desplazamientos.
"""

import itertools
from types import SimpleNamespace

import pytest

from vinoslice.algebra import MultiPoly, UncertifiedKernelError, w_gens, z_gens, zh_gens
from vinoslice.identities import psi as psi_module
from vinoslice.identities import (
    DEGREE_SIX_PSI2,
    LevelNotSupportedError,
    PsiCache,
    RepeatedShiftError,
    ShiftParameterError,
    TupleLengthError,
    ZeroHVectorError,
    builtin_identities_check,
    check_nonvanishing,
    check_vanishing,
    det_block,
    expand_psi,
    extract_phi,
    find_psi,
    phi_recombines,
    shift_poly_coeffs,
    specialization_checks,
    theta_factor,
    w_monomials,
)
from vinoslice.systems import UniPoly, monomial_tuple, validate_tuple


class TestFindPsi:
    def test_level_zero(self, quadratic):
        result = find_psi(quadratic.prefix(1), 0)
        assert result.psi.to_text() == "1*w1"
        assert result.total_degree == 1

    def test_quadratic_level_one(self, quadratic):
        result = find_psi(quadratic, 1)
        assert result.psi.to_text() == "1*w1*w3 - 1*w2^2"
        assert result.total_degree == 2
        assert result.certified

    def test_cubic_gap_level_one(self, cubic_gap):
        result = find_psi(cubic_gap, 1)
        assert result.psi.to_text() == "1*w1*w3^2 - 1*w2^3"
        assert result.total_degree == 3

    def test_seed_does_not_change_result(self, quadratic):
        assert find_psi(quadratic, 1, seed=0).psi == find_psi(quadratic, 1, seed=11).psi

    def test_tuple_length(self, quadratic):
        with pytest.raises(TupleLengthError):
            find_psi(quadratic, 2)

    def test_high_level_requires_opt_in(self):
        with pytest.raises(LevelNotSupportedError):
            find_psi(monomial_tuple(7, 1), 3)

    def test_w_monomials_order(self):
        assert w_monomials(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        assert len(w_monomials(3, 2)) == 6


class TestVanishing:
    def test_psi_one_vanishes_only_at_level_one(self, quadratic):
        psi = MultiPoly.parse("w1*w3 - w2^2", w_gens(3))
        assert check_vanishing(psi, quadratic, 1)
        assert check_nonvanishing(psi, quadratic, 1)

    def test_non_relation(self, quadratic):
        psi = MultiPoly.variable(w_gens(3), "w1")
        assert not check_vanishing(psi, quadratic, 1)

    def test_zero_polynomial_is_not_a_witness(self, quadratic):
        assert not check_nonvanishing(MultiPoly.zero(w_gens(3)), quadratic, 1)

    def test_expansion_at_level_two(self, quadratic):
        psi = MultiPoly.parse("w1*w3 - w2^2", w_gens(3))
        expected = MultiPoly.parse("h1*h2*(z1 - z2)^2", zh_gens(2))
        assert expand_psi(psi, quadratic, 2) == expected

    def test_specializations(self, quadratic):
        psi = MultiPoly.parse("w1*w3 - w2^2", w_gens(3))
        assert specialization_checks(psi, quadratic, 1) == {
            "h_last_zero": True,
            "z_merge": True,
        }


class TestPhi:
    def test_phi_one(self, quadratic):
        psi = find_psi(quadratic, 1)
        phi = extract_phi(psi, quadratic, 1)
        assert phi.phi == MultiPoly.parse("z1 - z2", zh_gens(2))
        assert phi_recombines(phi, psi, quadratic)

    def test_phi_zero_is_first_polynomial(self):
        f = validate_tuple([UniPoly([1, 0, 1])])
        phi = extract_phi(find_psi(f, 0), f, 0)
        assert phi.phi == MultiPoly.parse("z1^2 + 1", zh_gens(1))

    def test_phi_cubic_gap(self, cubic_gap):
        psi = find_psi(cubic_gap, 1)
        phi = extract_phi(psi, cubic_gap, 1)
        assert phi_recombines(phi, psi, cubic_gap)
        assert phi.phi.bidegree(z_gens(2), z_gens(2, "h")) == (2, 1)


class TestBuiltinIdentities:
    def test_report(self):
        report = builtin_identities_check()
        assert report.first_identity_ok
        assert report.second_identity_divisible
        assert report.f63_bidegree == (6, 3)
        assert all(report.checks.values())
        assert report.ok

    def test_degree_six_combination_vanishes(self, quartic):
        psi2 = MultiPoly.parse(DEGREE_SIX_PSI2, w_gens(5))
        assert check_vanishing(psi2, quartic, 2)
        assert check_nonvanishing(psi2, quartic, 2)


class TestBlockDeterminant:
    def test_level_zero(self):
        f = validate_tuple([UniPoly([3, 0, 1])])
        block = det_block(f, 0)
        assert block.det == MultiPoly.parse("z1^2 + 3", zh_gens(1))

    def test_quadratic(self, quadratic):
        block = det_block(quadratic, 1)
        assert block.det == MultiPoly.parse("h1*(z1 - z2)^2", zh_gens(2))
        assert block.expansion() == block.det
        assert len(block.minors) == 3

    @pytest.mark.parametrize(
        "coeffs",
        [
            [[0, 0, 1], [0, 1], [1]],
            [[0, 0, 0, 1], [0, 1], [1]],
            [[1, 0, 0, 2], [0, 1, 1], [5]],
        ],
    )
    def test_laplace_expansion(self, coeffs):
        f = validate_tuple([UniPoly(c) for c in coeffs])
        block = det_block(f, 1)
        assert block.expansion() == block.det

    def test_laplace_expansion_level_two(self, quartic):
        block = det_block(quartic, 2)
        assert block.expansion() == block.det
        assert len(block.minors) == 10

    @pytest.mark.parametrize(
        "coeffs,expected",
        [
            ([[0, 0, 1], [0, 1], [1]], "h1*z1^2"),
            ([[0, 0, 0, 1], [0, 1], [1]], "2*h1*z1^3"),
        ],
    )
    def test_leading_minor(self, coeffs, expected):
        f = validate_tuple([UniPoly(c) for c in coeffs])
        minor = next(m for m in det_block(f, 1).minors if m.columns == (1, 2))
        assert minor.u == MultiPoly.parse(expected, zh_gens(2))

    def test_tuple_length(self, quadratic):
        with pytest.raises(TupleLengthError):
            det_block(quadratic, 2)


class TestTheta:
    @pytest.mark.parametrize(
        "coeffs,m,expected",
        [
            ([[0, 1], [1]], 2, "1"),
            ([[0, 0, 1], [0, 1], [1]], 3, "1"),
            ([[0, 0, 1], [0, 1]], 2, "z1*z2"),
            ([[0, 0, 0, 1], [0, 1], [1]], 3, "z1 + z2 + z3"),
        ],
    )
    def test_theta(self, coeffs, m, expected):
        f = validate_tuple([UniPoly(c) for c in coeffs])
        result = theta_factor(f, m)
        assert result.theta == MultiPoly.parse(expected, z_gens(m))
        assert result.definite
        assert len(result.samples) == 5

    def test_size_out_of_range(self, quadratic):
        with pytest.raises(TupleLengthError):
            theta_factor(quadratic, 4)


class TestShift:
    def test_square(self):
        assert shift_poly_coeffs(UniPoly.monomial(2), [1, -1], [0, 1]).coeffs == (-1, -2)

    def test_two_shifts(self):
        f = UniPoly([0, 1, 1])
        assert shift_poly_coeffs(f, [2, -1], [0, 2]).coeffs == (-6, -3, 1)

    def test_repeated_shift(self):
        with pytest.raises(RepeatedShiftError):
            shift_poly_coeffs(UniPoly.monomial(2), [1, 1], [3, 3])

    def test_zero_h(self):
        with pytest.raises(ZeroHVectorError):
            shift_poly_coeffs(UniPoly.monomial(2), [0, 0], [0, 1])

    def test_too_many_shifts(self):
        with pytest.raises(ShiftParameterError):
            shift_poly_coeffs(UniPoly.monomial(1), [1, 1], [0, 1])


class TestPsiCache:
    def test_round_trip(self, psi_cache, quadratic):
        psi_cache.set(quadratic.descriptor(), 1, 8, "1*w1*w3 - 1*w2^2", 2)
        assert psi_cache.get(quadratic.descriptor(), 1, 8) == "1*w1*w3 - 1*w2^2"
        assert psi_cache.get(quadratic.descriptor(), 1, 9) is None

    def test_persisted_metadata(self, psi_cache, quadratic):
        psi_cache.set(quadratic.descriptor(), 1, 8, "1*w1*w3 - 1*w2^2", 2)
        reopened = PsiCache(str(psi_cache.cache_dir))
        assert reopened.get(quadratic.descriptor(), 1, 8) == "1*w1*w3 - 1*w2^2"

    def test_invalidate_and_clear(self, psi_cache, quadratic, cubic_gap):
        psi_cache.set(quadratic.descriptor(), 1, 8, "a", 2)
        psi_cache.set(cubic_gap.descriptor(), 1, 8, "b", 3)
        psi_cache.invalidate(quadratic.descriptor(), 1, 8)
        assert psi_cache.get(quadratic.descriptor(), 1, 8) is None
        psi_cache.clear()
        assert psi_cache.get(cubic_gap.descriptor(), 1, 8) is None

    def test_eviction(self, tmp_path, quadratic, cubic_gap):
        cache = PsiCache(str(tmp_path / "small"), max_entries=1)
        cache.set(quadratic.descriptor(), 1, 8, "a", 2)
        cache.set(cubic_gap.descriptor(), 1, 8, "b", 3)
        assert len(cache.metadata) == 1

    def test_reads_survive_reopen_for_eviction(self, monkeypatch, tmp_path, quadratic, cubic_gap):
        clock = itertools.count(1)
        monkeypatch.setattr(
            "vinoslice.identities.cache.time", SimpleNamespace(time=lambda: float(next(clock)))
        )
        path = str(tmp_path / "lru")
        cache = PsiCache(path, max_entries=2)
        cache.set(quadratic.descriptor(), 1, 8, "a", 2)
        cache.set(cubic_gap.descriptor(), 1, 8, "b", 3)
        assert cache.get(quadratic.descriptor(), 1, 8) == "a"

        reopened = PsiCache(path, max_entries=2)
        assert reopened.metadata == cache.metadata
        reopened.set(quadratic.descriptor(), 2, 8, "c", 4)
        assert reopened.get(quadratic.descriptor(), 1, 8) == "a"
        assert reopened.get(cubic_gap.descriptor(), 1, 8) is None

    def test_missing_entry_file_is_dropped(self, psi_cache, quadratic):
        psi_cache.set(quadratic.descriptor(), 1, 8, "1*w1*w3 - 1*w2^2", 2)
        for path in psi_cache.cache_dir.glob("*.json"):
            if path.name != "metadata.json":
                path.unlink()
        assert psi_cache.get(quadratic.descriptor(), 1, 8) is None
        assert len(psi_cache) == 0

    def test_find_psi_uses_cache(self, psi_cache, quadratic):
        first = find_psi(quadratic, 1, cache=psi_cache)
        assert psi_cache.get(quadratic.descriptor(), 1, 8) == first.psi.to_text()
        assert find_psi(quadratic, 1, cache=psi_cache).psi == first.psi

    def test_corrupt_entry_is_replaced(self, psi_cache, quadratic):
        psi_cache.set(quadratic.descriptor(), 1, 8, "1*w1", 1)
        result = find_psi(quadratic, 1, cache=psi_cache)
        assert result.psi.to_text() == "1*w1*w3 - 1*w2^2"
        assert psi_cache.get(quadratic.descriptor(), 1, 8) == "1*w1*w3 - 1*w2^2"


class TestLevelTwo:
    def test_quartic_psi_two(self, quartic):
        result = find_psi(quartic, 2)
        assert result.certified
        assert result.total_degree <= 6
        assert result.psi.total_degree() == result.total_degree
        assert check_vanishing(result.psi, quartic, 2)
        assert check_nonvanishing(result.psi, quartic, 2)
        phi = extract_phi(result, quartic, 2)
        assert phi_recombines(phi, result, quartic)


class TestSkippedDegrees:
    def test_uncertified_degree_clears_minimal(self, monkeypatch, quadratic, psi_cache):
        real_search = psi_module.search_kernel
        calls = []

        def flaky_search(sample_row, ncols, certify, seed=0, **kwargs):
            calls.append(seed)
            if len(calls) == 1:
                raise UncertifiedKernelError(ncols, 1)
            return real_search(sample_row, ncols, certify, seed=seed, **kwargs)

        monkeypatch.setattr(psi_module, "search_kernel", flaky_search)
        result = find_psi(quadratic, 1, cache=psi_cache)
        assert result.psi.to_text() == "1*w1*w3 - 1*w2^2"
        assert not result.minimal
        assert psi_cache.get(quadratic.descriptor(), 1, 8) is None

    def test_minimal_when_nothing_skipped(self, quadratic):
        assert find_psi(quadratic, 1).minimal
