from dataclasses import replace

import pytest

from apps.core.exceptions import CatalogError, UnknownTilingError
from apps.stabilizer.catalog import EXPECTED_ALPHA_COUNTS, catalog, catalog_for_system
from apps.stabilizer.verification import verify_catalog
from apps.tilings import TilingId
from apps.tilings.builder import build
from apps.words import parse


class TestCatalog:
    def test_alpha_counts(self, uniform_system):
        generators = catalog(uniform_system.tiling)
        assert generators.alpha_count == EXPECTED_ALPHA_COUNTS[uniform_system.tiling]

    @pytest.mark.parametrize('name', ['3^6', '4^4', '6^3'])
    def test_regular_tilings_have_no_catalog(self, name):
        with pytest.raises(CatalogError, match='uniform tilings only'):
            catalog(name)

    def test_unknown_tiling(self):
        with pytest.raises(UnknownTilingError):
            catalog('3.3.3.3.3.3')

    def test_truncated_hexagonal_catalog(self):
        generators = catalog('3.12.12')
        assert [alpha.expression for alpha in generators.alphas] == ['((ab)^3)^(cb)', '((ab)^3)^(cbabab)']
        assert generators.beta == parse('(bcba)^2(ba)^2')
        assert generators.gamma == parse('(ba)^2(bcba)^2')

    def test_elongated_triangular_beta(self):
        assert catalog('3.3.3.4.4').beta == parse('abcb')

    def test_truncated_square_has_one_alpha(self):
        generators = catalog('4.8.8')
        assert generators.alpha_count == 1
        assert generators.alphas[0].cell_word == parse('(ab)^4')

    def test_every_alpha_fixes_the_base_flag(self, uniform_system):
        for alpha in catalog_for_system(uniform_system).alphas:
            assert uniform_system.fixes(alpha.word)

    def test_realized_expression_reads_back(self, uniform_system):
        for alpha in catalog_for_system(uniform_system).alphas:
            assert parse(alpha.realized_expression) == alpha.word


class TestVerification:
    def test_range_zero(self, uniform_system):
        report = verify_catalog(uniform_system, catalog_for_system(uniform_system), 0)
        assert report.passed, [check for check in report.failures]

    @pytest.mark.parametrize('name', ['4.8.8', '3.6.3.6'])
    def test_range_three(self, name):
        system = build(name)
        report = verify_catalog(system, catalog_for_system(system), 3)
        assert report.passed
        alpha_checks = [check for check in report.checks if check.name.startswith('alpha[')]
        assert all(check.detail.startswith('49 conjugates') for check in alpha_checks)

    @pytest.mark.slow
    def test_range_five_on_every_tiling(self, uniform_system):
        report = verify_catalog(uniform_system, catalog_for_system(uniform_system), 5)
        assert report.passed, [check.detail for check in report.failures]

    def test_report_names_every_claim(self):
        system = build('3.12.12')
        report = verify_catalog(system, catalog_for_system(system), 1)
        names = [check.name for check in report.checks]
        assert names[0] == 'alpha-count'
        assert 'beta-translation' in names
        assert 'gamma-translation' in names
        assert 'translation-independence' in names
        assert names[-1] == 'cover'

    def test_broken_alpha_is_reported_with_its_word(self):
        system = build('4.8.8')
        generators = catalog_for_system(system)
        broken = replace(generators.alphas[0], cell_word=parse('(ab)^3'))
        report = verify_catalog(system, replace(generators, alphas=(broken,)), 1)
        assert not report.passed
        (failure,) = report.failures
        assert failure.name.startswith('alpha[0]')
        assert 'beta^-1 gamma^-1' in failure.detail

    def test_negative_range_is_rejected(self):
        system = build('4.8.8')
        with pytest.raises(ValueError):
            verify_catalog(system, catalog_for_system(system), -1)


def test_catalog_is_tied_to_the_calibrated_reading():
    system = build(TilingId.T3_4_6_4)
    assert catalog_for_system(system).convention.value == system.convention
