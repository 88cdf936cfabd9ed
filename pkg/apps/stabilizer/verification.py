"""
Catalog verification: evaluating every generator claim against the flag action.
"""
import logging
from dataclasses import dataclass, field

from apps.core.utils import timed_activity
from apps.words import concat, conjugate, format_word, power

from .catalog import EXPECTED_ALPHA_COUNTS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ''


@dataclass
class VerificationReport:
    tiling: object
    search_range: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def add(self, name, passed, detail=''):
        self.checks.append(CheckResult(name, bool(passed), detail))


def translation_conjugators(generators, search_range):
    """Yield (j, k, β^j γ^k) for |j|, |k| ≤ search_range, in (j, k) order."""
    for j in range(-search_range, search_range + 1):
        beta = power(generators.beta, j)
        for k in range(-search_range, search_range + 1):
            yield j, k, concat(beta, power(generators.gamma, k))


def _check_alpha(system, report, index, alpha, generators, search_range):
    failures = []
    total = 0
    for j, k, translation in translation_conjugators(generators, search_range):
        total += 1
        word = conjugate(alpha.word, translation)
        if not system.fixes(word):
            failures.append((j, k, word))
    if failures:
        j, k, word = failures[0]
        detail = (
            f'{len(failures)} of {total} conjugates move the base flag; '
            f'first at beta^{j} gamma^{k}: {format_word(word)}'
        )
    else:
        detail = f'{total} conjugates fix the base flag'
    report.add(f'alpha[{index}] {alpha.expression}', not failures, detail)


def _check_translation(system, report, name, word, expected, search_range):
    base = system.base_flag
    wrong = []
    for x in range(-search_range, search_range + 1):
        for y in range(-search_range, search_range + 1):
            flag = base.translate((x, y))
            if system.apply_word(flag, word) != flag.translate(expected):
                wrong.append(flag)
    if wrong:
        actual = system.apply_word(wrong[0], word)
        detail = f'{len(wrong)} base-class flags misplaced; {wrong[0]} goes to {actual}, expected {wrong[0].translate(expected)}'
    else:
        detail = f'translates base-class flags by {expected}'
    report.add(f'{name}-translation', not wrong, detail)


def verify_catalog(system, generators, search_range):
    """
    Check every catalog claim and collect the outcome, one entry per claim.

    Args:
        system: FlagSystem of the catalog's tiling
        generators: GeneratorCatalog
        search_range: conjugates by β^j γ^k are checked for |j|, |k| ≤ search_range

    Returns:
        VerificationReport; failures are entries, never exceptions
    """
    if search_range < 0:
        raise ValueError('search range must be non-negative')
    report = VerificationReport(system.tiling, search_range)
    with timed_activity('VERIFY', 'catalog', f'generators of {system.tiling}',
                        {'range': search_range}) as metadata:
        expected = EXPECTED_ALPHA_COUNTS[generators.tiling]
        report.add(
            'alpha-count', generators.alpha_count == expected,
            f'{generators.alpha_count} elliptic generators, expected {expected}',
        )
        for index, alpha in enumerate(generators.alphas):
            _check_alpha(system, report, index, alpha, generators, search_range)
        _check_translation(system, report, 'beta', generators.beta, (1, 0), search_range)
        _check_translation(system, report, 'gamma', generators.gamma, (0, 1), search_range)

        t1 = system.lattice_vector(system.translation_of(generators.beta) or (0, 0))
        t2 = system.lattice_vector(system.translation_of(generators.gamma) or (0, 0))
        cross = t1[0] * t2[1] - t1[1] * t2[0]
        report.add(
            'translation-independence', cross != 0,
            f'cross product of the translation vectors is {float(cross):.6f}',
        )
        report.add(
            'cover', system.cover == generators.cover,
            f'flag system cover {system.cover}, catalog cover {generators.cover}',
        )
        metadata['passed'] = report.passed
        metadata['failures'] = len(report.failures)
    if not report.passed:
        logger.warning('%s: %d catalog checks failed', system.tiling, len(report.failures))
    return report
