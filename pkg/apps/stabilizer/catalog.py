"""
Generator catalogs of the flag stabilizer for the eight uniform tilings.

A catalog pairs every published elliptic generator with the walk that
realizes it under the reading the flag system was calibrated with, and
carries the two translation words.
"""
from dataclasses import dataclass

from apps.core.exceptions import CatalogError
from apps.tilings.builder import build
from apps.tilings.constants import TilingId
from apps.tilings.presentations import Convention, presentation_for
from apps.words import Word, concat, format_conjugate, inverse

EXPECTED_ALPHA_COUNTS = {
    TilingId.T3_6_3_6: 2,
    TilingId.T4_8_8: 1,
    TilingId.T3_3_4_3_4: 6,
    TilingId.T3_3_3_4_4: 3,
    TilingId.T3_4_6_4: 6,
    TilingId.T3_3_3_3_6: 8,
    TilingId.T3_12_12: 2,
    TilingId.T4_6_12: 5,
}


@dataclass(frozen=True)
class EllipticGenerator:
    """A cell loop conjugated out to the base flag: outbound · cell_word · outbound⁻¹."""

    outbound: Word
    cell_word: Word
    expression: str

    @property
    def word(self):
        return concat(self.outbound, self.cell_word, inverse(self.outbound))

    @property
    def realized_expression(self):
        """The realized walk in x^w notation, readable by `parse`."""
        return format_conjugate(self.cell_word, inverse(self.outbound))


@dataclass(frozen=True)
class GeneratorCatalog:
    tiling: TilingId
    cover: tuple[int, int]
    convention: Convention
    alphas: tuple[EllipticGenerator, ...]
    beta: Word
    gamma: Word
    beta_expression: str
    gamma_expression: str

    @property
    def alpha_count(self):
        return len(self.alphas)

    @property
    def words(self):
        """Every generator word: the alphas, then β and γ."""
        return tuple(alpha.word for alpha in self.alphas) + (self.beta, self.gamma)


def catalog_for_system(system):
    """Catalog of `system`, realized with the reading its base flag was calibrated under."""
    presentation = presentation_for(system.tiling)
    if presentation is None:
        raise CatalogError(f'{system.tiling}: catalog applies to uniform tilings only')
    convention = Convention(system.convention)
    alphas = tuple(
        EllipticGenerator(
            outbound=convention.outbound(source.exponent_word),
            cell_word=source.cell_word,
            expression=source.expression,
        )
        for source in presentation.alphas
    )
    return GeneratorCatalog(
        tiling=system.tiling,
        cover=presentation.cover,
        convention=convention,
        alphas=alphas,
        beta=presentation.beta_word,
        gamma=presentation.gamma_word,
        beta_expression=presentation.beta,
        gamma_expression=presentation.gamma,
    )


def catalog_problems(system, generators):
    """Invariant violations of a catalog against its flag system; empty when sound."""
    problems = []
    expected = EXPECTED_ALPHA_COUNTS[generators.tiling]
    if generators.alpha_count != expected:
        problems.append(f'{generators.alpha_count} elliptic generators, expected {expected}')
    for index, alpha in enumerate(generators.alphas):
        if not system.fixes(alpha.word):
            problems.append(f'alpha[{index}] {alpha.expression} moves the base flag')
    t1 = system.translation_of(generators.beta)
    t2 = system.translation_of(generators.gamma)
    if t1 != (1, 0):
        problems.append(f'beta translates the base flag by {t1}, expected (1, 0)')
    if t2 != (0, 1):
        problems.append(f'gamma translates the base flag by {t2}, expected (0, 1)')
    return problems


def catalog(tiling):
    """
    Generator catalog of a uniform tiling, validated against its flag system.

    Raises:
        UnknownTilingError: unknown tiling name
        CatalogError: the tiling is regular, or the catalog fails its invariants
    """
    system = build(tiling)
    generators = catalog_for_system(system)
    problems = catalog_problems(system, generators)
    if problems:
        raise CatalogError(f'{system.tiling}: ' + '; '.join(problems))
    return generators
