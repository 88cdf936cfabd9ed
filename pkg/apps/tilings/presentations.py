"""
Published stabilizer generators of the uniform tilings.

For each non-regular tiling: the regular cover {p, q}, the elliptic
generators as (cell word, conjugating exponent) pairs, and the two
translation words. Exponents follow the x^w notation; how x^w turns
into a walk is the job of `Convention`.
"""
from dataclasses import dataclass
from enum import Enum

from apps.words import concat, inverse, parse

from .constants import TilingId


class Convention(str, Enum):
    """How an exponent w in x^w becomes the outbound part of a walk."""

    AS_WRITTEN = 'as-written'   # x^w = inverse(w)·x·w, outbound inverse(w)
    REVERSED = 'reversed'       # x^w = w·x·inverse(w), outbound w

    def outbound(self, exponent):
        return inverse(exponent) if self is Convention.AS_WRITTEN else exponent

    def realize(self, cell_word, exponent):
        outbound = self.outbound(exponent)
        return concat(outbound, cell_word, inverse(outbound))


@dataclass(frozen=True)
class EllipticSource:
    cell: str
    exponent: str = ''

    @property
    def cell_word(self):
        return parse(self.cell)

    @property
    def exponent_word(self):
        return parse(self.exponent)

    @property
    def expression(self):
        if not self.exponent:
            return self.cell
        exponent = self.exponent if len(self.exponent) == 1 else f'({self.exponent})'
        return f'({self.cell})^{exponent}'


@dataclass(frozen=True)
class Presentation:
    cover: tuple[int, int]
    alphas: tuple[EllipticSource, ...]
    beta: str
    gamma: str

    @property
    def beta_word(self):
        return parse(self.beta)

    @property
    def gamma_word(self):
        return parse(self.gamma)

    def realized_alphas(self, convention):
        return tuple(convention.realize(alpha.cell_word, alpha.exponent_word) for alpha in self.alphas)


def _alphas(*pairs):
    return tuple(EllipticSource(cell, exponent) for cell, exponent in pairs)


PRESENTATIONS = {
    TilingId.T3_6_3_6: Presentation(
        cover=(6, 4),
        alphas=_alphas(('(ab)^3', 'c'), ('(ab)^3', 'cb')),
        beta='ababacbc',
        gamma='abcbabcb',
    ),
    TilingId.T4_8_8: Presentation(
        cover=(8, 3),
        alphas=_alphas(('(ab)^4', 'cb')),
        beta='ababcbab',
        gamma='cbababab',
    ),
    TilingId.T3_3_4_3_4: Presentation(
        cover=(12, 5),
        alphas=_alphas(
            ('(ab)^4', ''), ('(ab)^3', 'c'), ('(ab)^4', 'cbc'),
            ('(ab)^3', 'cbcbc'), ('(ab)^3', 'cb'), ('(ab)^3', 'cbac'),
        ),
        beta='abcbabcbcb',
        gamma='cabcbacbcbabcb',
    ),
    TilingId.T3_3_3_4_4: Presentation(
        cover=(12, 5),
        alphas=_alphas(('(ab)^4', ''), ('(ab)^3', 'c'), ('(ab)^3', 'cbc')),
        beta='abcb',
        gamma='cbab(cb)^2ab',
    ),
    TilingId.T3_4_6_4: Presentation(
        cover=(12, 4),
        alphas=_alphas(
            ('(ab)^3', ''), ('(ab)^4', 'cba'), ('(ab)^4', 'cb'),
            ('(ab)^4', 'c'), ('(ab)^6', 'cbc'), ('(ab)^3', 'cbabc'),
        ),
        beta='cbabcbcbabcbab',
        gamma='caba(bc)^2babcab',
    ),
    TilingId.T3_3_3_3_6: Presentation(
        cover=(6, 5),
        alphas=_alphas(
            ('(ab)^3', ''), ('(ab)^3', 'cbacbc'), ('(ab)^3', 'cbc'), ('(ab)^3', 'cbcb'),
            ('(ab)^3', 'cb'), ('(ab)^3', 'cba'), ('(ab)^3', 'cbcba'), ('(ab)^3', 'cbca'),
        ),
        beta='ab(cb)^3(abcb)^2cb',
        gamma='ca(ba)^2(bc)^2ab',
    ),
    TilingId.T3_12_12: Presentation(
        cover=(12, 3),
        alphas=_alphas(('(ab)^3', 'cb'), ('(ab)^3', 'cbabab')),
        beta='(bcba)^2(ba)^2',
        gamma='(ba)^2(bcba)^2',
    ),
    TilingId.T4_6_12: Presentation(
        cover=(12, 3),
        alphas=_alphas(
            ('(ab)^4', 'cbabab'), ('(ab)^6', 'cbab'), ('(ab)^4', 'cb'),
            ('(ab)^6', 'c'), ('(ab)^4', 'cba'),
        ),
        beta='(ab)^3(cbab)^2ab',
        gamma='(ab)^5cbabcb',
    ),
}


def presentation_for(tiling):
    return PRESENTATIONS.get(TilingId(tiling))
