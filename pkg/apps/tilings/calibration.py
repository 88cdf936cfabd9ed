"""
Choosing the base flag of a uniform tiling.

The published generator words are only meaningful from one particular
flag. Every flag class is tried with both conjugation readings until
the translation words translate it and every elliptic generator fixes
it; the lattice is then rebased onto the two translations.
"""
import logging
from dataclasses import dataclass

from apps.core.utils import log_activity

from .flags import Flag
from .lattice import rebase
from .presentations import Convention, presentation_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Calibration:
    base_class: int
    convention: Convention
    t1: tuple[int, int] | None
    t2: tuple[int, int] | None
    fixed: int
    expected: int

    @property
    def independent(self):
        if self.t1 is None or self.t2 is None:
            return False
        return self.t1[0] * self.t2[1] - self.t1[1] * self.t2[0] != 0

    @property
    def complete(self):
        return self.independent and self.fixed == self.expected

    @property
    def score(self):
        return self.fixed + (self.t1 is not None) + (self.t2 is not None) + self.independent


def assess(system, presentation, convention, flag_class, alphas=None):
    """Score one candidate base class under one reading."""
    flag = Flag((0, 0), flag_class)
    alphas = presentation.realized_alphas(convention) if alphas is None else alphas
    return Calibration(
        base_class=flag_class,
        convention=convention,
        t1=system.translation_of(presentation.beta_word, flag),
        t2=system.translation_of(presentation.gamma_word, flag),
        fixed=sum(system.fixes(alpha, flag) for alpha in alphas),
        expected=len(alphas),
    )


def find_calibration(system, presentation):
    """First complete calibration in (reading, class) order, else the best-scoring one."""
    best = None
    for convention in Convention:
        alphas = presentation.realized_alphas(convention)
        for flag_class in range(system.class_count):
            candidate = assess(system, presentation, convention, flag_class, alphas)
            if candidate.complete:
                return candidate
            if best is None or candidate.score > best.score:
                best = candidate
    return best


def calibrate(system):
    """Return the system rebased on the base flag and translations of its presentation."""
    presentation = presentation_for(system.tiling)
    calibration = find_calibration(system, presentation)
    if not calibration.complete:
        logger.warning(
            '%s: no flag satisfies every published generator; best class %d fixes %d of %d',
            system.tiling, calibration.base_class, calibration.fixed, calibration.expected,
        )
    log_activity('CALIBRATE', 'tiling', f'base flag of {system.tiling}', {
        'class': calibration.base_class,
        'convention': calibration.convention.value,
        't1': calibration.t1,
        't2': calibration.t2,
        'complete': calibration.complete,
    })
    if not calibration.independent:
        system.base_class = calibration.base_class
        system.convention = calibration.convention.value
        return system, calibration
    rebased = rebase(
        system, calibration.t1, calibration.t2, calibration.base_class,
        convention=calibration.convention.value,
    )
    return rebased, calibration
