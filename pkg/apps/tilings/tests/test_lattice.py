import pytest

from apps.core.exceptions import FlagSystemError
from apps.tilings.builder import build
from apps.tilings.lattice import coset_representatives, rebase, reduce_modulo
from apps.words import parse


def test_reduce_modulo_splits_points():
    assert reduce_modulo((5, 3), (2, 0), (0, 1)) == ((1, 0), (2, 3))
    assert reduce_modulo((-1, 0), (2, 0), (0, 1)) == ((1, 0), (-1, 0))


def test_coset_representatives():
    assert coset_representatives((1, 0), (0, 1)) == [(0, 0)]
    assert coset_representatives((2, 0), (0, 1)) == [(0, 0), (1, 0)]
    assert len(coset_representatives((2, 1), (-1, 2))) == 5


def test_dependent_translations_are_rejected():
    with pytest.raises(FlagSystemError):
        coset_representatives((1, 2), (2, 4))


def test_rebase_onto_index_two_sublattice():
    square = build('4^4')
    doubled = rebase(square, (2, 0), (0, 1), base_class=0)
    assert doubled.class_count == 16
    assert doubled.validate() == []
    assert doubled.basis == ((2, 0), (0, 1))
    # Crossing two squares is a translation in both lattices.
    across = parse('(ab)^2 c (ab)^2 c')
    original_shift = square.translation_of(across)
    doubled_shift = doubled.translation_of(across)
    assert original_shift is not None and doubled_shift is not None
    assert doubled.lattice_vector(doubled_shift) == square.lattice_vector(original_shift)


def test_rebase_keeps_embedding():
    square = build('4^4')
    rotated = rebase(square, (1, 1), (0, 1), base_class=0)
    assert rotated.class_count == 8
    assert rotated.embed(rotated.base_flag) == square.embed(square.base_flag)
