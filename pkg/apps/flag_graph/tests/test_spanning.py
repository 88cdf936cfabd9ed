import pytest

from apps.core.exceptions import DisconnectedPatchError, WalkError
from apps.flag_graph import (
    Patch, cotree_generators, decompose_closed_walk, generator_growth, spanning_tree, tree_word,
)
from apps.flag_graph.walks import random_patch_closed_word
from apps.tilings.builder import build
from apps.words import EMPTY, concat, free_reduce, parse


def test_single_square_patch():
    patch = Patch(build('4^4'), 0)
    tree = spanning_tree(patch)
    assert len(patch) == 8
    assert sum(1 for parent in tree.parent.values() if parent is not None) == 7
    generators = cotree_generators(patch, tree)
    assert len(generators) == 1
    assert free_reduce(generators[0].word) in {parse('(ab)^4'), parse('(ba)^4')}


def test_tree_words_reach_their_flags(any_system):
    patch = Patch(any_system, 1)
    tree = spanning_tree(patch)
    assert tree_word(tree, patch.root) == EMPTY
    for flag in patch.graph:
        assert any_system.apply_word(patch.root, tree_word(tree, flag)) == flag


@pytest.mark.parametrize('radius', [1, 2, pytest.param(3, marks=pytest.mark.slow)])
def test_cotree_generators_are_closed_and_counted(any_system, radius):
    patch = Patch(any_system, radius)
    tree = spanning_tree(patch)
    generators = cotree_generators(patch, tree)
    assert len(generators) == patch.edge_count - len(patch) + 1
    for generator in generators:
        assert any_system.fixes(generator.word)


def test_neighbours_are_visited_in_label_order():
    patch = Patch(build('3.6.3.6'), 1)
    tree = spanning_tree(patch)
    root = patch.root
    for label in range(3):
        child = patch.system.adjacent(root, label)
        assert tree.parent[child] == (root, label)


def test_disconnected_patch_names_the_flag():
    patch = Patch(build('4^4'), 1)
    lonely = sorted(patch.graph)[-1]
    patch.graph.remove_edges_from(list(patch.graph.edges(lonely)))
    with pytest.raises(DisconnectedPatchError) as excinfo:
        spanning_tree(patch)
    assert excinfo.value.flag == lonely


def test_generator_count_grows_quadratically():
    growth = generator_growth(build('4.8.8'), [1, 2, 4])
    assert growth[1] < growth[2] < growth[4]
    # Generators track the patch area, (2R + 1)².
    assert 2.5 < growth[4] / growth[2] < 6


def test_closed_walks_are_products_of_cotree_generators(any_system, rng):
    patch = Patch(any_system, 2)
    tree = spanning_tree(patch)
    generators = cotree_generators(patch, tree)
    for _ in range(100):
        word = random_patch_closed_word(patch, rng, rng.randint(1, 30))
        factors = decompose_closed_walk(patch, tree, word, generators)
        assert free_reduce(concat(*(factor.word for factor in factors))) == free_reduce(word)
        for factor in factors:
            generator = generators[factor.generator].word
            expected = generator if factor.sign > 0 else generator[::-1]
            assert factor.word == expected


def test_decomposition_requires_a_closed_walk():
    patch = Patch(build('4^4'), 1)
    with pytest.raises(WalkError):
        decompose_closed_walk(patch, spanning_tree(patch), parse('abc'))


def test_decomposition_requires_the_walk_to_stay_inside():
    system = build('4^4')
    patch = Patch(system, 0)
    leave = parse('c (ab)^4 c')
    assert system.fixes(leave)
    with pytest.raises(WalkError):
        decompose_closed_walk(patch, spanning_tree(patch), leave)
