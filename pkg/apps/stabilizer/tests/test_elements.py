import pytest

from apps.core.exceptions import CatalogError, LemmaPreconditionError
from apps.flag_graph.distances import bfs_distances, shortest_word
from apps.flag_graph.walks import random_reduced_word
from apps.stabilizer.catalog import catalog_for_system
from apps.stabilizer.cells import enclosed_cells
from apps.stabilizer.elements import (
    cell_conjugate, conjugator_independence, make_wf, make_wv, relations_act_trivially,
)
from apps.stabilizer.peeling import peel
from apps.stabilizer.witness import exceeds_patch, infinite_witness, patch_reach, witness_distances
from apps.tilings import CellKind
from apps.tilings.builder import build
from apps.words import EMPTY, parse, power


class TestFaceAndVertexGenerators:
    def test_square_face(self):
        assert make_wf(build('4^4'), EMPTY) == parse('(ab)^4')

    def test_kagome_triangle(self):
        word = make_wf(build('3.6.3.6'), 'c')
        assert word == parse('c(ab)^3c')
        assert build('3.6.3.6').fixes(word)

    def test_hexagon_of_the_truncated_trihexagonal_tiling(self):
        system = build('4.6.12')
        alpha = catalog_for_system(system).alphas[1]
        assert alpha.cell_word == parse('(ab)^6')
        assert make_wf(system, alpha.outbound) == alpha.word

    def test_vertex_loop(self, any_system):
        assert make_wv(any_system, EMPTY) == power(parse('bc'), any_system.vertex_degree)

    def test_generators_fix_the_base_flag(self, any_system, rng):
        for _ in range(25):
            word = random_reduced_word(rng, rng.randint(0, 12))
            assert any_system.fixes(make_wf(any_system, word))
            assert any_system.fixes(make_wv(any_system, word))

    def test_vertex_generators_peel_into_full_loops(self, uniform_system, rng):
        for _ in range(10):
            word = make_wv(uniform_system, random_reduced_word(rng, rng.randint(0, 8)))
            walk = uniform_system.walk_of(uniform_system.base_flag, word)
            kinds = {cell.kind for cell, _ in enclosed_cells(uniform_system, walk)}
            assert kinds <= {CellKind.VERTEX, CellKind.EDGE}
            for factor in peel(uniform_system, word):
                assert len(factor.loop) == 2 * factor.cell.size


class TestConjugatorIndependence:
    def test_same_conjugator(self, any_system):
        assert conjugator_independence(any_system, 'c', 'c', 0)
        assert conjugator_independence(any_system, 'cb', 'cb', 1)

    def test_turning_within_the_face(self, any_system):
        word = parse('cbc')
        for k in range(1, 4):
            assert conjugator_independence(any_system, word, word + power(parse('ab'), k), 0)

    def test_turning_around_the_vertex(self, any_system):
        word = parse('ac')
        assert conjugator_independence(any_system, word, word + parse('bcb'), 1)

    def test_random_pairs_on_a_common_face(self, any_system, rng):
        for _ in range(100):
            word = random_reduced_word(rng, rng.randint(0, 10))
            other = word + face_turn(rng)
            exponent = any_system.codegree(any_system.apply_word(any_system.base_flag, word))
            assert conjugator_independence(any_system, word, other, 0, exponent=exponent)

    def test_flags_on_different_faces_are_rejected(self):
        system = build('4.8.8')
        with pytest.raises(LemmaPreconditionError):
            conjugator_independence(system, EMPTY, 'c', 0)

    def test_rotation_must_fix_the_base_flag(self):
        system = build('4.8.8')
        exponent = system.codegree(system.base_flag) - 1
        with pytest.raises(LemmaPreconditionError):
            conjugator_independence(system, EMPTY, 'ab', 0, exponent=exponent)

    def test_rank_must_be_zero_or_one(self):
        with pytest.raises(ValueError):
            conjugator_independence(build('4^4'), EMPTY, EMPTY, 2)

    @pytest.mark.parametrize('rank', [0, 1])
    def test_default_exponent_is_the_size_of_the_reached_cell(self, uniform_system, rng, monkeypatch, rank):
        exponents = []

        def recording(outbound, rotation, exponent):
            exponents.append(exponent)
            return cell_conjugate(outbound, rotation, exponent)

        monkeypatch.setattr('apps.stabilizer.elements.cell_conjugate', recording)
        base = uniform_system.base_flag
        for _ in range(50):
            word = random_reduced_word(rng, rng.randint(0, 10))
            reached = uniform_system.apply_word(base, word)
            if rank == 0:
                expected = uniform_system.codegree(reached)
            else:
                expected = uniform_system.cell_of(reached, CellKind.VERTEX).size
            exponents.clear()
            assert conjugator_independence(uniform_system, word, word, rank)
            assert exponents == [expected, expected]

    def test_default_exponent_falls_below_the_cover_on_small_faces(self):
        system = build('4.8.8')
        base = system.base_flag
        distances = bfs_distances(system, base, 6)
        square = min((flag for flag in distances if system.codegree(flag) == 4), key=distances.get)
        word = shortest_word(system, base, square, 6)
        turn = word + parse('ab')
        assert conjugator_independence(system, word, turn, 0)
        with pytest.raises(LemmaPreconditionError):
            conjugator_independence(system, word, turn, 0, exponent=3)


def face_turn(rng):
    """Random word in a and b: it moves a flag around its own face."""
    turn = power(parse('ab'), rng.randint(0, 5))
    return turn + parse('a') if rng.random() < 0.5 else turn


@pytest.mark.parametrize('name', ['3^6', '4^4', '6^3'])
def test_regular_relations_act_trivially(name):
    assert all(relations_act_trivially(build(name)).values())


class TestWitness:
    def test_distance_zero(self, uniform_system):
        witness = infinite_witness(uniform_system, 0)
        assert uniform_system.fixes(witness.word)
        assert witness.codegree < uniform_system.cover[0]

    @pytest.mark.parametrize('distance', [10, 20])
    def test_walk_reaches_past_the_distance(self, uniform_system, distance):
        witness = infinite_witness(uniform_system, distance)
        assert uniform_system.fixes(witness.word)
        assert witness.distance > distance
        assert witness.max_distance > distance

    def test_distances_grow_with_the_bound(self):
        system = build('4.8.8')
        reached = list(witness_distances(system, (0, 10, 20, 50)).values())
        assert reached == sorted(reached)
        assert reached[-1] > 50

    def test_witness_is_not_a_relation_of_the_cover(self):
        system = build('3.4.6.4')
        witness = infinite_witness(system, 5)
        p = system.cover[0]
        assert p % witness.codegree == 0
        assert witness.codegree != p

    def test_regular_tilings_have_no_witness(self):
        with pytest.raises(CatalogError):
            infinite_witness(build('6^3'), 3)

    def test_witness_leaves_the_window(self, uniform_system):
        witness, escapes = exceeds_patch(uniform_system, 2)
        assert escapes
        assert witness.distance > patch_reach(uniform_system, 2)

    @pytest.mark.parametrize('name', [
        '3.6.3.6', '4.8.8', '3.3.4.3.4', '3.3.3.4.4', '3.4.6.4', '3.3.3.3.6', '3.12.12',
        pytest.param('4.6.12', marks=pytest.mark.xfail(
            reason='72 flag classes per lattice cell: graph distance 21 may not reach past the window', strict=False,
        )),
    ])
    def test_distance_twenty_walk_leaves_the_radius_two_window(self, name):
        system = build(name)
        witness = infinite_witness(system, 20)
        window = set(system.flags_in_window(2))
        walk = system.walk_of(system.base_flag, witness.word)
        assert any(flag not in window for flag in walk.flags)
        assert max(max(abs(x), abs(y)) for (x, y), _ in walk.flags) > 2
