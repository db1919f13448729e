import unittest

import numpy as np

from cubepaths.checker import feasible, validate_decomposition, validate_path, validate_walk_decomposition
from cubepaths.constructions import BlockLift, MatchingSequence, PowCaseParams
from cubepaths.constructions import antipodal_decomposition, class_representatives, concat_matchings, cycles_to_paths
from cubepaths.constructions import decompose, dimension, eulerian_walk_decomposition, even_block_size
from cubepaths.constructions import even_n_decomposition, internal, join_with_connectors, lift_by_blocks
from cubepaths.constructions import pair_cycles_with_matching, plan_power_of_two, power_of_two_decomposition
from cubepaths.constructions import product_split, single_edge_decomposition, special_q5_k4, subdivide
from cubepaths.cube import CycleCover, Decomposition, InfeasibleError, Side
from cubepaths.cube import dimension_matching, format_vertex, full_mask, gray_code_cycle, num_edges, parse_vertex
from cubepaths.utils import serialize_decomposition


def V(s: str) -> int:
    return parse_vertex(s)


def as_strings(paths, n: int) -> set:
    return {tuple(format_vertex(int(v), n) for v in p) for p in paths}


def edge_sets(d: Decomposition) -> set:
    return {frozenset(frozenset((int(u), int(v))) for u, v in zip(p, p[1:])) for p in d.paths}


def assert_valid(d: Decomposition, n: int, k: int):
    report = validate_decomposition(d)
    assert report.ok, report.describe(d.n)
    assert (d.n, d.k) == (n, k)
    assert len(d) == num_edges(n) // k


class AntipodalTest(unittest.TestCase):

    def test_small(self):
        assert antipodal_decomposition(1).paths.tolist() == [[0, 1]]
        d = antipodal_decomposition(3)
        assert ("000", "100", "110", "111") in as_strings(d.paths, 3)
        assert_valid(d, 3, 3)

    def test_suite(self):
        for n in range(1, 17):
            d = antipodal_decomposition(n)
            assert_valid(d, n, n)
            assert len(d) == 1 << (n - 1)
            assert (d.paths[:, -1] == d.paths[:, 0] ^ full_mask(n)).all()
            prefixes = (1 << np.arange(n + 1)) - 1
            assert (d.paths == d.paths[:, :1] ^ prefixes[None, :]).all()

    def test_subdivide(self):
        d = antipodal_decomposition(3)
        assert_valid(subdivide(d, 1), 3, 1)
        assert subdivide(d, 3) == d
        with self.assertRaises(ValueError):
            subdivide(d, 2)
        halves = subdivide(Decomposition(4, 16, np.array([np.append(gray_code_cycle(4), 0)])), 8)
        assert len(halves) == 2
        assert halves.paths[0, -1] == halves.paths[1, 0]


class LiftTest(unittest.TestCase):

    def test_matches_antipodal(self):
        lifted = lift_by_blocks(3, single_edge_decomposition(1))
        assert_valid(lifted, 3, 3)
        assert edge_sets(lifted) == edge_sets(antipodal_decomposition(3))

    def test_identity(self):
        d = antipodal_decomposition(3)
        assert lift_by_blocks(1, d) is d

    def test_q9(self):
        lifted = BlockLift(t=3)(antipodal_decomposition(3))
        assert_valid(lifted, 9, 9)
        assert len(lifted) == 256
        assert repr(BlockLift(t=3)) == "BlockLift(t=3)"

    def test_classes(self):
        for m, t in ((1, 3), (2, 3), (3, 1), (2, 5)):
            reps = class_representatives(m, t)
            assert len(reps) == 1 << (t * m - m)
            assert len(np.unique(reps)) == len(reps)

    def test_errors(self):
        with self.assertRaises(ValueError):
            lift_by_blocks(2, antipodal_decomposition(2))
        with self.assertRaises(ValueError):
            lift_by_blocks(3, antipodal_decomposition(2), n=7)

    def test_parallel_matches_sequential(self):
        inner = power_of_two_decomposition(5, 2)
        assert lift_by_blocks(3, inner, parallel=True, num_workers=2) == lift_by_blocks(3, inner)


class ProductTest(unittest.TestCase):

    def test_single_edges(self):
        q1 = single_edge_decomposition(1)
        d = product_split(q1, q1)
        assert_valid(d, 2, 1)
        assert len(d) == 4

    def test_square_halves(self):
        halves = Decomposition(2, 2, cycles_to_paths(CycleCover(2, [0, 1, 3, 2]), 2))
        d = product_split(halves, halves)
        assert_valid(d, 4, 2)
        assert len(d) == 16

    def test_count_identity(self):
        a, b = antipodal_decomposition(1), single_edge_decomposition(3)
        d = product_split(a, b)
        assert len(d) == (1 << 1) * len(b) + (1 << 3) * len(a)
        assert_valid(d, 4, 1)
        with self.assertRaises(ValueError):
            product_split(antipodal_decomposition(2), antipodal_decomposition(3))


class MatchingsTest(unittest.TestCase):

    def test_concat_example(self):
        walks = concat_matchings(MatchingSequence([dimension(3, 1), dimension(3, 2)]), Side.EVEN)
        expected = {("000", "100", "110"), ("110", "010", "000"), ("101", "001", "011"), ("011", "111", "101")}
        assert as_strings(walks, 3) == expected

    def test_concat_all_dimensions_is_antipodal(self):
        for n in range(1, 9):
            seq = MatchingSequence([dimension(n, i) for i in range(1, n + 1)])
            walks = concat_matchings(seq, Side.EVEN)
            assert np.array_equal(walks, antipodal_decomposition(n).paths)
            for w in walks:
                assert validate_path(w, n, n)

    def test_empty_sequence(self):
        walks = concat_matchings(MatchingSequence([], n=3), Side.ODD)
        assert walks.shape == (4, 1)

    def test_sequence_invariants(self):
        i1, i2 = (internal(j, m) for j, m in enumerate(CycleCover(3, gray_code_cycle(3)).alternate_matchings(), 1))
        with self.assertRaises(ValueError):
            MatchingSequence([dimension(3, 1), i1, i2])
        with self.assertRaises(ValueError):
            MatchingSequence([dimension(3, 1), i1, dimension(3, 1)])
        seq = MatchingSequence.alternating([dimension(3, 2), dimension(3, 3)], [i1])
        assert repr(seq) == "MatchingSequence(M2 I1 M3)"
        assert seq.counts() == (2, 1)

    def test_connectors_example(self):
        g0 = CycleCover(3, [V("000"), V("010"), V("110"), V("100")])
        conns = pair_cycles_with_matching(g0, dimension_matching(3, 3))
        assert as_strings(conns.even, 3) == {("011", "010", "110"), ("101", "100", "000")}
        assert as_strings(conns.odd, 3) == {("001", "000", "010"), ("111", "110", "100")}
        ends = sorted(format_vertex(int(v), 3) for v in np.concatenate([conns.even[:, 0], conns.even[:, 2]]))
        assert ends == ["000", "011", "101", "110"]

    def test_connector_preconditions(self):
        crossing = CycleCover(3, gray_code_cycle(3))
        with self.assertRaises(ValueError):
            pair_cycles_with_matching(crossing, dimension_matching(3, 3))

    def test_join_requires_bijection(self):
        g0 = CycleCover(3, [V("000"), V("010"), V("110"), V("100")])
        conns = pair_cycles_with_matching(g0, dimension_matching(3, 3))
        walks = concat_matchings(MatchingSequence([], n=3), Side.EVEN)
        joined = join_with_connectors(walks, conns.even)
        assert joined.shape == (2, 3)
        with self.assertRaises(ValueError):
            join_with_connectors(walks[1:], conns.even)

    def test_cycles_to_paths(self):
        eight = CycleCover(3, gray_code_cycle(3))
        assert cycles_to_paths(eight, 4).shape == (2, 5)
        with self.assertRaises(ValueError):
            cycles_to_paths(CycleCover(2, [0, 1, 3, 2]), 4)
        with self.assertRaises(ValueError):
            cycles_to_paths(eight, 3)


class PowerOfTwoTest(unittest.TestCase):

    def test_plan(self):
        params, factors = plan_power_of_two(9, 2)
        assert (params.n, params.l, params.w, factors) == (5, 1, 4, 1)
        assert params.is_special
        params, factors = plan_power_of_two(7, 1)
        assert (params.n, params.l, params.w, factors) == (3, 1, 2, 2)
        params, _ = plan_power_of_two(11, 3)
        assert (params.cycles_kept, params.internal_matchings, params.dimension_matchings) == (2, 0, 6)
        assert plan_power_of_two(7, 0) == (None, 0)
        for n, r in ((4, 1), (5, 3)):
            with self.assertRaises(ValueError):
                plan_power_of_two(n, r)
        with self.assertRaises(ValueError):
            PowCaseParams(n=6, r=2, l=2, w=4)

    def test_special_q5(self):
        d = special_q5_k4()
        assert_valid(d, 5, 4)
        assert len(d) == 20
        # 16 cycle edges in the q4 = 1 layers, 16 in I, 16 in M5 and 32 in the connectors
        assert 16 + 16 + 16 + 32 == num_edges(5)

    def test_examples(self):
        assert_valid(power_of_two_decomposition(5, 2), 5, 4)
        assert_valid(power_of_two_decomposition(7, 1), 7, 2)
        assert len(power_of_two_decomposition(7, 1)) == 224
        d = power_of_two_decomposition(9, 2)
        assert_valid(d, 9, 4)
        assert len(d) == 576

    def test_odd_and_even_exponents(self):
        for n, r in ((7, 2), (9, 3), (11, 3), (11, 2), (13, 3), (9, 1)):
            assert_valid(power_of_two_decomposition(n, r), n, 1 << r)


class DecomposeTest(unittest.TestCase):

    def test_sweep(self):
        for n in (1, 3, 5, 7, 9, 11, 13):
            for k in range(1, n + 1):
                if feasible(n, k):
                    assert_valid(decompose(n, k), n, k)

    def test_q9_divisors(self):
        assert [k for k in range(1, 10) if feasible(9, k)] == [1, 2, 3, 4, 6, 8, 9]
        assert len(decompose(9, 6)) == 384

    def test_k_equals_n(self):
        assert decompose(7, 7) == antipodal_decomposition(7)

    def test_infeasible(self):
        with self.assertRaises(InfeasibleError) as ctx:
            decompose(7, 8)
        assert ctx.exception.condition == "k ≤ n violated"
        with self.assertRaises(InfeasibleError) as ctx:
            decompose(4, 2)
        assert ctx.exception.condition == "n must be odd"

    def test_deterministic(self):
        assert serialize_decomposition(decompose(9, 4)) == serialize_decomposition(decompose(9, 4))

    def test_parallel(self):
        assert decompose(9, 6, parallel=True, num_workers=2) == decompose(9, 6)


class EvenTest(unittest.TestCase):

    def test_cases(self):
        for n, t, k, count in ((4, 1, 8, 4), (6, 1, 32, 6), (6, 3, 6, 32)):
            d = even_n_decomposition(n, t)
            assert_valid(d, n, k)
            assert len(d) == count

    def test_block_size(self):
        assert even_block_size(6, 6) == 3
        assert even_block_size(6, 32) == 1
        assert even_block_size(6, 7) is None
        with self.assertRaises(ValueError):
            even_n_decomposition(6, 2)

    def test_eulerian_walks(self):
        d = eulerian_walk_decomposition(4, 4)
        assert len(d) == 8
        assert validate_walk_decomposition(d)
        with self.assertRaises(ValueError):
            eulerian_walk_decomposition(3, 3)
        with self.assertRaises(ValueError):
            eulerian_walk_decomposition(4, 5)


if __name__ == "__main__":
    unittest.main()
