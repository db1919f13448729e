import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from cubepaths.cube import CycleCover, Decomposition, Edge, Matching, Side
from cubepaths.cube import all_vertices, antipode, check_dim, dimension_matching, embed, format_vertex
from cubepaths.cube import gray_code_cycle, num_edges, parity_array, parse_vertex, vertex_key, vertex_parity


def V(s: str) -> int:
    return parse_vertex(s)


def edge_strings(m: Matching) -> set:
    return {e.format(m.n) for e in m.edges()}


class VerticesTest(unittest.TestCase):

    def test_parity(self):
        assert vertex_parity(V("000")) is Side.EVEN
        assert vertex_parity(V("110")) is Side.EVEN
        assert vertex_parity(V("111")) is Side.ODD
        assert Side.EVEN.opposite() is Side.ODD

    def test_antipode(self):
        assert antipode(V("000"), 3) == V("111")
        assert antipode(V("101"), 3) == V("010")
        assert antipode(1, 1) == 0
        with self.assertRaises(ValueError):
            antipode(8, 3)

    def test_string_convention(self):
        # q1 is printed first and lives in bit 0
        assert V("100") == 1
        assert V("011") == 6
        assert format_vertex(6, 3) == "011"
        with self.assertRaises(ValueError):
            parse_vertex("012")

    def test_vertex_key_orders_like_strings(self):
        n = 5
        by_key = sorted(range(1 << n), key=lambda v: vertex_key(v, n))
        by_string = sorted(range(1 << n), key=lambda v: format_vertex(v, n))
        assert by_key == by_string

    def test_half_of_vertices_per_side(self):
        for n in range(1, 12):
            assert int(parity_array(all_vertices(n)).sum()) == 1 << (n - 1)

    def test_check_dim(self):
        assert check_dim(62) == 62
        for bad in (0, 63, True, 2.0):
            with self.assertRaises(ValueError):
                check_dim(bad)

    def test_gray_code_cycle(self):
        cycle = gray_code_cycle(3)
        assert " ".join(format_vertex(int(v), 3) for v in cycle) == "000 100 110 010 011 111 101 001"
        assert CycleCover(3, cycle).length == 8
        with self.assertRaises(ValueError):
            gray_code_cycle(1)


class EdgeTest(unittest.TestCase):

    @given(st.data())
    def test_slot_bijection(self, data):
        n = data.draw(st.integers(min_value=1, max_value=30))
        slot = data.draw(st.integers(min_value=0, max_value=num_edges(n) - 1))
        edge = Edge.from_slot(slot, n)
        assert edge.slot(n) == slot
        assert Edge.from_endpoints(edge.hi, edge.lo) == edge

    def test_slots_fill_table(self):
        n = 4
        slots = sorted(Edge.from_endpoints(v, v ^ (1 << i)).slot(n)
                       for v in range(1 << n) for i in range(n) if not v >> i & 1)
        assert slots == list(range(num_edges(n)))

    def test_non_canonical(self):
        with self.assertRaises(ValueError):
            Edge(1, 1)
        with self.assertRaises(ValueError):
            Edge.from_endpoints(0, 3)


class MatchingTest(unittest.TestCase):

    def test_dimension_matching_examples(self):
        assert edge_strings(dimension_matching(1, 1)) == {"0-1"}
        assert edge_strings(dimension_matching(2, 1)) == {"00-10", "01-11"}
        assert edge_strings(dimension_matching(2, 2)) == {"00-01", "10-11"}
        m = dimension_matching(3, 1)
        assert len(m) == 4
        assert (m.degree_sequence() == 1).all()
        with self.assertRaises(ValueError):
            dimension_matching(3, 4)

    def test_dimension_matchings_partition_edges(self):
        for n in range(1, 8):
            slots = np.concatenate([dimension_matching(n, i).slots() for i in range(1, n + 1)])
            assert len(slots) == num_edges(n)
            assert np.array_equal(np.sort(slots), np.arange(num_edges(n)))

    def test_matching_rejects_shared_vertex(self):
        with self.assertRaises(ValueError):
            Matching(2, [0, 0], [1, 2])

    def test_partner_table(self):
        table = dimension_matching(3, 2).partner_table()
        assert table[V("000")] == V("010")
        assert table[V("011")] == V("001")


class CycleCoverTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.square = [V("000"), V("010"), V("110"), V("100")]

    def test_canonical_orientation(self):
        scrambled = CycleCover(3, [V("110"), V("010"), V("000"), V("100")])
        assert scrambled.canonical().cycles.tolist() == [self.square]
        assert scrambled == CycleCover(3, self.square)

    def test_split_on(self):
        layers = embed(CycleCover(2, [0, 1, 3, 2]), [1, 2], np.array([0, 4]), 3)
        low, high = layers.split_on(3)
        assert low.num_cycles == high.num_cycles == 1
        assert not (low.cycles & 4).any()
        with self.assertRaises(ValueError):
            CycleCover(3, gray_code_cycle(3)).split_on(1)

    def test_from_edges(self):
        cover = CycleCover.from_edges(2, [0, 1, 3, 2], [1, 3, 2, 0])
        assert cover.num_cycles == 1
        assert cover.cycles.tolist() == [[0, 1, 3, 2]]

    def test_alternate_matchings(self):
        a, b = CycleCover(3, gray_code_cycle(3)).alternate_matchings()
        assert a.is_perfect() and b.is_perfect()
        assert set(a.slots().tolist()).isdisjoint(b.slots().tolist())

    def test_rejects_bad_cycles(self):
        with self.assertRaises(ValueError):
            CycleCover(2, [0, 3, 1, 2])
        with self.assertRaises(ValueError):
            CycleCover(2, [0, 1])


class DecompositionTest(unittest.TestCase):

    def test_expected_count(self):
        assert Decomposition(3, 3, np.zeros((0, 4))).expected_count == 4
        assert Decomposition(3, 5, np.zeros((0, 6))).expected_count is None
        with self.assertRaises(ValueError):
            Decomposition(3, 0, [])

    def test_ragged_paths(self):
        d = Decomposition(2, 1, [[0, 1], [0, 1, 3]])
        assert not d.is_uniform
        assert len(d) == 2

    def test_canonical_order_and_equality(self):
        paths = np.array([[V("01"), V("11")], [V("10"), V("11")], [V("00"), V("10")], [V("00"), V("01")]])
        d = Decomposition(2, 1, paths)
        ordered = d.canonical_order()
        lines = [" ".join(format_vertex(int(v), 2) for v in p) for p in ordered.paths]
        assert lines == sorted(lines)
        assert d == Decomposition(2, 1, paths[::-1])
        assert repr(d) == "Decomposition(n=2, k=1, count=4)"


class EmbedTest(unittest.TestCase):

    def test_path_example(self):
        placed = embed(np.array([0, 1]), [3], fixed=V("010"))
        assert [format_vertex(int(v), 3) for v in placed] == ["010", "011"]

    def test_matching_example(self):
        m = Matching.from_edges(2, [Edge.from_endpoints(V("00"), V("10")), Edge.from_endpoints(V("01"), V("11"))])
        placed = embed(m, [1, 2], fixed=V("001"), n=3)
        assert edge_strings(placed) == {"001-101", "011-111"}

    def test_identity(self):
        cover = CycleCover(3, gray_code_cycle(3))
        assert embed(cover, [1, 2, 3]) == cover
        d = Decomposition(2, 1, [[0, 1], [2, 3], [0, 2], [1, 3]])
        assert embed(d, [1, 2]) == d

    def test_block_mismatch(self):
        with self.assertRaises(ValueError):
            embed(dimension_matching(3, 1), [1, 2])
        with self.assertRaises(ValueError):
            embed(np.array([0, 1]), [1], fixed=1)

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_preserves_size_and_degrees(self, data):
        m = data.draw(st.integers(min_value=1, max_value=4))
        extra = data.draw(st.integers(min_value=0, max_value=3))
        n = m + extra
        block = data.draw(st.permutations(range(1, n + 1)))[:m]
        outside = [c for c in range(1, n + 1) if c not in block]
        bits = data.draw(st.lists(st.booleans(), min_size=extra, max_size=extra))
        fixed = sum(1 << (c - 1) for c, b in zip(outside, bits) if b)
        inner = dimension_matching(m, data.draw(st.integers(min_value=1, max_value=m)))
        placed = embed(inner, block, fixed, n)
        assert len(placed) == len(inner)
        degrees = placed.degree_sequence()
        assert sorted(degrees[degrees > 0].tolist()) == sorted(inner.degree_sequence().tolist())


if __name__ == "__main__":
    unittest.main()
