import os
import tempfile
import unittest

import numpy as np

from cubepaths.checker import validate_hamiltonian_decomposition
from cubepaths.constructions import construct_hamiltonian_cycles, hamiltonian_decomposition, torus_cycles
from cubepaths.cube import format_vertex, gray_code_cycle
from cubepaths.utils import read_ham_cache, write_ham_cache


class HamiltonianProviderTest(unittest.TestCase):

    def test_q2(self):
        (cover,) = hamiltonian_decomposition(2)
        assert " ".join(format_vertex(int(v), 2) for v in cover.cycles[0]) == "00 10 11 01"

    def test_base_cases(self):
        for m in (2, 4, 6, 8):
            covers = hamiltonian_decomposition(m)
            assert len(covers) == m // 2
            for cover in covers:
                assert cover.num_cycles == 1
                assert cover.length == 1 << m
            assert validate_hamiltonian_decomposition(m, covers)
            slots = np.concatenate([c.slots() for c in covers])
            assert len(np.unique(slots)) == m << (m - 1)

    def test_construction_is_cached_and_frozen(self):
        first = construct_hamiltonian_cycles(6)
        assert first is construct_hamiltonian_cycles(6)
        assert not first[0].flags.writeable

    def test_torus(self):
        red, blue = torus_cycles([0, 1, 3, 2], [0, 4, 12, 8])
        assert validate_hamiltonian_decomposition(4, [red, blue])
        with self.assertRaises(ValueError):
            torus_cycles([0, 1, 3, 2], gray_code_cycle(3) << 2)

    def test_preconditions(self):
        for m in (0, 3):
            with self.assertRaises(ValueError):
                hamiltonian_decomposition(m)
        with self.assertRaises(ValueError):
            hamiltonian_decomposition(10)


class HamiltonianCacheTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.tmpdir = tempfile.TemporaryDirectory()
        cls.path = os.path.join(cls.tmpdir.name, "qham.cache")

    @classmethod
    def tearDownClass(cls):
        cls.tmpdir.cleanup()

    def test_round_trip(self):
        covers = hamiltonian_decomposition(4)
        reversed_cycles = [c.cycles[0][::-1] for c in covers]
        write_ham_cache(self.path, 4, reversed_cycles)
        write_ham_cache(self.path, 2, [np.array([0, 2, 3, 1])])
        sections = read_ham_cache(self.path)
        assert sorted(sections) == [2, 4]
        loaded = hamiltonian_decomposition(4, cache_path=self.path)
        assert [c.cycles[0].tolist() for c in loaded] == [c.tolist() for c in reversed_cycles]
        assert hamiltonian_decomposition(2, cache_path=self.path)[0].cycles[0].tolist() == [0, 2, 3, 1]

    def test_cached_section_beyond_limit(self):
        path = os.path.join(self.tmpdir.name, "limit.cache")
        write_ham_cache(path, 6, [c.cycles[0] for c in hamiltonian_decomposition(6)])
        assert len(hamiltonian_decomposition(6, cache_path=path, limit=4)) == 3
        with self.assertRaises(ValueError):
            hamiltonian_decomposition(6, limit=4)

    def test_bad_section_falls_back(self):
        path = os.path.join(self.tmpdir.name, "bad.cache")
        write_ham_cache(path, 4, [gray_code_cycle(4), gray_code_cycle(4)])
        covers = hamiltonian_decomposition(4, cache_path=path)
        assert validate_hamiltonian_decomposition(4, covers)
        assert covers[0].cycles[0].tolist() != gray_code_cycle(4).tolist()

    def test_unreadable_cache_falls_back(self):
        path = os.path.join(self.tmpdir.name, "garbage.cache")
        with open(path, "w") as f:
            f.write("not a cache\n")
        assert validate_hamiltonian_decomposition(4, hamiltonian_decomposition(4, cache_path=path))


if __name__ == "__main__":
    unittest.main()
