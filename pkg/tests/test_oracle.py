import os
import unittest

import numpy as np

from cubepaths.checker import feasible, validate_decomposition, validate_hamiltonian_decomposition
from cubepaths.constructions import decompose, special_q5_k4
from cubepaths.cube import num_edges, vertex_key
from cubepaths.oracle import BudgetExceeded, DancingLinks, SearchBudget, SearchOutcome
from cubepaths.oracle import brute_force_decomposition, candidate_paths, search_hamiltonian_decomposition
from cubepaths.oracle.search import _Meter

SLOW = os.environ.get("CUBEPATHS_SLOW") == "1"


class DancingLinksTest(unittest.TestCase):

    @staticmethod
    def knuth_matrix() -> DancingLinks:
        matrix = DancingLinks(7)
        for row_id, columns in enumerate([[2, 4, 5], [0, 3, 6], [1, 2, 5], [0, 3], [1, 6], [3, 4, 6]]):
            matrix.add_row(row_id, columns)
        return matrix

    def test_solution(self):
        assert sorted(self.knuth_matrix().solve()) == [0, 3, 4]

    def test_no_solution(self):
        matrix = DancingLinks(2)
        matrix.add_row(0, [0])
        assert matrix.solve() is None

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            self.knuth_matrix().solve(node_limit=1)


class BruteForceTest(unittest.TestCase):

    def test_examples(self):
        result = brute_force_decomposition(2, 2)
        assert result.outcome is SearchOutcome.EXISTS
        assert len(result.witness) == 2
        assert brute_force_decomposition(3, 3).outcome is SearchOutcome.EXISTS
        assert brute_force_decomposition(2, 4).outcome is SearchOutcome.NONE

    def test_q3_k2_agrees_with_construction(self):
        result = brute_force_decomposition(3, 2)
        assert result.outcome is SearchOutcome.EXISTS
        assert validate_decomposition(result.witness)
        assert feasible(3, 2)
        assert validate_decomposition(decompose(3, 2))

    def test_agreement_on_odd_cubes(self):
        for n in (1, 3, 5):
            for k in range(1, n + 1):
                if not feasible(n, k):
                    continue
                result = brute_force_decomposition(n, k)
                assert result.outcome is SearchOutcome.EXISTS, (n, k)
                assert validate_decomposition(result.witness)
                assert validate_decomposition(decompose(n, k))

    def test_q3_verdicts_follow_criterion(self):
        for k in (1, 2, 3, 4, 6):
            outcome = brute_force_decomposition(3, k).outcome
            assert (outcome is SearchOutcome.EXISTS) == feasible(3, k), k

    def test_special_case(self):
        d = special_q5_k4()
        assert validate_decomposition(d)
        assert len(d) == 20

    def test_budget_exceeded(self):
        result = brute_force_decomposition(5, 5, SearchBudget(node_limit=10))
        assert result.outcome is SearchOutcome.BUDGET_EXCEEDED
        assert result.witness is None

    def test_budget_counts_cover_nodes(self):
        meter = _Meter(SearchBudget())
        candidate_paths(5, 4, meter)
        result = brute_force_decomposition(5, 4, SearchBudget(node_limit=meter.nodes + 5))
        assert result.outcome is SearchOutcome.BUDGET_EXCEEDED
        assert result.nodes > meter.nodes

    def test_one_end_per_vertex(self):
        result = brute_force_decomposition(5, 5)
        assert result.outcome is SearchOutcome.EXISTS
        ends = np.concatenate([result.witness.paths[:, 0], result.witness.paths[:, -1]])
        assert sorted(ends.tolist()) == list(range(32))
        quick = brute_force_decomposition(3, 6)
        assert quick.outcome is SearchOutcome.NONE
        assert quick.nodes == 0

    def test_preconditions(self):
        with self.assertRaises(ValueError):
            brute_force_decomposition(6, 2)
        with self.assertRaises(ValueError):
            SearchBudget(node_limit=0)

    def test_candidates(self):
        rows = candidate_paths(2, 1)
        assert len(rows) == num_edges(2)
        assert all(vertex_key(int(p[0]), 2) < vertex_key(int(p[-1]), 2) for p in rows)
        assert len(candidate_paths(3, 2)) == 8 * 3 * 2 // 2


class HamiltonianSearchTest(unittest.TestCase):

    def test_small(self):
        for m in (2, 4):
            result = search_hamiltonian_decomposition(m)
            assert result.outcome is SearchOutcome.EXISTS
            assert len(result.witness) == m // 2
            assert validate_hamiltonian_decomposition(m, result.witness)

    def test_first_cycle_is_pinned(self):
        result = search_hamiltonian_decomposition(4)
        assert result.witness[0].cycles[0][:3].tolist() == [0, 1, 3]

    def test_budget(self):
        result = search_hamiltonian_decomposition(4, SearchBudget(node_limit=3))
        assert result.outcome is SearchOutcome.BUDGET_EXCEEDED

    def test_preconditions(self):
        for m in (3, 10):
            with self.assertRaises(ValueError):
                search_hamiltonian_decomposition(m)

    @unittest.skipUnless(SLOW, "set CUBEPATHS_SLOW=1 to run")
    def test_q6(self):
        result = search_hamiltonian_decomposition(6)
        assert result.outcome is SearchOutcome.EXISTS
        assert validate_hamiltonian_decomposition(6, result.witness)
        assert np.all([c.length == 64 for c in result.witness])


if __name__ == "__main__":
    unittest.main()
