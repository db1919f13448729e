"""Brute-force searches used as ground truth on tiny cubes.

Both searches distinguish an exhausted search (``NONE``, a proof of non-existence) from one
that ran out of budget (``BUDGET_EXCEEDED``, inconclusive). Witnesses are checked before
they are returned.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import networkx as nx
import numpy as np
from loguru import logger

from cubepaths.checker import validate_decomposition, validate_hamiltonian_decomposition
from cubepaths.config import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT, ORACLE_HAM_MAX_DIM, ORACLE_MAX_DIM, VERTEX_DTYPE
from cubepaths.cube import ConstructionError, CycleCover, Decomposition, num_edges, step_slots, vertex_key
from cubepaths.oracle.exact_cover import BudgetExceeded, DancingLinks


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("Search budgets must be positive")


class SearchOutcome(Enum):
    EXISTS = "EXISTS"
    NONE = "NONE"
    BUDGET_EXCEEDED = "BUDGET-EXCEEDED"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search; ``witness`` is a :class:`Decomposition` or a list of
    :class:`CycleCover` when the outcome is EXISTS."""

    outcome: SearchOutcome
    witness: object = None
    nodes: int = 0
    elapsed: float = 0.0


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExceeded(f"node limit {self.budget.node_limit} reached")
        if self.nodes % 1024 == 0 and self.elapsed() > self.budget.time_limit:
            raise BudgetExceeded(f"time limit {self.budget.time_limit}s reached")

    def elapsed(self) -> float:
        return time.monotonic() - self.start

    def remaining(self) -> tuple[int, float]:
        return max(1, self.budget.node_limit - self.nodes), max(1e-3, self.budget.time_limit - self.elapsed())


def candidate_paths(n: int, k: int, meter: _Meter = None) -> np.ndarray:
    """All paths of length ``k`` in ``Q_n``, one orientation each (the one whose first vertex
    prints smaller), sorted by their printed form."""
    keys = [vertex_key(v, n) for v in range(1 << n)]
    found = []
    path = []
    on_path = set()

    def extend():
        if meter is not None:
            meter.tick()
        if len(path) == k + 1:
            if keys[path[0]] < keys[path[-1]]:
                found.append(tuple(path))
            return
        for i in range(n):
            u = path[-1] ^ (1 << i)
            if u not in on_path:
                path.append(u)
                on_path.add(u)
                extend()
                on_path.discard(path.pop())

    for v in range(1 << n):
        path.append(v)
        on_path.add(v)
        extend()
        on_path.discard(path.pop())
    found.sort(key=lambda p: [keys[v] for v in p])
    return np.array(found, dtype=VERTEX_DTYPE).reshape(len(found), k + 1)


def brute_force_decomposition(n: int, k: int, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Exact-cover search for a decomposition of ``Q_n`` into paths of length ``k``.

    :param n: dimension, at most 5.
    :param k: path length.
    :param budget: node and time limits shared by enumeration and search.
    """
    if not 1 <= n <= ORACLE_MAX_DIM:
        raise ValueError(f"Brute force is limited to 1 <= n <= {ORACLE_MAX_DIM}, got {n}")
    if k < 1:
        raise ValueError("Path length must be at least 1")
    meter = _Meter(budget)
    if num_edges(n) % k or k >= 1 << n:
        return SearchResult(SearchOutcome.NONE, elapsed=meter.elapsed())
    endpoints = 2 * (num_edges(n) // k)
    if n % 2 and endpoints < 1 << n:
        # odd degree: every vertex ends at least one path
        return SearchResult(SearchOutcome.NONE, elapsed=meter.elapsed())
    # with exactly one path end per vertex, vertices become extra columns
    vertex_columns = n % 2 == 1 and endpoints == 1 << n
    matrix = None
    try:
        rows = candidate_paths(n, k, meter)
        columns = num_edges(n) + ((1 << n) if vertex_columns else 0)
        matrix = DancingLinks(columns)
        for row_id, p in enumerate(rows):
            cells = step_slots(p[:-1], p[1:], n).tolist()
            if vertex_columns:
                cells += [num_edges(n) + int(p[0]), num_edges(n) + int(p[-1])]
            matrix.add_row(row_id, cells)
        logger.debug(f"Q_{n}, k={k}: {len(rows)} candidate paths")
        node_limit, time_limit = meter.remaining()
        solution = matrix.solve(node_limit=node_limit, time_limit=time_limit)
    except BudgetExceeded as e:
        logger.info(f"Brute force for Q_{n}, k={k} inconclusive: {e}")
        nodes = meter.nodes + (matrix.nodes if matrix is not None else 0)
        return SearchResult(SearchOutcome.BUDGET_EXCEEDED, nodes=nodes, elapsed=meter.elapsed())
    nodes = meter.nodes + matrix.nodes
    if solution is None:
        return SearchResult(SearchOutcome.NONE, nodes=nodes, elapsed=meter.elapsed())
    witness = Decomposition(n, k, rows[sorted(solution)])
    report = validate_decomposition(witness)
    if not report:
        raise ConstructionError("oracle witness", report.describe(n))
    return SearchResult(SearchOutcome.EXISTS, witness, nodes=nodes, elapsed=meter.elapsed())


def integer_hypercube(m: int) -> nx.Graph:
    """``networkx.hypercube_graph`` relabelled so that tuple entry ``i`` is bit ``i``."""
    graph = nx.hypercube_graph(m)
    return nx.relabel_nodes(graph, {t: sum(b << i for i, b in enumerate(t)) for t in graph.nodes})


class _HamiltonianSearch:
    def __init__(self, m: int, meter: _Meter):
        self.m = m
        self.size = 1 << m
        self.meter = meter
        graph = integer_hypercube(m)
        self.free = {v: set(graph[v]) for v in sorted(graph)}
        self.cycles = []

    def _moves(self, v: int, on_path: set) -> Iterator[int]:
        def onward(u):
            return sum(1 for x in self.free[u] if x not in on_path)

        return iter(sorted((u for u in self.free[v] if u not in on_path), key=lambda u: (onward(u), u)))

    def _dead_end(self, u: int, start: int, on_path: set) -> bool:
        for w in self.free[u]:
            if w in on_path:
                continue
            usable = sum(1 for x in self.free[w] if x not in on_path or x == u or x == start)
            if usable < 2:
                return True
        return False

    def _cycles_from(self, prefix: list[int]) -> Iterator[list[int]]:
        """Hamiltonian cycles in the free edges extending ``prefix``, low degree first."""
        start = prefix[0]
        path = list(prefix)
        on_path = set(path)
        stack = [self._moves(path[-1], on_path)]
        while stack:
            self.meter.tick()
            u = next(stack[-1], None)
            if u is None:
                stack.pop()
                if len(path) > len(prefix):
                    on_path.discard(path.pop())
                continue
            path.append(u)
            on_path.add(u)
            if len(path) == self.size:
                if start in self.free[u]:
                    yield list(path)
                on_path.discard(path.pop())
                continue
            if self._dead_end(u, start, on_path):
                on_path.discard(path.pop())
                continue
            stack.append(self._moves(u, on_path))

    def _toggle(self, cycle: list[int], remove: bool):
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if remove:
                self.free[a].discard(b)
                self.free[b].discard(a)
            else:
                self.free[a].add(b)
                self.free[b].add(a)

    def _residual_cycle(self):
        residual = nx.Graph((a, b) for a, nbrs in self.free.items() for b in nbrs)
        if residual.number_of_nodes() != self.size or any(d != 2 for _, d in residual.degree()):
            return None
        if not nx.is_connected(residual):
            return None
        return [u for u, _ in nx.find_cycle(residual, source=0)]

    def solve(self, index: int = 0) -> bool:
        if index == self.m // 2 - 1:
            last = self._residual_cycle()
            if last is None:
                return False
            self.cycles.append(last)
            return True
        prefix = [0, 1, 3] if index == 0 else [0]
        for cycle in self._cycles_from(prefix):
            self._toggle(cycle, remove=True)
            self.cycles.append(cycle)
            if self.solve(index + 1):
                return True
            self.cycles.pop()
            self._toggle(cycle, remove=False)
        return False


def search_hamiltonian_decomposition(m: int, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Backtracking search for ``m / 2`` edge-disjoint Hamiltonian cycles of ``Q_m``.

    Cycles are built one at a time from vertex 0; the first one is pinned to start along
    coordinates 1 then 2, and the last one must be whatever edges remain.
    """
    if m < 2 or m % 2 or m > ORACLE_HAM_MAX_DIM:
        raise ValueError(f"Hamiltonian search needs an even m in 2..{ORACLE_HAM_MAX_DIM}, got {m}")
    meter = _Meter(budget)
    search = _HamiltonianSearch(m, meter)
    try:
        found = search.solve()
    except BudgetExceeded as e:
        logger.info(f"Hamiltonian search for Q_{m} inconclusive: {e}")
        return SearchResult(SearchOutcome.BUDGET_EXCEEDED, nodes=meter.nodes, elapsed=meter.elapsed())
    if not found:
        return SearchResult(SearchOutcome.NONE, nodes=meter.nodes, elapsed=meter.elapsed())
    report = validate_hamiltonian_decomposition(m, search.cycles)
    if not report:
        raise ConstructionError("oracle witness", report.describe(m))
    witness = [CycleCover(m, c) for c in search.cycles]
    return SearchResult(SearchOutcome.EXISTS, witness, nodes=meter.nodes, elapsed=meter.elapsed())
