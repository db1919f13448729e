"""Hamiltonian decompositions of even-dimensional cubes.

``Q_2`` is its own 4-cycle. Larger cubes are built as Cartesian products of cycles:

* ``m = 0 mod 4``: ``Q_m = Q_{m/2} x Q_{m/2}``. Each Hamiltonian cycle ``H`` of the first factor
  is paired with the copy of ``H`` on the second factor, and the torus ``H x H`` splits into two
  Hamiltonian cycles (:func:`torus_cycles`).
* ``m = 2 mod 4``: ``Q_m = Q_{m-2} x Q_2``. One cycle of ``Q_{m-2}`` times the 4-cycle is split
  as a torus; every other cycle of ``Q_{m-2}`` gives four disjoint layer copies, which are merged
  into one cycle by square swaps with cycles already built.

Results are always checked with :func:`cubepaths.checker.validate_hamiltonian_decomposition`.
"""

import functools
import itertools
import math
import os
from pathlib import Path
from typing import Union

import numpy as np
from loguru import logger

from cubepaths.checker import validate_hamiltonian_decomposition
from cubepaths.config import HAM_PROVIDER_LIMIT, VERTEX_DTYPE
from cubepaths.cube import ConstructionError, CycleCover
from cubepaths.utils import ParseError, read_ham_cache

Q2_CYCLE = (0b00, 0b01, 0b11, 0b10)


def torus_cycles(first, second) -> tuple[np.ndarray, np.ndarray]:
    """Split the product of two cycles on disjoint coordinates into two Hamiltonian cycles.

    Vertex ``(x, y)`` is ``first[x] | second[y]`` and ``d = (x - y) mod M``. The first cycle
    steps ``x + 1`` unless ``d = 0``, where it steps ``y - 1``; the second steps ``y + 1``
    unless ``d = 1``, where it steps ``x - 1``.

    :param first: cycle of length ``L``.
    :param second: cycle of length ``M`` with ``M | L`` and ``gcd(L / M, M - 1) = 1``.
    """
    first, second = [int(v) for v in first], [int(v) for v in second]
    length, width = len(first), len(second)
    if length % width or math.gcd(length // width, width - 1) != 1:
        raise ValueError(f"Torus {length}x{width} does not split with the diagonal rule")
    red, blue = [], []
    x = y = 0
    for _ in range(length * width):
        red.append(first[x] | second[y])
        if (x - y) % width:
            x = (x + 1) % length
        else:
            y = (y - 1) % width
    x = y = 0
    for _ in range(length * width):
        blue.append(first[x] | second[y])
        if (x - y) % width != 1:
            y = (y + 1) % width
        else:
            x = (x - 1) % length
    return np.array(red, dtype=VERTEX_DTYPE), np.array(blue, dtype=VERTEX_DTYPE)


class _CycleGraph:
    """Mutable 2-regular graph used while merging layer copies."""

    def __init__(self, cycles):
        self.adj = {}
        for cycle in cycles:
            cycle = [int(v) for v in cycle]
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                self.adj.setdefault(a, set()).add(b)
                self.adj.setdefault(b, set()).add(a)

    def has(self, a: int, b: int) -> bool:
        return b in self.adj.get(a, ())

    def rewire(self, removed, added):
        for a, b in removed:
            self.adj[a].discard(b)
            self.adj[b].discard(a)
        for a, b in added:
            self.adj[a].add(b)
            self.adj[b].add(a)

    def walk(self) -> list[int]:
        """Traverse the cycle through the smallest vertex, heading to its smaller neighbour."""
        start = min(self.adj)
        order = [start]
        prev, current = start, min(self.adj[start])
        while current != start:
            order.append(current)
            a, b = self.adj[current]
            prev, current = current, (b if a == prev else a)
        return order

    def is_hamiltonian(self) -> bool:
        return all(len(nbrs) == 2 for nbrs in self.adj.values()) and len(self.walk()) == len(self.adj)


def _merge_layers(layers: _CycleGraph, base, ring, pool: list[_CycleGraph]) -> bool:
    """Merge the four layer copies ``base | ring[z]`` into one cycle, swapping squares
    ``u_z v_z, u_z' v_z'`` against fibres ``u_z u_z', v_z v_z'`` of a pool cycle."""
    parent = list(range(len(ring)))

    def find(z):
        while parent[z] != z:
            z = parent[z]
        return z

    base = [int(v) for v in base]
    edges = list(zip(base, base[1:] + base[:1]))
    for _ in range(len(ring) - 1):
        merged = False
        for z in range(len(ring)):
            z2 = (z + 1) % len(ring)
            if find(z) == find(z2):
                continue
            for (u, v), cycle in itertools.product(edges, pool):
                u0, v0, u1, v1 = u | ring[z], v | ring[z], u | ring[z2], v | ring[z2]
                if not (layers.has(u0, v0) and layers.has(u1, v1) and cycle.has(u0, u1) and cycle.has(v0, v1)):
                    continue
                cycle.rewire([(u0, u1), (v0, v1)], [(u0, v0), (u1, v1)])
                if cycle.is_hamiltonian():
                    layers.rewire([(u0, v0), (u1, v1)], [(u0, u1), (v0, v1)])
                    parent[find(z2)] = find(z)
                    merged = True
                    break
                cycle.rewire([(u0, v0), (u1, v1)], [(u0, u1), (v0, v1)])
            if merged:
                break
        if not merged:
            return False
    return True


def _extend_by_square(base_cycles, m: int):
    """Hamiltonian decomposition of ``Q_m`` from one of ``Q_{m-2}``; ``None`` when no variant works."""
    ring = [v << (m - 2) for v in Q2_CYCLE]
    for lead, square in itertools.product(range(len(base_cycles)), (ring, ring[::-1])):
        red, blue = torus_cycles(base_cycles[lead], square)
        pool = [_CycleGraph([red]), _CycleGraph([blue])]
        for j, base in enumerate(base_cycles):
            if j == lead:
                continue
            layers = _CycleGraph([np.asarray(base) | shift for shift in square])
            if not _merge_layers(layers, base, square, pool):
                break
            pool.append(layers)
        else:
            return [np.array(g.walk(), dtype=VERTEX_DTYPE) for g in pool]
        logger.debug(f"Q_{m}: layer merge failed with lead cycle {lead}, trying next variant")
    return None


@functools.lru_cache(maxsize=None)
def construct_hamiltonian_cycles(m: int) -> tuple[np.ndarray, ...]:
    """Build and verify ``m / 2`` edge-disjoint Hamiltonian cycles of ``Q_m`` (``m`` even)."""
    if m < 2 or m % 2:
        raise ValueError(f"Hamiltonian decompositions need an even dimension m >= 2, got {m}")
    if m == 2:
        cycles = [np.array(Q2_CYCLE, dtype=VERTEX_DTYPE)]
    elif m % 4 == 0:
        half = m // 2
        cycles = []
        for cycle in construct_hamiltonian_cycles(half):
            cycles.extend(torus_cycles(cycle, cycle << half))
    else:
        cycles = _extend_by_square(construct_hamiltonian_cycles(m - 2), m)
        if cycles is None:
            raise ConstructionError("layer merge", f"no square swap sequence found for Q_{m}")
    report = validate_hamiltonian_decomposition(m, cycles)
    if not report:
        raise ConstructionError("hamiltonian decomposition", f"Q_{m}: {report.describe(m)}")
    for cycle in cycles:
        cycle.flags.writeable = False
    return tuple(cycles)


def load_cached_cycles(m: int, cache_path: Union[str, os.PathLike, None]):
    """Verified cycles for ``m`` from a cache file, or ``None`` if absent or unusable."""
    if cache_path is None or not Path(cache_path).exists():
        return None
    try:
        sections = read_ham_cache(cache_path)
    except (ParseError, OSError) as e:
        logger.warning(f"Ignoring unreadable Hamiltonian cache {cache_path}: {e}")
        return None
    if m not in sections:
        return None
    report = validate_hamiltonian_decomposition(m, sections[m])
    if not report:
        logger.warning(f"Cached Q_{m} section in {cache_path} fails verification: {report.describe(m)}")
        return None
    logger.debug(f"Loaded verified Hamiltonian decomposition of Q_{m} from {cache_path}")
    return sections[m]


def hamiltonian_decomposition(m: int, cache_path: Union[str, os.PathLike, None] = None,
                              limit: int = HAM_PROVIDER_LIMIT) -> list[CycleCover]:
    """``m / 2`` edge-disjoint Hamiltonian cycles of ``Q_m``, one :class:`CycleCover` each.

    A verified section of the cache file is preferred; otherwise the cycles are constructed.

    :param m: even dimension, at least 2.
    :param cache_path: optional ``QHAM`` cache file.
    :param limit: largest ``m`` constructed without a cache section.
    """
    if m < 2 or m % 2:
        raise ValueError(f"Hamiltonian decompositions need an even dimension m >= 2, got {m}")
    cycles = load_cached_cycles(m, cache_path)
    if cycles is None:
        if m > limit:
            raise ValueError(f"m={m} is beyond the provider limit {limit} and no cached section exists")
        cycles = construct_hamiltonian_cycles(m)
    return [CycleCover(m, cycle) for cycle in cycles]
