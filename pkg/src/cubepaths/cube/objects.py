"""Matchings, cycle covers and decompositions of hypercubes, plus subcube embedding.

All three containers hold ``numpy.int64`` arrays that are made read-only on construction.
"""

from typing import Iterator, Sequence, Union

import numpy as np

from cubepaths.config import VERTEX_DTYPE
from cubepaths.cube.vertices import (
    Edge,
    check_dim,
    coordinate_bit,
    edge_slots,
    flipped_coordinates,
    num_edges,
    step_slots,
    vertex_keys,
)


def _frozen(values, ndim: int = 1) -> np.ndarray:
    arr = np.array(values, dtype=VERTEX_DTYPE)
    if arr.ndim != ndim:
        raise ValueError(f"Expected a {ndim}-dimensional vertex array, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


class Matching:
    """A set of vertex-disjoint edges of ``Q_n``, stored as parallel ``lo`` / ``dirs`` arrays.

    :param n: dimension of the host cube.
    :param lo: lower endpoints (coordinate ``dir`` clear).
    :param dirs: flipped coordinates, 1-indexed.
    """

    def __init__(self, n: int, lo, dirs):
        self.n = check_dim(n)
        self.lo = _frozen(np.ravel(lo))
        self.dirs = _frozen(np.ravel(dirs))
        self._validate()

    def _validate(self):
        if len(self.lo) != len(self.dirs):
            raise ValueError("lo and dirs must have the same length")
        if len(self) == 0:
            return
        if self.dirs.min() < 1 or self.dirs.max() > self.n:
            raise ValueError(f"Edge coordinate out of range 1..{self.n}")
        if self.lo.min() < 0 or self.lo.max() >= (1 << self.n):
            raise ValueError(f"Vertex out of range for Q_{self.n}")
        if (self.lo & np.left_shift(1, self.dirs - 1)).any():
            raise ValueError("Edges are not in canonical (lo, dir) form")
        ends = np.concatenate([self.lo, self.hi])
        if len(np.unique(ends)) != len(ends):
            raise ValueError("A vertex is incident to two matching edges")

    @classmethod
    def from_steps(cls, n: int, u, v) -> "Matching":
        """Matching made of the edges ``u[i] - v[i]``."""
        u = np.asarray(u, dtype=VERTEX_DTYPE)
        v = np.asarray(v, dtype=VERTEX_DTYPE)
        dirs, adjacent = flipped_coordinates(u, v)
        if not adjacent.all():
            raise ValueError("Matching edges must join adjacent vertices")
        return cls(n, u & v, dirs)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Edge]) -> "Matching":
        return cls(n, [e.lo for e in edges], [e.dir for e in edges])

    @property
    def hi(self) -> np.ndarray:
        return self.lo | np.left_shift(1, self.dirs - 1)

    def __len__(self) -> int:
        return len(self.lo)

    def is_perfect(self) -> bool:
        return 2 * len(self) == 1 << self.n

    def partner_table(self) -> np.ndarray:
        """``table[v]`` is the partner of ``v`` or ``-1`` when ``v`` is unmatched."""
        table = np.full(1 << self.n, -1, dtype=VERTEX_DTYPE)
        hi = self.hi
        table[self.lo] = hi
        table[hi] = self.lo
        return table

    def slots(self) -> np.ndarray:
        return edge_slots(self.lo, self.dirs, self.n)

    def edges(self) -> list[Edge]:
        return [Edge(int(a), int(d)) for a, d in zip(self.lo, self.dirs)]

    def degree_sequence(self) -> np.ndarray:
        return np.bincount(np.concatenate([self.lo, self.hi]), minlength=1 << self.n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n == other.n and np.array_equal(np.sort(self.slots()), np.sort(other.slots()))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matching(n={self.n}, size={len(self)})"


def dimension_matching(n: int, i: int) -> Matching:
    """The perfect matching ``M_i`` of all ``2**(n-1)`` edges flipping coordinate ``i``."""
    n = check_dim(n)
    if not 1 <= i <= n:
        raise ValueError(f"Coordinate {i} out of range 1..{n}")
    vertices = np.arange(1 << n, dtype=VERTEX_DTYPE)
    lo = vertices[(vertices & coordinate_bit(i)) == 0]
    return Matching(n, lo, np.full(len(lo), i, dtype=VERTEX_DTYPE))


class CycleCover:
    """Vertex-disjoint cycles of ``Q_n``, all of one length, as a ``(cycles, length)`` array.

    Row ``c`` lists the cycle's vertices in traversal order; the closing edge joins the last
    vertex back to the first.
    """

    def __init__(self, n: int, cycles):
        self.n = check_dim(n)
        cycles = np.asarray(cycles, dtype=VERTEX_DTYPE)
        if cycles.ndim == 1:
            cycles = cycles[None, :] if cycles.size else cycles.reshape(0, 0)
        self.cycles = _frozen(cycles, ndim=2)
        self._validate()

    def _validate(self):
        if self.cycles.size == 0:
            return
        if self.length < 4:
            raise ValueError("Hypercube cycles have length at least 4")
        if self.cycles.min() < 0 or self.cycles.max() >= (1 << self.n):
            raise ValueError(f"Vertex out of range for Q_{self.n}")
        _, adjacent = flipped_coordinates(*self.steps())
        if not adjacent.all():
            raise ValueError("Consecutive cycle vertices must be adjacent")
        if len(np.unique(self.cycles)) != self.cycles.size:
            raise ValueError("Cycles must be vertex-disjoint with distinct vertices (2-regular)")

    @classmethod
    def from_edges(cls, n: int, u, v) -> "CycleCover":
        """Trace the cycles of a 2-regular edge set given as endpoint arrays."""
        u = np.asarray(u, dtype=VERTEX_DTYPE)
        v = np.asarray(v, dtype=VERTEX_DTYPE)
        neighbours = {}
        for a, b in zip(u.tolist(), v.tolist()):
            neighbours.setdefault(a, []).append(b)
            neighbours.setdefault(b, []).append(a)
        if any(len(nbrs) != 2 for nbrs in neighbours.values()):
            raise ValueError("Edge set is not 2-regular")
        seen = set()
        cycles = []
        for start in sorted(neighbours):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            prev, current = start, min(neighbours[start])
            while current != start:
                cycle.append(current)
                seen.add(current)
                a, b = neighbours[current]
                prev, current = current, (b if a == prev else a)
            cycles.append(cycle)
        if len({len(c) for c in cycles}) > 1:
            raise ValueError("Cycles of different lengths cannot share one cover")
        return cls(n, cycles)

    @property
    def num_cycles(self) -> int:
        return self.cycles.shape[0]

    @property
    def length(self) -> int:
        return self.cycles.shape[1]

    def __len__(self) -> int:
        return self.cycles.size

    def steps(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(u, v)`` of every cycle edge in traversal order."""
        return self.cycles.ravel(), np.roll(self.cycles, -1, axis=1).ravel()

    def slots(self) -> np.ndarray:
        return step_slots(*self.steps(), self.n)

    def degree_sequence(self) -> np.ndarray:
        u, v = self.steps()
        return np.bincount(np.concatenate([u, v]), minlength=1 << self.n)

    def split_on(self, coordinate: int) -> tuple["CycleCover", "CycleCover"]:
        """Separate the cycles lying in the layer ``q_c = 0`` from those in ``q_c = 1``."""
        layer = (self.cycles >> (coordinate - 1)) & 1
        low = (layer == 0).all(axis=1)
        high = (layer == 1).all(axis=1)
        if not (low | high).all():
            raise ValueError(f"A cycle crosses the layers of coordinate {coordinate}")
        return CycleCover(self.n, self.cycles[low]), CycleCover(self.n, self.cycles[high])

    def canonical(self) -> "CycleCover":
        """Reorient every cycle: start at its smallest vertex in string order and step first
        toward the smaller (in string order) of its two neighbours."""
        if self.cycles.size == 0:
            return self
        keys = vertex_keys(self.cycles, self.n)
        start = np.argmin(keys, axis=1)
        index = (start[:, None] + np.arange(self.length)[None, :]) % self.length
        cycles = np.take_along_axis(self.cycles, index, axis=1)
        keys = np.take_along_axis(keys, index, axis=1)
        backwards = keys[:, 1] > keys[:, -1]
        cycles[backwards, 1:] = cycles[backwards, :0:-1]
        return CycleCover(self.n, cycles)

    def alternate_matchings(self) -> tuple[Matching, Matching]:
        """Split the cover into the matchings of its even-position and odd-position edges."""
        if self.length % 2:
            raise ValueError("Only even cycles split into two matchings")
        nxt = np.roll(self.cycles, -1, axis=1)
        return (Matching.from_steps(self.n, self.cycles[:, 0::2], nxt[:, 0::2]),
                Matching.from_steps(self.n, self.cycles[:, 1::2], nxt[:, 1::2]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleCover):
            return NotImplemented
        return self.n == other.n and np.array_equal(np.sort(self.slots()), np.sort(other.slots()))

    __hash__ = None

    def __repr__(self) -> str:
        return f"CycleCover(n={self.n}, cycles={self.num_cycles}, length={self.length})"


class Decomposition:
    """A family of paths claimed to partition ``E(Q_n)`` into paths of length ``k``.

    The claim is not checked here; see :func:`cubepaths.checker.validate_decomposition`.
    Constructions produce a ``(count, k + 1)`` array. Parsed files with paths of unequal
    length keep a list of 1-D arrays instead.

    :param n: cube dimension.
    :param k: path length in edges, at least 1.
    :param paths: 2-D vertex array or a sequence of vertex sequences.
    """

    def __init__(self, n: int, k: int, paths):
        self.n = check_dim(n)
        if k < 1:
            raise ValueError(f"Path length must be at least 1, got {k}")
        self.k = int(k)
        if isinstance(paths, np.ndarray) and paths.ndim == 2:
            self.paths = _frozen(paths, ndim=2)
            return
        rows = [np.asarray(p, dtype=VERTEX_DTYPE).ravel() for p in paths]
        if len({len(p) for p in rows}) <= 1:
            self.paths = _frozen(np.stack(rows) if rows else np.empty((0, self.k + 1)), ndim=2)
        else:
            self.paths = [_frozen(p) for p in rows]

    @property
    def is_uniform(self) -> bool:
        return isinstance(self.paths, np.ndarray)

    @property
    def expected_count(self) -> Union[int, None]:
        """``n 2^(n-1) / k`` when ``k`` divides the edge count, otherwise ``None``."""
        count, rest = divmod(num_edges(self.n), self.k)
        return None if rest else count

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.paths)

    def canonical_order(self) -> "Decomposition":
        """Same paths, sorted as their serialized lines sort."""
        if self.is_uniform:
            if len(self) == 0:
                return self
            keys = vertex_keys(self.paths, self.n)
            order = np.lexsort(keys.T[::-1])
            return Decomposition(self.n, self.k, self.paths[order])
        keyed = sorted(self.paths, key=lambda p: tuple(vertex_keys(p, self.n).tolist()))
        return Decomposition(self.n, self.k, keyed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        if (self.n, self.k, len(self)) != (other.n, other.k, len(other)):
            return False
        mine, theirs = self.canonical_order().paths, other.canonical_order().paths
        return all(np.array_equal(a, b) for a, b in zip(mine, theirs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Decomposition(n={self.n}, k={self.k}, count={len(self)})"


def relabel(vertices, block: Sequence[int]) -> np.ndarray:
    """Move bit ``b`` of each vertex to coordinate ``block[b]``."""
    v = np.asarray(vertices, dtype=VERTEX_DTYPE)
    out = np.zeros_like(v)
    for b, coordinate in enumerate(block):
        out |= ((v >> b) & 1) << (coordinate - 1)
    return out


def embed(inner, block: Sequence[int], fixed=0, n: int = None):
    """Place an object of ``Q_|block|`` inside ``Q_n``.

    Inner coordinate ``b + 1`` becomes coordinate ``block[b]`` and the coordinates outside the
    block take their values from ``fixed``. When ``fixed`` is an array, one copy is produced per
    assignment and the copies are returned as one object, in the order of ``fixed``.

    :param inner: :class:`Decomposition`, :class:`Matching`, :class:`CycleCover` or a path as a
        vertex array.
    :param block: target coordinates, 1-indexed, pairwise distinct.
    :param fixed: vertex (or array of vertices) assigning the coordinates outside the block.
    :param n: dimension of the host cube; inferred from ``block`` and ``fixed`` when omitted.
    :return: an object of the same kind (a 2-D array for a path embedded with many assignments).
    """
    block = tuple(int(c) for c in block)
    if len(set(block)) != len(block) or (block and min(block) < 1):
        raise ValueError(f"Block coordinates must be distinct and positive: {block}")
    inner_dim = getattr(inner, "n", None)
    if inner_dim is not None and inner_dim != len(block):
        raise ValueError(f"Block size mismatch: object lives on Q_{inner_dim}, block has {len(block)} coordinates")
    fixed_values = np.atleast_1d(np.asarray(fixed, dtype=VERTEX_DTYPE)).ravel()
    block_mask = sum(coordinate_bit(c) for c in block)
    if (fixed_values & block_mask).any():
        raise ValueError("Fixed assignment sets coordinates inside the block")
    if n is None:
        n = max(max(block, default=0), int(fixed_values.max(initial=0)).bit_length())
    n = check_dim(n)
    if max(block, default=0) > n or fixed_values.max(initial=0) >= (1 << n):
        raise ValueError(f"Block or fixed assignment does not fit in Q_{n}")

    def place(values: np.ndarray) -> np.ndarray:
        moved = relabel(values, block)
        return fixed_values.reshape((-1,) + (1,) * moved.ndim) | moved[None, ...]

    if isinstance(inner, Decomposition):
        if inner.is_uniform:
            return Decomposition(n, inner.k, place(inner.paths).reshape(-1, inner.k + 1))
        return Decomposition(n, inner.k, [row for p in inner.paths for row in place(p)])
    if isinstance(inner, Matching):
        dirs = np.asarray(block, dtype=VERTEX_DTYPE)[inner.dirs - 1] if len(inner) else inner.dirs
        return Matching(n, place(inner.lo).ravel(), np.tile(dirs, len(fixed_values)))
    if isinstance(inner, CycleCover):
        return CycleCover(n, place(inner.cycles).reshape(-1, inner.length))
    path = np.asarray(inner, dtype=VERTEX_DTYPE)
    if path.size and path.max() >= (1 << len(block)):
        raise ValueError(f"Block size mismatch: path does not live on Q_{len(block)}")
    placed = place(path)
    return placed[0] if np.ndim(fixed) == 0 else placed
