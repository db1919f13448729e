"""Bit-level helpers for hypercube vertices and edges.

Coordinate ``q_i`` (1-indexed) is stored at bit ``i - 1`` of an integer. Binary strings print
``q_1`` first, so the string order of vertices is the natural order of their bit-reversed values
(see :func:`vertex_key`). Array helpers work on ``numpy.int64`` vertex arrays.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from cubepaths.config import MAX_DIM, VERTEX_DTYPE


def check_dim(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DIM:
        raise ValueError(f"Dimension must be an integer in 1..{MAX_DIM}, got {n!r}")
    return int(n)


class Side(Enum):
    """Bipartition classes of the hypercube: even and odd popcount."""

    EVEN = 0
    ODD = 1

    def opposite(self) -> "Side":
        return Side.ODD if self is Side.EVEN else Side.EVEN


def full_mask(n: int) -> int:
    return (1 << n) - 1


def coordinate_bit(i: int) -> int:
    return 1 << (i - 1)


def popcount(v: int) -> int:
    return int(v).bit_count()


def vertex_parity(v: int) -> Side:
    """Side of a vertex: EVEN iff it has an even number of set coordinates.

    :param v: vertex as an integer.
    :return: :class:`Side`
    """
    if v < 0:
        raise ValueError(f"Vertex must be non-negative, got {v}")
    return Side(popcount(v) & 1)


def parity_array(vertices) -> np.ndarray:
    """Popcount parity (0 even, 1 odd) of every vertex in an array."""
    x = np.array(vertices, dtype=VERTEX_DTYPE)
    for shift in (32, 16, 8, 4, 2, 1):
        x ^= x >> shift
    return x & 1


def antipode(v: int, n: int) -> int:
    n = check_dim(n)
    if not 0 <= v < (1 << n):
        raise ValueError(f"Vertex {v} is not a vertex of Q_{n}")
    return v ^ full_mask(n)


def is_adjacent(u: int, v: int) -> bool:
    x = u ^ v
    return x != 0 and x & (x - 1) == 0


def flipped_coordinate(u: int, v: int) -> int:
    """Coordinate (1-indexed) in which two adjacent vertices differ."""
    if not is_adjacent(u, v):
        raise ValueError(f"Vertices {u} and {v} are not adjacent")
    return (u ^ v).bit_length()


def flipped_coordinates(u, v) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`flipped_coordinate`.

    :param u: array of vertices.
    :param v: array of vertices, same shape as ``u``.
    :return: ``(dirs, adjacent)`` where ``adjacent`` flags the pairs at Hamming distance one and
        ``dirs`` is only meaningful where ``adjacent`` holds.
    """
    x = np.bitwise_xor(np.asarray(u, dtype=VERTEX_DTYPE), np.asarray(v, dtype=VERTEX_DTYPE))
    adjacent = (x != 0) & ((x & (x - 1)) == 0)
    # powers of two up to 2**62 are exact in float64
    dirs = np.frexp(x.astype(np.float64))[1].astype(VERTEX_DTYPE)
    return dirs, adjacent


def all_vertices(n: int) -> np.ndarray:
    return np.arange(1 << check_dim(n), dtype=VERTEX_DTYPE)


def vertices_of_side(n: int, side: Side) -> np.ndarray:
    """All vertices of one bipartition class, in increasing integer order."""
    vertices = all_vertices(n)
    return vertices[parity_array(vertices) == side.value]


def vertex_key(v: int, n: int) -> int:
    """Bit-reversal of ``v`` over ``n`` bits: ordering by key is ordering by printed string."""
    return int(format(v, f"0{n}b")[::-1], 2)


def vertex_keys(vertices, n: int) -> np.ndarray:
    v = np.asarray(vertices, dtype=VERTEX_DTYPE)
    keys = np.zeros_like(v)
    for b in range(n):
        keys |= ((v >> b) & 1) << (n - 1 - b)
    return keys


def format_vertex(v: int, n: int) -> str:
    return format(v, f"0{n}b")[::-1]


def parse_vertex(token: str) -> int:
    if not token or token.strip("01"):
        raise ValueError(f"Not a binary vertex string: {token!r}")
    return int(token[::-1], 2)


def edge_slots(lo, dirs, n: int) -> np.ndarray:
    """Presence-table slots of canonical edges.

    Slot ``(dir - 1) * 2**(n - 1) + s`` where ``s`` is ``lo`` with bit ``dir - 1`` squeezed out,
    so the slots of ``Q_n`` are exactly ``0 .. n * 2**(n - 1) - 1``.
    """
    lo = np.asarray(lo, dtype=VERTEX_DTYPE)
    d = np.asarray(dirs, dtype=VERTEX_DTYPE) - 1
    low_mask = np.left_shift(1, d) - 1
    squeezed = (lo & low_mask) | ((lo >> (d + 1)) << d)
    return d * (1 << (n - 1)) + squeezed


def step_slots(u, v, n: int) -> np.ndarray:
    """Slots of the edges ``u[i] - v[i]``; the pairs must be adjacent."""
    u = np.asarray(u, dtype=VERTEX_DTYPE)
    v = np.asarray(v, dtype=VERTEX_DTYPE)
    dirs, _ = flipped_coordinates(u, v)
    return edge_slots(u & v, dirs, n)


def num_edges(n: int) -> int:
    return n << (n - 1)


def gray_code_cycle(n: int) -> np.ndarray:
    """Reflected Gray code ``i ^ (i >> 1)``: a Hamiltonian cycle of ``Q_n`` for ``n >= 2``.

    For ``n = 3`` this is 000-100-110-010-011-111-101-001.
    """
    if check_dim(n) < 2:
        raise ValueError("Q_1 has no cycle")
    i = all_vertices(n)
    return i ^ (i >> 1)


@dataclass(frozen=True, order=True)
class Edge:
    """Canonical undirected edge: the endpoint ``lo`` with coordinate ``dir`` equal to 0."""

    lo: int
    dir: int

    def __post_init__(self):
        if self.dir < 1 or self.lo < 0 or (self.lo >> (self.dir - 1)) & 1:
            raise ValueError(f"Not a canonical edge: lo={self.lo}, dir={self.dir}")

    @property
    def hi(self) -> int:
        return self.lo | coordinate_bit(self.dir)

    def endpoints(self) -> tuple[int, int]:
        return self.lo, self.hi

    @classmethod
    def from_endpoints(cls, u: int, v: int) -> "Edge":
        return cls(int(u) & int(v), flipped_coordinate(int(u), int(v)))

    def slot(self, n: int) -> int:
        return int(edge_slots(self.lo, self.dir, n))

    @classmethod
    def from_slot(cls, slot: int, n: int) -> "Edge":
        if not 0 <= slot < num_edges(n):
            raise ValueError(f"Slot {slot} out of range for Q_{n}")
        d, rest = divmod(int(slot), 1 << (n - 1))
        lo = (rest & ((1 << d) - 1)) | ((rest >> d) << (d + 1))
        return cls(lo, d + 1)

    def format(self, n: int) -> str:
        return f"{format_vertex(self.lo, n)}-{format_vertex(self.hi, n)}"
