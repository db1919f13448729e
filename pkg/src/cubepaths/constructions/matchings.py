"""Walks along perfect matchings, connector paths, and gluing them into longer paths.

A :class:`MatchingSequence` followed from every vertex of one side gives ``2^(n-1)`` walks
(one per start vertex). Connector paths of length two join two such walks end to end: the
connector ``(u, x, v)`` becomes ``reversed(walk from u) + x + walk from v``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

from cubepaths.config import VERTEX_DTYPE
from cubepaths.cube import ConstructionError, CycleCover, Matching, Side
from cubepaths.cube import coordinate_bit, dimension_matching, parity_array, vertices_of_side


class MatchingKind(Enum):
    DIMENSION = "M"
    INTERNAL = "I"


@dataclass(frozen=True)
class TaggedMatching:
    kind: MatchingKind
    index: int
    matching: Matching

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.index}"


def dimension(n: int, i: int) -> TaggedMatching:
    return TaggedMatching(MatchingKind.DIMENSION, i, dimension_matching(n, i))


def internal(j: int, matching: Matching) -> TaggedMatching:
    return TaggedMatching(MatchingKind.INTERNAL, j, matching)


class MatchingSequence:
    """Ordered matchings of one cube; two INTERNAL matchings are never adjacent and each
    DIMENSION index appears at most once.

    :param items: the tagged matchings, in walking order.
    :param n: cube dimension, required when ``items`` is empty.
    """

    def __init__(self, items: Sequence[TaggedMatching], n: int = None):
        self.items = tuple(items)
        dims = {item.matching.n for item in self.items}
        if n is not None:
            dims.add(n)
        if len(dims) != 1:
            raise ValueError(f"Matchings of a sequence must share one cube dimension, got {sorted(dims)}")
        self.n = dims.pop()
        kinds = [item.kind for item in self.items]
        if any(a is b is MatchingKind.INTERNAL for a, b in zip(kinds, kinds[1:])):
            raise ValueError("Two INTERNAL matchings are adjacent")
        indices = [item.index for item in self.items if item.kind is MatchingKind.DIMENSION]
        if len(set(indices)) != len(indices):
            raise ValueError("A DIMENSION matching is used twice")

    @classmethod
    def alternating(cls, dims: Sequence[TaggedMatching], internals: Sequence[TaggedMatching], n: int = None):
        """``M, I, M, I, ...`` followed by the leftover DIMENSION matchings."""
        if len(dims) < len(internals):
            raise ValueError(f"{len(internals)} INTERNAL matchings need at least as many DIMENSION ones")
        items = []
        for pos, dim in enumerate(dims):
            items.append(dim)
            if pos < len(internals):
                items.append(internals[pos])
        return cls(items, n=n)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[TaggedMatching]:
        return iter(self.items)

    def counts(self) -> tuple[int, int]:
        internals = sum(item.kind is MatchingKind.INTERNAL for item in self.items)
        return len(self) - internals, internals

    def __repr__(self) -> str:
        return f"MatchingSequence({' '.join(item.label for item in self.items)})"


def concat_matchings(seq: MatchingSequence, side: Side) -> np.ndarray:
    """Walk the matchings of ``seq`` in order from every vertex of ``side``.

    :return: ``(2^(n-1), len(seq) + 1)`` array, rows ordered by increasing start vertex.
    """
    walk = [vertices_of_side(seq.n, side)]
    for item in seq:
        if not item.matching.is_perfect():
            raise ValueError(f"Non-perfect matching {item.label} in sequence")
        walk.append(item.matching.partner_table()[walk[-1]])
    return np.stack(walk, axis=1)


@dataclass(frozen=True)
class ConnectorPaths:
    """Length-two paths ``(u, x, v)``: ``even`` ones have both ends even, ``odd`` ones odd."""

    n: int
    even: np.ndarray
    odd: np.ndarray

    def check_endpoints(self):
        for side, conns in ((Side.EVEN, self.even), (Side.ODD, self.odd)):
            ends = np.sort(np.concatenate([conns[:, 0], conns[:, 2]]))
            if not np.array_equal(ends, vertices_of_side(self.n, side)):
                raise ConstructionError("connector endpoint bijection", f"{side.name} side")


def pair_cycles_with_matching(g0: CycleCover, m: Matching) -> ConnectorPaths:
    """Adjoin to each matching edge at a cycle vertex the next edge of its cycle.

    :param g0: cycles covering exactly the layer ``q_c = 0``.
    :param m: the dimension matching of coordinate ``c``.
    """
    coords = np.unique(m.dirs)
    if len(coords) != 1 or not m.is_perfect():
        raise ValueError("Connector matching must be a dimension matching")
    bit = coordinate_bit(int(coords[0]))
    if len(g0) != 1 << (g0.n - 1) or (g0.cycles & bit).any() or m.n != g0.n:
        raise ValueError(f"Cycle cover does not cover exactly the layer q_{coords[0]} = 0")
    x = g0.canonical().cycles
    conns = np.stack([m.partner_table()[x], x, np.roll(x, -1, axis=1)], axis=-1).reshape(-1, 3)
    even = parity_array(conns[:, 0]) == 0
    result = ConnectorPaths(g0.n, conns[even], conns[~even])
    result.check_endpoints()
    return result


def join_with_connectors(walks: np.ndarray, conns: np.ndarray) -> np.ndarray:
    """Glue each connector ``(u, x, v)`` between the walk from ``u`` (reversed) and the walk
    from ``v``. Walks of length ``L`` give paths of length ``2L + 2``."""
    starts = walks[:, 0]
    order = np.argsort(starts, kind="stable")
    ordered = starts[order]

    def locate(vertices: np.ndarray) -> np.ndarray:
        pos = np.minimum(np.searchsorted(ordered, vertices), len(ordered) - 1)
        if len(ordered) == 0 or not (ordered[pos] == vertices).all():
            raise ValueError("Endpoint bijection violated: connector end without a walk")
        return order[pos]

    left, right = locate(conns[:, 0]), locate(conns[:, 2])
    used = np.concatenate([left, right])
    if len(used) != len(walks) or len(np.unique(used)) != len(walks):
        raise ValueError("Endpoint bijection violated: walks and connector ends do not match")
    return np.concatenate([walks[left][:, ::-1], conns[:, 1:2], walks[right]], axis=1)


def cycles_to_paths(g: CycleCover, k: int) -> np.ndarray:
    """Cut every cycle of ``g`` into consecutive paths of length ``k``."""
    if k < 1:
        raise ValueError("Path length must be at least 1")
    if g.num_cycles == 0:
        return np.empty((0, k + 1), dtype=VERTEX_DTYPE)
    if g.length % k:
        raise ValueError(f"Cycle length {g.length} is not divisible by {k}")
    if g.length == k:
        raise ValueError(f"A cycle of length {k} is a closed walk, not a path of length {k}")
    closed = np.concatenate([g.cycles, g.cycles[:, :1]], axis=1)
    pieces = [closed[:, j * k: (j + 1) * k + 1] for j in range(g.length // k)]
    return np.stack(pieces, axis=1).reshape(-1, k + 1)
