"""Odd ``n``, paths of length ``2^r``.

Width-``w`` cubes (``w = r + 1`` for odd ``r``, ``r + 2`` for even ``r``) are split off the high
coordinates until the residual dimension is ``2^r + l`` with ``l`` odd and ``1 <= l <= w - 1``.
On the residual cube, ``(l + 1) / 2`` Hamiltonian cycles of ``Q_w`` are copied onto every
``Q_w`` layer (the ``G_i``); the other cycles are halved into matchings (the ``I_j``). ``G_1`` is
split on coordinate ``w + 1``; its low half plus ``M_{w+1}`` gives the connectors, which glue
walks along the remaining matchings into paths of length ``2^r``. Everything else is cycles cut
into paths.
"""

import os
from dataclasses import dataclass
from typing import Union

import numpy as np
from loguru import logger

from cubepaths.config import MAX_MATERIALIZED_DIM, VERTEX_DTYPE
from cubepaths.constructions.antipodal import single_edge_decomposition
from cubepaths.constructions.construction import Construction
from cubepaths.constructions.hamiltonian import hamiltonian_decomposition
from cubepaths.constructions.matchings import (
    MatchingSequence,
    concat_matchings,
    cycles_to_paths,
    dimension,
    internal,
    join_with_connectors,
    pair_cycles_with_matching,
)
from cubepaths.constructions.product import ProductSplit
from cubepaths.cube import ConstructionError, CycleCover, Decomposition, Edge, Matching, Side
from cubepaths.cube import dimension_matching, embed, gray_code_cycle, num_edges


@dataclass(frozen=True)
class PowCaseParams:
    """Parameters of the residual cube ``Q_n``, ``n = 2^r + l``."""

    n: int
    r: int
    l: int  # noqa: E741
    w: int

    def __post_init__(self):
        if self.r < 1 or self.w != (self.r + 1 if self.r % 2 else self.r + 2):
            raise ValueError(f"Width {self.w} does not match exponent {self.r}")
        if self.n != (1 << self.r) + self.l or self.l % 2 == 0 or not 1 <= self.l <= self.w - 1:
            raise ValueError(f"Residual n={self.n} is not 2^{self.r} + l with odd l in 1..{self.w - 1}")
        if not self.is_special and self.dimension_matchings < self.internal_matchings:
            raise ConstructionError("matching count",
                                    f"{self.dimension_matchings} dimension < {self.internal_matchings} internal")

    @property
    def k(self) -> int:
        return 1 << self.r

    @property
    def cycles_kept(self) -> int:
        return (self.l + 1) // 2

    @property
    def internal_matchings(self) -> int:
        return self.w - (self.l + 1)

    @property
    def dimension_matchings(self) -> int:
        """Dimension matchings left after the connector coordinate ``w + 1``."""
        return self.n - self.w - 1

    @property
    def walk_length(self) -> int:
        return (1 << (self.r - 1)) - 1

    @property
    def is_special(self) -> bool:
        return self.r == 2 and self.l == 1


def plan_power_of_two(n: int, r: int):
    """Residual parameters and the number of width-``w`` factors to split off.

    :return: ``(params, factors)``; ``params`` is ``None`` for ``r = 0``.
    """
    if n % 2 == 0 or r < 0 or (1 << r) >= n:
        raise ValueError(f"Need odd n and 2^r < n, got n={n}, r={r}")
    if r == 0:
        return None, 0
    w = r + 1 if r % 2 else r + 2
    l = (n - (1 << r)) % w  # noqa: E741
    params = PowCaseParams(n=(1 << r) + l, r=r, l=l, w=w)
    return params, (n - params.n) // w


def q3_complement_matching() -> Matching:
    """Edges of ``Q_3`` outside the Gray 8-cycle; a perfect matching."""
    cycle = CycleCover(3, gray_code_cycle(3))
    used = set(cycle.slots().tolist())
    return Matching.from_edges(3, [Edge.from_slot(s, 3) for s in range(num_edges(3)) if s not in used])


def special_q5_k4() -> Decomposition:
    """``Q_5`` into 20 paths of length 4.

    Every ``(q_4, q_5)`` layer carries the Gray cycle ``C`` of ``Q_3`` and the complementary
    matching ``I``. The cycles with ``q_4 = 0`` plus ``M_4`` give connectors; even connectors
    are extended by ``I``, odd ones by ``M_5``; the ``q_4 = 1`` cycles are halved.
    """
    n, block = 5, (1, 2, 3)
    layers = np.arange(4, dtype=VERTEX_DTYPE) << 3
    g = embed(CycleCover(3, gray_code_cycle(3)), block, layers, n)
    matching = embed(q3_complement_matching(), block, layers, n)
    g_low, g_high = g.split_on(4)
    conns = pair_cycles_with_matching(g_low, dimension_matching(n, 4))
    even_walks = concat_matchings(MatchingSequence([internal(1, matching)]), Side.EVEN)
    odd_walks = concat_matchings(MatchingSequence([dimension(n, 5)]), Side.ODD)
    paths = [
        join_with_connectors(even_walks, conns.even),
        join_with_connectors(odd_walks, conns.odd),
        cycles_to_paths(g_high, 4),
    ]
    return Decomposition(n, 4, np.concatenate(paths))


def small_cube_paths(w: int, k: int, cache_path=None) -> Decomposition:
    """``Q_w`` (``w`` even) into paths of length ``k`` by cutting its Hamiltonian cycles."""
    cycles = hamiltonian_decomposition(w, cache_path=cache_path)
    return Decomposition(w, k, np.concatenate([cycles_to_paths(c, k) for c in cycles]))


def residual_core(params: PowCaseParams, cache_path=None) -> Decomposition:
    """Paths of length ``2^r`` on the residual cube ``Q_{2^r + l}``."""
    if params.is_special:
        return special_q5_k4()
    n, w, k = params.n, params.w, params.k
    small = tuple(range(1, w + 1))
    copies = np.arange(1 << (n - w), dtype=VERTEX_DTYPE) << w
    ham = hamiltonian_decomposition(w, cache_path=cache_path)
    kept, halved = ham[:params.cycles_kept], ham[params.cycles_kept:]
    g = [embed(c, small, copies, n) for c in kept]
    internals = [internal(j, embed(mm, small, copies, n))
                 for j, mm in enumerate((mm for c in halved for mm in c.alternate_matchings()), start=1)]
    if len(internals) != params.internal_matchings:
        raise ConstructionError("internal matching count", f"{len(internals)} != {params.internal_matchings}")

    connector = w + 1
    g_low, g_high = g[0].split_on(connector)
    conns = pair_cycles_with_matching(g_low, dimension_matching(n, connector))

    dims = [dimension(n, i) for i in range(w + 2, n + 1)]
    split = (len(internals) + 1) // 2
    even_internal, odd_internal = internals[:split], internals[split:]
    even_dims = params.walk_length - len(even_internal)
    odd_dims = params.walk_length - len(odd_internal)
    if even_dims < len(even_internal) or odd_dims < len(odd_internal) or even_dims + odd_dims != len(dims):
        raise ConstructionError("sequence balance",
                                f"dims={len(dims)} internal={len(internals)} walk={params.walk_length}")
    even_seq = MatchingSequence.alternating(dims[:even_dims], even_internal, n=n)
    odd_seq = MatchingSequence.alternating(dims[even_dims:], odd_internal, n=n)
    logger.debug(f"Q_{n}, k={k}: even walks {even_seq}, odd walks {odd_seq}")

    paths = [
        join_with_connectors(concat_matchings(even_seq, Side.EVEN), conns.even),
        join_with_connectors(concat_matchings(odd_seq, Side.ODD), conns.odd),
        cycles_to_paths(g_high, k),
    ]
    paths.extend(cycles_to_paths(c, k) for c in g[1:])
    core = Decomposition(n, k, np.concatenate(paths))
    if len(core) != core.expected_count:
        raise ConstructionError("edge budget", f"{len(core)} paths, expected {core.expected_count}")
    return core


class PowerOfTwo(Construction):
    """Odd ``n`` into paths of length ``2^r``; see the module docstring.

    :param r: exponent, ``2^r < n``.
    :param cache_path: optional Hamiltonian cache file.
    """

    def __init__(self, r: int, cache_path: Union[str, os.PathLike, None] = None, **kwargs):
        self.r = r
        self.cache_path = cache_path
        super().__init__(**kwargs)

    def forward(self, n: int) -> Decomposition:
        params, factors = plan_power_of_two(n, self.r)
        if n > MAX_MATERIALIZED_DIM:
            raise ValueError(f"Q_{n} is too large to materialize (limit {MAX_MATERIALIZED_DIM})")
        if params is None:
            return single_edge_decomposition(n)
        logger.info(f"Q_{n} into paths of length {params.k}: residual Q_{params.n} (l={params.l}, w={params.w}), "
                    f"{factors} split factor(s)")
        result = residual_core(params, self.cache_path)
        if factors:
            factor = small_cube_paths(params.w, params.k, self.cache_path)
            split = ProductSplit(parallel=self.parallel, num_workers=self.num_workers)
            for _ in range(factors):
                result = split(result, factor)
        return result

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(r={self.r})"


def power_of_two_decomposition(n: int, r: int, cache_path=None, parallel: bool = False,
                               num_workers: int = -1) -> Decomposition:
    return PowerOfTwo(r, cache_path=cache_path, parallel=parallel, num_workers=num_workers)(n)
