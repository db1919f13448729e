import numpy as np

from cubepaths.config import MAX_MATERIALIZED_DIM
from cubepaths.constructions.construction import Construction
from cubepaths.cube import Decomposition, all_vertices, embed


def _embed_paths(args) -> np.ndarray:
    return embed(*args).paths


class ProductSplit(Construction):
    """Combine decompositions of ``Q_i`` (coordinates ``1..i``) and ``Q_j`` (coordinates
    ``i+1..i+j``) with the same ``k`` into one of ``Q_{i+j}``.

    ``b`` is embedded on the fibre over every vertex of ``Q_i`` first, then ``a`` on the fibre
    over every vertex of ``Q_j``, so ``|out| = 2^i |b| + 2^j |a|``.
    """

    def forward(self, a: Decomposition, b: Decomposition) -> Decomposition:
        if a.k != b.k:
            raise ValueError(f"Path lengths differ: {a.k} != {b.k}")
        if not (a.is_uniform and b.is_uniform):
            raise ValueError("Only uniform decompositions can be combined")
        i, j = a.n, b.n
        n = i + j
        if n > MAX_MATERIALIZED_DIM:
            raise ValueError(f"Q_{n} is too large to materialize (limit {MAX_MATERIALIZED_DIM})")
        low, high = range(1, i + 1), range(i + 1, n + 1)
        jobs = [(b, high, all_vertices(i), n), (a, low, all_vertices(j) << i, n)]
        return Decomposition(n, a.k, np.concatenate(self.map(_embed_paths, jobs)))


def product_split(a: Decomposition, b: Decomposition, parallel: bool = False, num_workers: int = -1) -> Decomposition:
    return ProductSplit(parallel=parallel, num_workers=num_workers)(a, b)
