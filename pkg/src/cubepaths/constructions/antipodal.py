import numpy as np

from cubepaths.config import VERTEX_DTYPE
from cubepaths.cube import Decomposition, Side, all_vertices, check_dim, coordinate_bit, vertices_of_side


def antipodal_decomposition(n: int) -> Decomposition:
    """Decompose ``Q_n`` into its ``2^(n-1)`` natural antipodal paths.

    The path from an even vertex ``q`` flips coordinates ``1, 2, ..., n`` in increasing order,
    so it visits ``q ^ 0, q ^ 1, q ^ 3, ..., q ^ (2^n - 1)``.

    :param n: cube dimension.
    :return: decomposition with ``k = n``.
    """
    n = check_dim(n)
    starts = vertices_of_side(n, Side.EVEN)
    prefixes = (np.left_shift(1, np.arange(n + 1, dtype=VERTEX_DTYPE))) - 1
    return Decomposition(n, n, starts[:, None] ^ prefixes[None, :])


def single_edge_decomposition(n: int) -> Decomposition:
    """Every edge of ``Q_n`` as its own path, grouped by coordinate."""
    n = check_dim(n)
    vertices = all_vertices(n)
    paths = []
    for i in range(1, n + 1):
        lo = vertices[(vertices & coordinate_bit(i)) == 0]
        paths.append(np.stack([lo, lo | coordinate_bit(i)], axis=1))
    return Decomposition(n, 1, np.concatenate(paths))


def subdivide(d: Decomposition, k: int) -> Decomposition:
    """Cut every path of ``d`` into ``d.k / k`` consecutive pieces of length ``k``.

    Pieces of one path stay adjacent in the output, neighbouring pieces share their cut vertex.
    """
    if k < 1 or d.k % k:
        raise ValueError(f"Piece length {k} does not divide path length {d.k}")
    if not d.is_uniform:
        raise ValueError("Only uniform decompositions can be subdivided")
    pieces = [d.paths[:, j * k: (j + 1) * k + 1] for j in range(d.k // k)]
    return Decomposition(d.n, k, np.stack(pieces, axis=1).reshape(-1, k + 1))
