import os
from typing import Union

import numpy as np
from loguru import logger

from cubepaths.checker import infeasibility_reason, odd_part
from cubepaths.config import MAX_MATERIALIZED_DIM
from cubepaths.constructions.antipodal import antipodal_decomposition, single_edge_decomposition
from cubepaths.constructions.hamiltonian import hamiltonian_decomposition
from cubepaths.constructions.lift import BlockLift
from cubepaths.constructions.matchings import cycles_to_paths
from cubepaths.constructions.power import PowerOfTwo
from cubepaths.cube import Decomposition, InfeasibleError

PathLike = Union[str, os.PathLike, None]


def decompose(n: int, k: int, cache_path: PathLike = None, parallel: bool = False,
              num_workers: int = -1) -> Decomposition:
    """Decompose ``Q_n`` (``n`` odd) into paths of length ``k``.

    Writes ``k = t 2^r`` with ``t`` odd, decomposes ``Q_{n/t}`` into paths of length ``2^r`` and
    lifts with block size ``t``.

    :param n: odd dimension.
    :param k: path length with ``k | n 2^(n-1)`` and ``k <= n``.
    :param cache_path: optional Hamiltonian cache file.
    :param parallel: fan independent pieces out over joblib workers.
    :param num_workers: joblib ``n_jobs``.
    :raises InfeasibleError: naming the violated condition.
    """
    reason = infeasibility_reason(n, k)
    if reason:
        raise InfeasibleError(reason, n, k)
    if n > MAX_MATERIALIZED_DIM:
        raise ValueError(f"Q_{n} is too large to materialize (limit {MAX_MATERIALIZED_DIM})")
    if k == 1:
        return single_edge_decomposition(n)
    if k == n:
        return antipodal_decomposition(n)
    t = odd_part(k)
    r = (k // t).bit_length() - 1
    logger.info(f"Q_{n}, k={k}: t={t}, r={r}")
    base = PowerOfTwo(r, cache_path=cache_path, parallel=parallel, num_workers=num_workers)(n // t)
    return BlockLift(t, n=n, parallel=parallel, num_workers=num_workers)(base)


def even_path_length(n: int, t: int) -> int:
    return t << (n // t - 1)


def even_block_size(n: int, k: int) -> Union[int, None]:
    """The odd divisor ``t`` of ``n`` with ``k = t 2^(n/t - 1)``, if any."""
    for t in range(1, n + 1, 2):
        if n % t == 0 and even_path_length(n, t) == k:
            return t
    return None


def even_n_decomposition(n: int, t: int, cache_path: PathLike = None, parallel: bool = False,
                         num_workers: int = -1) -> Decomposition:
    """``Q_n`` (``n`` even) into paths of length ``t 2^(n/t - 1)``: halve the Hamiltonian
    cycles of ``Q_{n/t}``, then lift with block size ``t``."""
    if n % 2 or t < 1 or t % 2 == 0 or n % t:
        raise ValueError(f"Need even n and an odd divisor t of n, got n={n}, t={t}")
    if n > MAX_MATERIALIZED_DIM:
        raise ValueError(f"Q_{n} is too large to materialize (limit {MAX_MATERIALIZED_DIM})")
    m = n // t
    half = 1 << (m - 1)
    cycles = hamiltonian_decomposition(m, cache_path=cache_path)
    base = Decomposition(m, half, np.concatenate([cycles_to_paths(c, half) for c in cycles]))
    return BlockLift(t, n=n, parallel=parallel, num_workers=num_workers)(base)
