"""Lift a decomposition of ``Q_m`` to one of ``Q_{tm}`` with paths ``t`` times longer (odd ``t``).

The coordinates of ``Q_{tm}`` form ``m`` consecutive blocks of ``t``. Two vertices are
equivalent when they differ by a union of whole blocks; each class is a copy of ``Q_m`` whose
quotient edge for block ``j`` expands into the ``t`` physical edges flipping that block's
coordinates in increasing order. The expansion starts at the endpoint ``y`` for which
``y`` xor (blocks before ``j``) is even; since ``t`` is odd exactly one endpoint qualifies.
"""

import functools

import numpy as np

from cubepaths.config import MAX_MATERIALIZED_DIM, VERTEX_DTYPE
from cubepaths.constructions.construction import Construction
from cubepaths.cube import Decomposition, check_dim, parity_array, popcount, relabel


def block_masks(m: int, t: int) -> np.ndarray:
    """``masks[b]`` is quotient vertex ``b`` written as whole blocks of ``Q_{tm}``."""
    b = np.arange(1 << m, dtype=VERTEX_DTYPE)
    masks = np.zeros_like(b)
    for j in range(m):
        masks |= ((b >> j) & 1) * (((1 << t) - 1) << (j * t))
    return masks


def class_representatives(m: int, t: int) -> np.ndarray:
    """Vertices whose first coordinate in every block is 0, one per equivalence class."""
    free = [c + 1 for c in range(m * t) if c % t]
    return relabel(np.arange(1 << len(free), dtype=VERTEX_DTYPE), free)


def lift_template(path, t: int, parity: int, masks: np.ndarray) -> np.ndarray:
    """Offsets (from the class representative) of the expanded path, for representatives of
    the given popcount parity."""
    path = [int(b) for b in path]
    offsets = [int(masks[path[0]])]
    for current, following in zip(path, path[1:]):
        j = (current ^ following).bit_length() - 1
        start_here = (parity ^ (popcount(current) & 1)) == j % 2
        piece = [int(masks[current] if start_here else masks[following])]
        for bit in range(j * t, (j + 1) * t):
            piece.append(piece[-1] ^ (1 << bit))
        if not start_here:
            piece.reverse()
        offsets.extend(piece[1:])
    return np.array(offsets, dtype=VERTEX_DTYPE)


def _expand(templates: np.ndarray, reps: np.ndarray, rep_parity: np.ndarray) -> np.ndarray:
    out = reps[None, :, None] ^ templates[:, rep_parity, :]
    return out.reshape(-1, templates.shape[-1])


class BlockLift(Construction):
    """Lift with odd block size ``t``.

    :param t: odd block size.
    :param n: optional target dimension, must equal ``t * inner.n``.
    """

    def __init__(self, t: int, n: int = None, **kwargs):
        if t < 1 or t % 2 == 0:
            raise ValueError(f"Block size must be odd, got {t}")
        self.t = t
        self.n = n
        super().__init__(**kwargs)

    def forward(self, inner: Decomposition) -> Decomposition:
        t, m = self.t, inner.n
        n = check_dim(t * m)
        if self.n is not None and self.n != n:
            raise ValueError(f"t * m = {n} does not match the target dimension {self.n}")
        if t == 1:
            return inner
        if n > MAX_MATERIALIZED_DIM:
            raise ValueError(f"Q_{n} is too large to materialize (limit {MAX_MATERIALIZED_DIM})")
        if not inner.is_uniform:
            raise ValueError("Only uniform decompositions can be lifted")
        masks = block_masks(m, t)
        templates = np.stack([[lift_template(p, t, 0, masks), lift_template(p, t, 1, masks)]
                              for p in inner.paths])
        reps = class_representatives(m, t)
        rep_parity = parity_array(reps)
        chunks = np.array_split(templates, max(1, min(len(templates), 8)))
        parts = self.map(functools.partial(_expand, reps=reps, rep_parity=rep_parity), chunks)
        return Decomposition(n, t * inner.k, np.concatenate(parts))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(t={self.t})"


def lift_by_blocks(t: int, inner: Decomposition, n: int = None, parallel: bool = False,
                   num_workers: int = -1) -> Decomposition:
    """Functional form of :class:`BlockLift`."""
    return BlockLift(t, n=n, parallel=parallel, num_workers=num_workers)(inner)
