"""Independent validation of paths, walks, decompositions and Hamiltonian decompositions.

Only cube-core types are used here; nothing is imported from the constructions. Every check
reports the first failure of a fixed scan: paths in input order, and within a path its length,
then vertex by vertex left to right (range, adjacency with the previous vertex, repetition),
then the edges of the path against those already seen. Coverage and count come last.
"""

import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from cubepaths.config import VERTEX_DTYPE
from cubepaths.cube import CycleCover, Decomposition, Edge
from cubepaths.cube import flipped_coordinates, format_vertex, is_adjacent, num_edges, step_slots

CHUNK_SLOTS = 1 << 22


class FailureCause(Enum):
    NON_ADJACENT_STEP = "NON_ADJACENT_STEP"
    REPEATED_VERTEX = "REPEATED_VERTEX"
    WRONG_LENGTH = "WRONG_LENGTH"
    DUPLICATE_EDGE = "DUPLICATE_EDGE"
    MISSING_EDGE = "MISSING_EDGE"
    WRONG_PATH_COUNT = "WRONG_PATH_COUNT"
    VERTEX_OUT_OF_RANGE = "VERTEX_OUT_OF_RANGE"
    WRONG_CYCLE_COUNT = "WRONG_CYCLE_COUNT"


@dataclass(frozen=True)
class Failure:
    """Structured cause of a rejection.

    :param cause: category of the failure.
    :param path_index: index of the offending path (or cycle) in input order.
    :param position: vertex index inside that path; for edge failures, the step index.
    :param edge: offending edge for DUPLICATE_EDGE / MISSING_EDGE.
    :param expected: expected length or count.
    :param actual: observed length or count.
    """

    cause: FailureCause
    path_index: int = None
    position: int = None
    edge: Edge = None
    expected: int = None
    actual: int = None

    def describe(self, n: int = None) -> str:
        parts = [self.cause.value]
        if self.path_index is not None:
            parts.append(f"path={self.path_index}")
        if self.position is not None:
            parts.append(f"position={self.position}")
        if self.edge is not None:
            parts.append(f"edge={self.edge.format(n) if n else self.edge}")
        if self.expected is not None:
            parts.append(f"expected={self.expected} actual={self.actual}")
        return " ".join(parts)


@dataclass(frozen=True)
class ValidationReport:
    failure: Failure = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def cause(self) -> Union[FailureCause, None]:
        return None if self.failure is None else self.failure.cause

    def describe(self, n: int = None) -> str:
        return "OK" if self.ok else self.failure.describe(n)


OK = ValidationReport()


def _fail(cause: FailureCause, **fields) -> ValidationReport:
    return ValidationReport(Failure(cause, **fields))


def _scan_vertices(vertices: Sequence[int], n: int, distinct: bool, closed: bool = False) -> ValidationReport:
    limit = 1 << n
    seen = set()
    prev = None
    for pos, v in enumerate(vertices):
        if not 0 <= v < limit:
            return _fail(FailureCause.VERTEX_OUT_OF_RANGE, position=pos)
        if prev is not None and not is_adjacent(prev, v):
            return _fail(FailureCause.NON_ADJACENT_STEP, position=pos)
        if distinct and v in seen:
            return _fail(FailureCause.REPEATED_VERTEX, position=pos)
        seen.add(v)
        prev = v
    if closed and vertices and not is_adjacent(vertices[-1], vertices[0]):
        return _fail(FailureCause.NON_ADJACENT_STEP, position=len(vertices))
    return OK


def validate_path(p, n: int, k: int) -> ValidationReport:
    """Check that ``p`` is a path of length ``k`` in ``Q_n``.

    :param p: sequence of vertices.
    :param n: cube dimension.
    :param k: required length in edges (at least 1).
    :return: :class:`ValidationReport`; ``position`` of a step failure is the index of the
        vertex the step arrives at.
    """
    vertices = np.asarray(p, dtype=VERTEX_DTYPE).ravel().tolist()
    if k < 1 or len(vertices) != k + 1:
        return _fail(FailureCause.WRONG_LENGTH, expected=k, actual=len(vertices) - 1)
    return _scan_vertices(vertices, n, distinct=True)


def validate_walk(w, n: int, k: int) -> ValidationReport:
    """Same as :func:`validate_path` but vertices may repeat."""
    vertices = np.asarray(w, dtype=VERTEX_DTYPE).ravel().tolist()
    if k < 1 or len(vertices) != k + 1:
        return _fail(FailureCause.WRONG_LENGTH, expected=k, actual=len(vertices) - 1)
    return _scan_vertices(vertices, n, distinct=False)


def _intrinsic_mask(paths: np.ndarray, n: int, distinct: bool) -> np.ndarray:
    """Per row: True when the row fails range, adjacency or (optionally) distinctness."""
    in_range = ((paths >= 0) & (paths < (1 << n))).all(axis=1)
    _, adjacent = flipped_coordinates(paths[:, :-1], paths[:, 1:])
    good = in_range & adjacent.all(axis=1)
    if distinct:
        ordered = np.sort(paths, axis=1)
        good &= (ordered[:, 1:] != ordered[:, :-1]).all(axis=1)
    return ~good


class EdgeTable:
    """Presence flags for the ``n * 2**(n - 1)`` edge slots of ``Q_n``, packed eight per byte."""

    def __init__(self, n: int):
        self.n = n
        self.size = num_edges(n)
        self.bits = np.zeros((self.size + 7) // 8, dtype=np.uint8)

    def __len__(self) -> int:
        return self.size

    def contains(self, slots: np.ndarray) -> np.ndarray:
        slots = np.asarray(slots, dtype=VERTEX_DTYPE)
        return ((self.bits[slots >> 3] >> (slots & 7).astype(np.uint8)) & 1).astype(bool)

    def add(self, slots: np.ndarray):
        slots = np.asarray(slots, dtype=VERTEX_DTYPE)
        np.bitwise_or.at(self.bits, slots >> 3, np.left_shift(1, slots & 7).astype(np.uint8))

    def first_repeat(self, slots: np.ndarray) -> int:
        """Index of the first slot already present or repeated earlier in ``slots``, or -1."""
        slots = np.asarray(slots, dtype=VERTEX_DTYPE)
        _, first = np.unique(slots, return_index=True)
        repeated = np.ones(len(slots), dtype=bool)
        repeated[first] = False
        repeated |= self.contains(slots)
        hits = np.flatnonzero(repeated)
        return int(hits[0]) if len(hits) else -1

    def count(self) -> int:
        return int(np.unpackbits(self.bits).sum(dtype=np.int64))

    def first_missing(self) -> int:
        """Lowest absent slot, or -1 when every edge is present."""
        whole = self.size // 8
        gaps = np.flatnonzero(self.bits[:whole] != 0xFF)
        if len(gaps):
            byte = int(gaps[0])
        elif self.size % 8 and int(self.bits[-1]) != (1 << self.size % 8) - 1:
            byte = whole
        else:
            return -1
        value = int(self.bits[byte])
        return 8 * byte + ((~value & (value + 1)).bit_length() - 1)


def _row_chunks(paths: np.ndarray, k: int):
    step = max(1, CHUNK_SLOTS // max(1, k))
    for start in range(0, len(paths), step):
        yield start, paths[start: start + step]


def _coverage_and_count(table: EdgeTable, count: int, expected: int, cause: FailureCause):
    missing = table.first_missing()
    if missing >= 0:
        return _fail(FailureCause.MISSING_EDGE, edge=Edge.from_slot(missing, table.n))
    if count != expected:
        return _fail(cause, expected=expected, actual=count)
    return OK


def _validate_sequential(d: Decomposition, distinct: bool) -> ValidationReport:
    check = validate_path if distinct else validate_walk
    table = EdgeTable(d.n)
    for index, p in enumerate(d.paths):
        report = check(p, d.n, d.k)
        if not report:
            return ValidationReport(dataclasses.replace(report.failure, path_index=index))
        slots = step_slots(p[:-1], p[1:], d.n)
        step = table.first_repeat(slots)
        if step >= 0:
            return _fail(FailureCause.DUPLICATE_EDGE, path_index=index, position=step,
                         edge=Edge.from_slot(int(slots[step]), d.n))
        table.add(slots)
    return _coverage_and_count(table, len(d), d.expected_count, FailureCause.WRONG_PATH_COUNT)


def _validate_family(d: Decomposition, distinct: bool, num_workers: int) -> ValidationReport:
    if not d.is_uniform:
        return _validate_sequential(d, distinct)
    n, k, paths = d.n, d.k, d.paths
    if len(paths) and paths.shape[1] != k + 1:
        return _fail(FailureCause.WRONG_LENGTH, path_index=0, expected=k, actual=paths.shape[1] - 1)

    if num_workers != 1 and len(paths) > 1:
        chunks = np.array_split(paths, max(1, min(len(paths), 4 * abs(num_workers))))
        masks = Parallel(n_jobs=num_workers)(delayed(_intrinsic_mask)(c, n, distinct) for c in chunks)
        bad = np.concatenate(masks)
    else:
        masks = [_intrinsic_mask(c, n, distinct) for _, c in _row_chunks(paths, k)]
        bad = np.concatenate([np.zeros(0, dtype=bool)] + masks)
    first_bad = int(np.argmax(bad)) if bad.any() else len(paths)

    # edges of the paths scanned before the first intrinsically broken one
    table = EdgeTable(n)
    for start, chunk in _row_chunks(paths[:first_bad], k):
        slots = step_slots(chunk[:, :-1], chunk[:, 1:], n).ravel()
        flat = table.first_repeat(slots)
        if flat >= 0:
            return _fail(FailureCause.DUPLICATE_EDGE, path_index=start + flat // k, position=flat % k,
                         edge=Edge.from_slot(int(slots[flat]), n))
        table.add(slots)
    if first_bad < len(paths):
        check = validate_path if distinct else validate_walk
        report = check(paths[first_bad], n, k)
        return ValidationReport(dataclasses.replace(report.failure, path_index=first_bad))
    return _coverage_and_count(table, len(paths), d.expected_count, FailureCause.WRONG_PATH_COUNT)


def validate_decomposition(d: Decomposition, num_workers: int = 1) -> ValidationReport:
    """Check that ``d`` partitions ``E(Q_n)`` into paths of length ``k``.

    Edges are tracked in a bit-packed presence table, filled chunk by chunk. With ``num_workers != 1`` the per-path
    checks are chunked over joblib workers; the report is the one of the sequential scan.

    :param d: the claimed decomposition.
    :param num_workers: joblib ``n_jobs`` for the per-path checks.
    :return: :class:`ValidationReport`
    """
    report = _validate_family(d, distinct=True, num_workers=num_workers)
    logger.debug(f"validated n={d.n} k={d.k} count={len(d)}: {report.describe(d.n)}")
    return report


def validate_walk_decomposition(d: Decomposition, num_workers: int = 1) -> ValidationReport:
    """Check that the walks of ``d`` use every edge of ``Q_n`` exactly once."""
    return _validate_family(d, distinct=False, num_workers=num_workers)


def validate_hamiltonian_decomposition(m: int, cycles) -> ValidationReport:
    """Check ``m / 2`` edge-disjoint Hamiltonian cycles covering ``E(Q_m)``.

    :param m: even cube dimension.
    :param cycles: sequence of vertex sequences (closing edge implied) or :class:`CycleCover`.
    """
    rows = []
    for c in cycles:
        if isinstance(c, CycleCover):
            rows.extend(c.cycles)
        else:
            rows.append(np.asarray(c, dtype=VERTEX_DTYPE).ravel())
    size = 1 << m
    table = EdgeTable(m)
    for index, cycle in enumerate(rows):
        if len(cycle) != size:
            return _fail(FailureCause.WRONG_LENGTH, path_index=index, expected=size, actual=len(cycle))
        report = _scan_vertices(cycle.tolist(), m, distinct=True, closed=True)
        if not report:
            return ValidationReport(dataclasses.replace(report.failure, path_index=index))
        slots = step_slots(cycle, np.roll(cycle, -1), m)
        step = table.first_repeat(slots)
        if step >= 0:
            return _fail(FailureCause.DUPLICATE_EDGE, path_index=index, position=step,
                         edge=Edge.from_slot(int(slots[step]), m))
        table.add(slots)
    return _coverage_and_count(table, len(rows), m // 2, FailureCause.WRONG_CYCLE_COUNT)


def describe_path(p, n: int) -> str:
    return " ".join(format_vertex(int(v), n) for v in p)
