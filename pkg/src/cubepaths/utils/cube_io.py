"""Text formats: decomposition certificates (``QPATH``) and Hamiltonian caches (``QHAM``).

Vertices are written as ``n``-character binary strings with ``q_1`` leftmost. Decomposition
bodies are sorted, so identical decompositions serialize to identical bytes.
"""

import os
import re
from pathlib import Path
from typing import IO, Union

import numpy as np

from cubepaths.config import CACHE_ENV_VAR, DECOMPOSITION_MAGIC, DEFAULT_CACHE_PATH, FORMAT_VERSION, HAM_MAGIC
from cubepaths.config import MAX_DIM, VERTEX_DTYPE
from cubepaths.cube import Decomposition, format_vertex, parse_vertex

HEADER_RE = re.compile(rf"{DECOMPOSITION_MAGIC} {FORMAT_VERSION} n=([0-9]+) k=([0-9]+) count=([0-9]+)")
HAM_HEADER_RE = re.compile(rf"{HAM_MAGIC} {FORMAT_VERSION} m=([0-9]+) cycles=([0-9]+)")

CHUNK = 1 << 16
ZERO, ONE, SPACE, NEWLINE = (ord(c) for c in "01 \n")


class ParseError(ValueError):
    """Malformed certificate or cache file.

    :param line: 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: int = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def decomposition_header(n: int, k: int, count: int) -> str:
    return f"{DECOMPOSITION_MAGIC} {FORMAT_VERSION} n={n} k={k} count={count}"


def _encode_rows(rows: np.ndarray, n: int) -> bytes:
    """One text line per row of ``rows`` (vertices in ``n``-bit strings, space separated)."""
    count, width = rows.shape
    chars = np.empty((count, width, n + 1), dtype=np.uint8)
    for b in range(n):
        chars[:, :, b] = ((rows >> b) & 1).astype(np.uint8) + ZERO
    chars[:, :, n] = SPACE
    chars[:, -1, n] = NEWLINE
    return chars.tobytes()


def _iter_body(d: Decomposition):
    ordered = d.canonical_order()
    if ordered.is_uniform:
        for start in range(0, len(ordered), CHUNK):
            yield _encode_rows(ordered.paths[start: start + CHUNK], d.n)
    else:
        for p in ordered.paths:
            yield (" ".join(format_vertex(int(v), d.n) for v in p) + "\n").encode("ascii")


def dump_decomposition(d: Decomposition, handle: IO[bytes]):
    handle.write((decomposition_header(d.n, d.k, len(d)) + "\n").encode("ascii"))
    for block in _iter_body(d):
        handle.write(block)


def serialize_decomposition(d: Decomposition) -> str:
    head = decomposition_header(d.n, d.k, len(d)) + "\n"
    return head + b"".join(_iter_body(d)).decode("ascii")


def write_decomposition(d: Decomposition, path: Union[str, os.PathLike]):
    """Write ``d`` as a ``QPATH`` certificate.

    :param d: decomposition to write.
    :param path: destination file, overwritten.
    """
    with open(path, "wb") as f:
        dump_decomposition(d, f)


def _parse_header(line: str) -> tuple[int, int, int]:
    match = HEADER_RE.fullmatch(line)
    if match is None:
        raise ParseError(f"Bad header {line!r}", line=1)
    n, k, count = (int(g) for g in match.groups())
    if not 1 <= n <= MAX_DIM or k < 1:
        raise ParseError(f"Header values out of range: n={n}, k={k}", line=1)
    return n, k, count


def _parse_tokens(line: str, n: int, lineno: int) -> list[int]:
    tokens = line.split(" ")
    for token in tokens:
        if len(token) != n:
            raise ParseError(f"Token {token!r} does not have length {n}", line=lineno)
    try:
        return [parse_vertex(t) for t in tokens]
    except ValueError as e:
        raise ParseError(str(e), line=lineno) from e


def _decode_uniform(body: list[str], n: int) -> np.ndarray:
    """Fast path: every line has the same width. Raises ParseError on any bad character."""
    width = len(body[0]) + 1
    raw = np.frombuffer(("\n".join(body) + "\n").encode("ascii"), dtype=np.uint8)
    chars = raw.reshape(len(body), width // (n + 1), n + 1)
    separators = chars[:, :, n]
    if (separators[:, :-1] != SPACE).any() or (separators[:, -1] != NEWLINE).any():
        bad = int(np.argmax(((separators[:, :-1] != SPACE).any(axis=1)) | (separators[:, -1] != NEWLINE)))
        raise ParseError("Malformed token separators", line=bad + 2)
    digits = chars[:, :, :n]
    invalid = (digits != ZERO) & (digits != ONE)
    if invalid.any():
        bad = int(np.argmax(invalid.any(axis=(1, 2))))
        raise ParseError("Non-binary character in vertex", line=bad + 2)
    vertices = np.zeros(chars.shape[:2], dtype=VERTEX_DTYPE)
    for b in range(n):
        vertices |= (digits[:, :, b] - ZERO).astype(VERTEX_DTYPE) << b
    return vertices


def _split_lines(text: str) -> list[str]:
    """Lines separated by ``\\n`` only; one trailing newline is optional."""
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


def parse_decomposition(text: str) -> Decomposition:
    """Parse a ``QPATH`` certificate.

    :param text: file contents; a missing trailing newline is tolerated.
    :return: the decomposition, unvalidated.
    """
    lines = _split_lines(text)
    if not lines:
        raise ParseError("Empty file")
    n, k, count = _parse_header(lines[0])
    body = lines[1:]
    if len(body) != count:
        raise ParseError(f"Header announces {count} paths, body has {len(body)}")
    if not body:
        return Decomposition(n, k, np.empty((0, k + 1), dtype=VERTEX_DTYPE))
    widths = {len(line) for line in body}
    if len(widths) == 1 and (widths.pop() + 1) % (n + 1) == 0:
        try:
            return Decomposition(n, k, _decode_uniform(body, n))
        except ParseError:
            pass  # fall through to the line-by-line parser for a precise location
    rows = [_parse_tokens(line, n, lineno) for lineno, line in enumerate(body, start=2)]
    return Decomposition(n, k, rows)


def read_decomposition(path: Union[str, os.PathLike]) -> Decomposition:
    try:
        with open(path, encoding="ascii", newline="") as f:
            return parse_decomposition(f.read())
    except UnicodeDecodeError as e:
        raise ParseError(f"Non-ASCII content in {path}") from e


def resolve_cache_path(flag: Union[str, os.PathLike, None] = None) -> Path:
    """Cache location: explicit flag, then ``$QPATH_CACHE``, then ``./qham.cache``."""
    if flag:
        return Path(flag)
    return Path(os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_PATH)


def format_ham_section(m: int, cycles) -> str:
    lines = [f"{HAM_MAGIC} {FORMAT_VERSION} m={m} cycles={len(cycles)}"]
    lines.extend(" ".join(format_vertex(int(v), m) for v in cycle) for cycle in cycles)
    return "\n".join(lines) + "\n"


def parse_ham_cache(text: str) -> dict[int, list[np.ndarray]]:
    """Parse one or more ``QHAM`` sections into ``{m: [cycle, ...]}`` (cycles unverified)."""
    lines = _split_lines(text)
    sections = {}
    lineno = 0
    while lineno < len(lines):
        if not lines[lineno]:
            lineno += 1
            continue
        match = HAM_HEADER_RE.fullmatch(lines[lineno])
        if match is None:
            raise ParseError(f"Bad cache header {lines[lineno]!r}", line=lineno + 1)
        m, count = int(match.group(1)), int(match.group(2))
        if not 1 <= m <= MAX_DIM:
            raise ParseError(f"Cache dimension out of range: {m}", line=lineno + 1)
        if m in sections:
            raise ParseError(f"Duplicate cache section for m={m}", line=lineno + 1)
        body = lines[lineno + 1: lineno + 1 + count]
        if len(body) != count:
            raise ParseError(f"Section m={m} announces {count} cycles, found {len(body)}", line=lineno + 1)
        sections[m] = [np.array(_parse_tokens(line, m, lineno + 2 + i), dtype=VERTEX_DTYPE)
                       for i, line in enumerate(body)]
        lineno += 1 + count
    return sections


def read_ham_cache(path: Union[str, os.PathLike]) -> dict[int, list[np.ndarray]]:
    with open(path, encoding="ascii", newline="") as f:
        return parse_ham_cache(f.read())


def write_ham_cache(path: Union[str, os.PathLike], m: int, cycles):
    """Write (or replace) the section for ``m``, keeping other sections of an existing file."""
    sections = read_ham_cache(path) if Path(path).exists() else {}
    sections[m] = [np.asarray(c, dtype=VERTEX_DTYPE) for c in cycles]
    with open(path, "w", encoding="ascii") as f:
        for dim in sorted(sections):
            f.write(format_ham_section(dim, sections[dim]))
