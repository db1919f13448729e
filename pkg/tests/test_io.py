import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import numpy as np

from cubepaths.checker import FailureCause, validate_decomposition
from cubepaths.constructions import antipodal_decomposition, decompose
from cubepaths.utils import ParseError, parse_decomposition, parse_ham_cache, read_decomposition
from cubepaths.utils import resolve_cache_path, serialize_decomposition, write_decomposition

Q3_FILE = """QPATH v1 n=3 k=3 count=4
000 100 110 111
011 111 101 100
101 001 011 010
110 010 000 001
"""


class DecompositionFileTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.tmpdir = tempfile.TemporaryDirectory()

    @classmethod
    def tearDownClass(cls):
        cls.tmpdir.cleanup()

    def test_q3_text(self):
        assert serialize_decomposition(antipodal_decomposition(3)) == Q3_FILE

    def test_round_trip(self):
        for d in (antipodal_decomposition(5), decompose(9, 6)):
            text = serialize_decomposition(d)
            parsed = parse_decomposition(text)
            assert parsed == d
            assert serialize_decomposition(parsed) == text

    def test_body_is_sorted(self):
        lines = serialize_decomposition(decompose(7, 4)).splitlines()[1:]
        assert lines == sorted(lines)

    def test_file_round_trip(self):
        path = os.path.join(self.tmpdir.name, "q7.qpath")
        d = decompose(7, 2)
        write_decomposition(d, path)
        assert read_decomposition(path) == d
        assert Path(path).read_text().startswith("QPATH v1 n=7 k=2 count=224\n")

    def test_missing_trailing_newline(self):
        assert parse_decomposition(Q3_FILE.rstrip("\n")) == antipodal_decomposition(3)

    def test_rejects_malformed(self):
        bad = [
            "",
            Q3_FILE.replace("QPATH v1", "QPATH v2"),
            Q3_FILE.replace("count=4", "count=5"),
            Q3_FILE.replace("011 111 101 100", "011 111 101 10"),
            Q3_FILE.replace("011 111 101 100", "011 111 101 1x0"),
            Q3_FILE.replace("011 111 101 100", "011 111  101 100"),
        ]
        for text in bad:
            with self.assertRaises(ParseError):
                parse_decomposition(text)

    def test_only_newline_ends_a_line(self):
        for separator in ("\x0b", "\x0c", "\x1c", "\x1d", "\x1e", "\x85", "\r", "\r\n"):
            with self.assertRaises(ParseError):
                parse_decomposition(Q3_FILE.replace("\n", separator, 2))
        with self.assertRaises(ParseError):
            parse_decomposition(Q3_FILE + "\n")

    def test_header_is_exact(self):
        for text in (" " + Q3_FILE, Q3_FILE.replace("count=4", "count=4 "), Q3_FILE.replace("QPATH v1", "QPATH  v1")):
            with self.assertRaises(ParseError):
                parse_decomposition(text)

    def test_file_line_endings_are_kept(self):
        path = os.path.join(self.tmpdir.name, "crlf.qpath")
        Path(path).write_bytes(Q3_FILE.replace("\n", "\r\n").encode("ascii"))
        with self.assertRaises(ParseError):
            read_decomposition(path)

    def test_error_carries_line(self):
        with self.assertRaises(ParseError) as ctx:
            parse_decomposition(Q3_FILE.replace("101 001 011 010", "101 001 021 010"))
        assert ctx.exception.line == 4

    def test_ragged_body(self):
        text = Q3_FILE.replace("011 111 101 100", "011 111 101")
        d = parse_decomposition(text)
        assert not d.is_uniform
        report = validate_decomposition(d)
        assert report.cause is FailureCause.WRONG_LENGTH
        assert report.failure.path_index == 1

    def test_empty_body(self):
        d = parse_decomposition("QPATH v1 n=2 k=1 count=0\n")
        assert len(d) == 0
        assert validate_decomposition(d).cause is FailureCause.MISSING_EDGE


class CachePathTest(unittest.TestCase):

    def test_precedence(self):
        with mock.patch.dict(os.environ, {"QPATH_CACHE": "/tmp/from_env.cache"}):
            assert resolve_cache_path("flag.cache") == Path("flag.cache")
            assert resolve_cache_path() == Path("/tmp/from_env.cache")
        with mock.patch.dict(os.environ, {}, clear=True):
            assert resolve_cache_path() == Path("qham.cache")


class HamCacheFormatTest(unittest.TestCase):

    def test_sections(self):
        text = "QHAM v1 m=2 cycles=1\n00 10 11 01\n\nQHAM v1 m=4 cycles=0\n"
        sections = parse_ham_cache(text)
        assert sorted(sections) == [2, 4]
        assert np.array_equal(sections[2][0], [0, 1, 3, 2])

    def test_rejects(self):
        for text in ("QHAM v1 m=2 cycles=2\n00 10 11 01\n",
                     "QHAM v1 m=2 cycles=1\n00 10 11 01\nQHAM v1 m=2 cycles=1\n00 10 11 01\n",
                     "QHAM m=2\n"):
            with self.assertRaises(ParseError):
                parse_ham_cache(text)


if __name__ == "__main__":
    unittest.main()
