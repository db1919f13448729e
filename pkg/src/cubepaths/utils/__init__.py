# utils

from .cube_io import ParseError
from .cube_io import serialize_decomposition, parse_decomposition
from .cube_io import write_decomposition, read_decomposition, dump_decomposition, decomposition_header
from .cube_io import resolve_cache_path, format_ham_section, parse_ham_cache, read_ham_cache, write_ham_cache
from .cli_utils import setup_logging, add_common_arguments, run_command

__all__ = [
    "ParseError",
    "serialize_decomposition",
    "parse_decomposition",
    "write_decomposition",
    "read_decomposition",
    "dump_decomposition",
    "decomposition_header",
    "resolve_cache_path",
    "format_ham_section",
    "parse_ham_cache",
    "read_ham_cache",
    "write_ham_cache",
    "setup_logging",
    "add_common_arguments",
    "run_command",
]

classes = __all__
