from .cube_keys import VERTEX_DTYPE
from .cube_keys import MAX_DIM, MAX_MATERIALIZED_DIM, MAX_EULER_DIM
from .cube_keys import HAM_PROVIDER_LIMIT, ORACLE_MAX_DIM, ORACLE_HAM_MAX_DIM
from .cube_keys import DECOMPOSITION_MAGIC, HAM_MAGIC, FORMAT_VERSION
from .cube_keys import CACHE_ENV_VAR, DEFAULT_CACHE_PATH
from .cube_keys import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT
from .cube_keys import EXIT_CODES

__all__ = [
    "VERTEX_DTYPE",
    "MAX_DIM",
    "MAX_MATERIALIZED_DIM",
    "MAX_EULER_DIM",
    "HAM_PROVIDER_LIMIT",
    "ORACLE_MAX_DIM",
    "ORACLE_HAM_MAX_DIM",
    "DECOMPOSITION_MAGIC",
    "HAM_MAGIC",
    "FORMAT_VERSION",
    "CACHE_ENV_VAR",
    "DEFAULT_CACHE_PATH",
    "DEFAULT_NODE_LIMIT",
    "DEFAULT_TIME_LIMIT",
    "EXIT_CODES",
]
