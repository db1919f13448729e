import numpy as np

# Vertices are stored in signed 64-bit words; q_i lives at bit i - 1.
VERTEX_DTYPE = np.int64
MAX_DIM = 62

# Largest cube the constructions will materialize in memory.
MAX_MATERIALIZED_DIM = 26
MAX_EULER_DIM = 16

HAM_PROVIDER_LIMIT = 8
ORACLE_MAX_DIM = 5
ORACLE_HAM_MAX_DIM = 8

DECOMPOSITION_MAGIC = "QPATH"
HAM_MAGIC = "QHAM"
FORMAT_VERSION = "v1"

CACHE_ENV_VAR = "QPATH_CACHE"
DEFAULT_CACHE_PATH = "qham.cache"

DEFAULT_NODE_LIMIT = 5_000_000
DEFAULT_TIME_LIMIT = 60.0

EXIT_CODES = {"ok": 0,
              "internal": 1,
              "infeasible": 2,
              "parse": 3,
              }
