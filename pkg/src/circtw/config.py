"""Budget defaults. Each can be overridden through an environment variable."""

import os


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


#: Largest number of bag colorings (p**(k+1)) a solver or F-set sweep may touch.
STATE_LIMIT = _env_int("CIRCTW_STATE_LIMIT", 10**6)

#: Largest number of candidate type matrices enumerate_bipartite_types may scan.
TYPE_ENUM_LIMIT = _env_int("CIRCTW_TYPE_ENUM_LIMIT", 10**6)

#: Rejections allowed in random_partial_k_tree before giving up.
REJECTION_LIMIT = _env_int("CIRCTW_REJECTION_LIMIT", 10_000)

#: Largest exponent e for which girth_bound materializes 2**e exactly.
MATERIALIZE_EXPONENT_LIMIT = _env_int("CIRCTW_MATERIALIZE_LIMIT", 10**6)
