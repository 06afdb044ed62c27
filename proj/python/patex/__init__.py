"""Exact extremal-function toolkit for forbidden patterns in 0-1 matrices.

Thin wrappers over the compiled module: arbitrary-precision values cross the
boundary as decimal strings and are converted to int/Fraction here; bound
reports come back as parsed dicts.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._patex import (
    BitMatrix,
    BudgetExhausted,
    CapExceeded,
    Pattern,
    clear_search_memo,
    contains,
    contains_doubled_formation,
    contains_formation,
    engine_version,
    ex,
    find_occurrence,
    load_matrix_file,
    load_pattern_file,
    lx,
    parse_matrix,
    parse_pattern,
    recurrence_table_tsv,
    save_matrix_file,
    save_pattern_file,
    validate_witness,
)
from . import _patex as _raw

__all__ = [
    "BitMatrix",
    "BudgetExhausted",
    "CapExceeded",
    "Pattern",
    "ack",
    "alpha",
    "alpha_level",
    "check_binomial",
    "check_fp3",
    "check_light_reduction",
    "check_recurrence_doubling",
    "check_recurrence_partition",
    "check_relate",
    "clear_search_memo",
    "compute_G",
    "contains",
    "contains_doubled_formation",
    "contains_formation",
    "engine_version",
    "ex",
    "find_occurrence",
    "formation_binom_bound",
    "load_matrix_file",
    "load_pattern_file",
    "lx",
    "parse_matrix",
    "parse_pattern",
    "rec_D",
    "rec_R",
    "recurrence_table_tsv",
    "save_matrix_file",
    "save_pattern_file",
    "validate_witness",
]


def rec_R(s, j):
    """R_s(j), exact."""
    return int(_raw.rec_R(s, j))


def rec_D(s, j):
    """D_s(j), exact."""
    return int(_raw.rec_D(s, j))


def ack(j, n, guard):
    """a_j(n) if it does not exceed guard, else None."""
    v = _raw.ack(j, str(n), str(guard))
    return None if v is None else int(v)


def alpha(n):
    """Inverse-Ackermann alpha(n)."""
    return _raw.alpha(str(n))


def alpha_level(j, n):
    """Level inverse: min k with a_j(k) >= n."""
    return int(_raw.alpha_level(j, str(n)))


def formation_binom_bound(m, s):
    """C(m - ceil(s/2), floor(s/2))."""
    return int(_raw.formation_binom_bound(m, s))


def compute_G(n, m, d_plus_1, k, pattern, s, **kw):
    """lx over the formation family divided by the base extremal value."""
    return _Fraction(_raw.compute_G(n, m, d_plus_1, k, pattern, s, **kw))


def check_relate(patterns=(), formations=(), doubled=(), *, n, m, k, **kw):
    return _json.loads(
        _raw.check_relate(list(patterns), list(formations), list(doubled), n, m, k, **kw)
    )


def check_binomial(base, *, n, m, s, **kw):
    return _json.loads(_raw.check_binomial(base, n, m, s, **kw))


def check_recurrence_doubling(base, s, *, n, m, k, **kw):
    return _json.loads(_raw.check_recurrence_doubling(base, s, n, m, k, **kw))


def check_recurrence_partition(base, s, ks, t, *, n, ms, **kw):
    return _json.loads(_raw.check_recurrence_partition(base, s, list(ks), t, n, list(ms), **kw))


def check_fp3(base, *, n, **kw):
    return _json.loads(_raw.check_fp3(base, n, **kw))


def check_light_reduction(pattern, host_bound, trials=8, seed=2026):
    return _json.loads(_raw.check_light_reduction(pattern, host_bound, trials, seed))
