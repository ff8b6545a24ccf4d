"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it was built and the graph has
at most 64 vertices; otherwise the pure-Python ``_pykernels`` run. Setting
``ANTIFORCE_PURE=1`` in the environment forces the pure-Python path.
"""

import os

from . import _pykernels

try:
    if os.environ.get("ANTIFORCE_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
MAX_COMPILED_N = 64


def _pick(n):
    if _ckernels is not None and n <= MAX_COMPILED_N:
        return _ckernels
    return _pykernels


def alternating_cycle(n, partner, avail, limit):
    return _pick(n).alternating_cycle(n, partner, avail, limit)


def count_alternating_4cycles(n, partner, avail):
    return _pick(n).count_alternating_4cycles(n, partner, avail)


def perfect_matchings(n, adj, alive, limit=0):
    return _pick(n).perfect_matchings(n, adj, alive, limit)
