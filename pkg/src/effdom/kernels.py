"""Backend selection for the hot loops.

The compiled extension is used when it imports; set ``EFFDOM_PURE=1`` to
force the pure-Python implementation.  Both backends return identical
results.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
find_induced = _pykernels.find_induced
exact_search = _pykernels.exact_search

if os.environ.get("EFFDOM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None
    if _ckernels is not None:
        BACKEND = "cython"
        find_induced = _ckernels.find_induced
        _c_exact = _ckernels.exact_search

        def exact_search(n, adj, weights):
            # 64-bit accumulators in C; huge weights go through Python ints
            if sum(w for w in weights if w > 0) >= 1 << 62:
                return _pykernels.exact_search(n, adj, weights)
            return _c_exact(n, adj, weights)


def backends() -> dict:
    """Available implementations keyed by name (used by the benchmark)."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels as ck
    except ImportError:
        return out
    out["cython"] = ck
    return out
