"""Backend selection for the hot search kernel.

The compiled ``_csearch`` extension is used when it imports; otherwise the
pure-Python ``_pysearch`` takes over. Setting ``UNILYNDON_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pysearch

BACKEND = "python"
search_candidates = _pysearch.search_candidates

if os.environ.get("UNILYNDON_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _csearch
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        search_candidates = _csearch.search_candidates


def available_backends() -> dict:
    backends = {"python": _pysearch.search_candidates}
    try:
        from . import _csearch
    except ImportError:
        pass
    else:
        backends["cython"] = _csearch.search_candidates
    return backends
