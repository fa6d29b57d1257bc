"""Backend selection for the hot loops.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Set ``DIFFSEQ_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os

from diffseq import _pykernels

if os.environ.get("DIFFSEQ_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from diffseq import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

FOUND = _pykernels.FOUND
NONE = _pykernels.NONE
BUDGET = _pykernels.BUDGET

chain_lengths = _impl.chain_lengths
max_gap_count = _impl.max_gap_count
search = _impl.search

__all__ = ["BACKEND", "FOUND", "NONE", "BUDGET", "chain_lengths", "max_gap_count", "search"]
