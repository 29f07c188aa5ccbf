"""Backend selection for the hot kernels.

The compiled extension is used when it imports cleanly; setting the
environment variable ``POSET_RAMSEY_PURE_PYTHON=1`` forces the pure-Python
fallback (useful for benchmarking and for platforms without a compiler).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("POSET_RAMSEY_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
chain_lemma_labels = _impl.chain_lemma_labels
dpll = _impl.dpll
count_r_proper = _impl.count_r_proper

__all__ = ["BACKEND", "chain_lemma_labels", "dpll", "count_r_proper"]
