"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
implementation takes over.  ``PGCOVER_BACKEND=python`` forces the fallback
and ``PGCOVER_BACKEND=compiled`` makes a missing extension an error.
"""

from __future__ import annotations

import os
from types import ModuleType

from pgcover import _pykernel


def _load_compiled() -> ModuleType | None:
    try:
        from pgcover import _ckernel
    except ImportError:
        return None
    return _ckernel


def get_backend(name: str = "auto") -> ModuleType:
    """Return the kernel module for ``name`` in ``{"auto", "compiled", "python"}``."""
    if name == "python":
        return _pykernel
    if name not in ("auto", "compiled"):
        raise ValueError(f"unknown backend {name!r}")
    compiled = _load_compiled()
    if compiled is None:
        if name == "compiled":
            raise ImportError("compiled kernel is not built; reinstall with Cython available")
        return _pykernel
    return compiled


def available_backends() -> list[str]:
    return ["compiled", "python"] if _load_compiled() is not None else ["python"]


_active = get_backend(os.environ.get("PGCOVER_BACKEND", "auto"))
BACKEND = "python" if _active is _pykernel else "compiled"
ConvexCore = _active.ConvexCore
count_inversions = _active.count_inversions
noncrossing_matching = _active.noncrossing_matching
