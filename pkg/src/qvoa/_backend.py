"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; setting
``QVOA_PURE=1`` forces the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

_ext = None
if not os.environ.get("QVOA_PURE"):
    try:
        from . import _kernels as _ext  # type: ignore[no-redef]
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def available_backends() -> tuple[str, ...]:
    return ("cython", "python") if _ext is not None else ("python",)


def get(name: str | None = None):
    """Return the kernel module for ``name`` (default: the best available)."""
    if name is None:
        name = BACKEND
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ext is None:
            raise ImportError("compiled kernels are not built; reinstall with Cython available")
        return _ext
    raise ValueError(f"unknown backend {name!r}")
