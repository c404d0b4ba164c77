"""Kernel backend selection.

The compiled extension (``_native``, built from Cython) is preferred when it
imported successfully; otherwise the pure-Python twin takes over.  Set
``HALINPACK_BACKEND=pure`` or ``=native`` to force a lane; ``native`` raises
if the extension is unavailable.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import pure

_native: ModuleType | None
try:
    from . import _native  # type: ignore[attr-defined]
except ImportError:
    _native = None

_CHOICE = os.environ.get("HALINPACK_BACKEND", "auto")
if _CHOICE not in ("auto", "native", "pure"):
    raise RuntimeError(f"HALINPACK_BACKEND must be auto, native, or pure; got {_CHOICE!r}")
if _CHOICE == "native" and _native is None:
    raise RuntimeError("HALINPACK_BACKEND=native but the compiled kernels are not built")

active: ModuleType = _native if (_native is not None and _CHOICE != "pure") else pure


def backend_name() -> str:
    """Name of the backend in use: 'native' or 'pure'."""
    return "native" if active is _native else "pure"


def available_backends() -> list[str]:
    """Backends importable in this installation."""
    return ["pure"] + (["native"] if _native is not None else [])


def get_backend(name: str) -> ModuleType:
    """Fetch a backend module by name ('pure', 'native', or 'auto')."""
    if name == "pure":
        return pure
    if name == "native":
        if _native is None:
            raise RuntimeError("compiled kernels are not built")
        return _native
    if name == "auto":
        return active
    raise ValueError(f"unknown backend {name!r}")
