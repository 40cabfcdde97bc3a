"""Kernel backend selection: compiled extension with a pure-Python fallback.

The compiled module is preferred when importable; set the environment
variable ``ABELIANPERIODS_BACKEND`` to ``py`` or ``c`` before import to force
a choice, or pass ``backend=`` to the algorithm entry points.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

_FORCED = os.environ.get("ABELIANPERIODS_BACKEND")
if _FORCED == "c" and _kernels is None:
    raise ImportError("ABELIANPERIODS_BACKEND=c but the compiled kernels are not built")
if _FORCED not in (None, "", "c", "py"):
    raise ImportError(f"ABELIANPERIODS_BACKEND must be 'c' or 'py', got {_FORCED!r}")

_DEFAULT = "py" if (_FORCED == "py" or _kernels is None) else "c"


def active_backend() -> str:
    """Name of the backend used when none is requested explicitly."""
    return _DEFAULT


def available_backends() -> tuple[str, ...]:
    return ("c", "py") if _kernels is not None else ("py",)


def get_kernels(backend: str | None = None) -> ModuleType:
    """Kernel module for ``backend`` ('c', 'py', or None for the default)."""
    name = backend or _DEFAULT
    if name == "py":
        return _pykernels
    if name == "c":
        if _kernels is None:
            raise ValueError("compiled kernels are not available; build the extension or use backend='py'")
        return _kernels
    raise ValueError(f"unknown backend {name!r} (expected 'c' or 'py')")
