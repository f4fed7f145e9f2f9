"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HYPERBOUND_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

AVAILABLE: dict[str, ModuleType] = {"python": _kernels_py}
if _kernels_c is not None:
    AVAILABLE["cython"] = _kernels_c

if os.environ.get("HYPERBOUND_PURE_PYTHON", "") not in ("", "0") or _kernels_c is None:
    BACKEND = "python"
else:
    BACKEND = "cython"

kernels: ModuleType = AVAILABLE[BACKEND]


def get_kernels(name: str | None = None) -> ModuleType:
    if name is None:
        return kernels
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(AVAILABLE)}") from None
