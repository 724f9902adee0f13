"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``CISENUM_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

try:
    if os.environ.get("CISENUM_PURE_PYTHON"):
        raise ImportError("pure Python forced by CISENUM_PURE_PYTHON")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

DEFAULT_BACKEND = "compiled" if _ckernels is not None else "python"


def get_kernels(name: str | None = None):
    if name in (None, "auto"):
        name = DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
