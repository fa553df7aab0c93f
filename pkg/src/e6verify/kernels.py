"""Select the permutation kernel implementation at import time.

The compiled extension ``_kernels`` is used when it was built; otherwise the
pure-Python ``_kernels_py`` module is used.  Setting the environment variable
``E6VERIFY_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py as python_impl

compiled_impl = None
if os.environ.get("E6VERIFY_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_impl = None

_impl = compiled_impl if compiled_impl is not None else python_impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
compose = _impl.compose
inverse = _impl.inverse
identity = _impl.identity
closure = _impl.closure
conjugacy_partition = _impl.conjugacy_partition
cycle_type = _impl.cycle_type
cycles = _impl.cycles
orbits = _impl.orbits

__all__ = [
    "IMPLEMENTATION",
    "compiled_impl",
    "python_impl",
    "compose",
    "inverse",
    "identity",
    "closure",
    "conjugacy_partition",
    "cycle_type",
    "cycles",
    "orbits",
]
