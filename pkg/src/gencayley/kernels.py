"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``GENCAYLEY_PURE=1`` in the environment to force the pure-Python
kernels (used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("GENCAYLEY_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"

scan_codes = _impl.scan_codes
scan_subgroup_codes = _impl.scan_subgroup_codes
scan_check_routes = _impl.scan_check_routes

# verdict bit names re-exported from the reference implementation
AMO_GRAPH = _kernels_py.AMO_GRAPH
AMO_TRANSLATES = _kernels_py.AMO_TRANSLATES
AMO_PRODUCTSET = _kernels_py.AMO_PRODUCTSET
DOM_GRAPH = _kernels_py.DOM_GRAPH
DOM_TRANSLATES = _kernels_py.DOM_TRANSLATES
IND_GRAPH = _kernels_py.IND_GRAPH
IND_ALGEBRAIC = _kernels_py.IND_ALGEBRAIC
PC_GRAPH = _kernels_py.PC_GRAPH
PC_PARTITION = _kernels_py.PC_PARTITION
PC_ALGEBRAIC = _kernels_py.PC_ALGEBRAIC
TPC_GRAPH = _kernels_py.TPC_GRAPH
TPC_PARTITION = _kernels_py.TPC_PARTITION
TPC_ALGEBRAIC = _kernels_py.TPC_ALGEBRAIC


def backend() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return BACKEND
