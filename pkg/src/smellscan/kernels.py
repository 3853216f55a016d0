"""Scanning-kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python twin.
Set ``SMELLSCAN_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and the parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("SMELLSCAN_PURE_PYTHON"):
    from smellscan import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from smellscan import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        from smellscan import _kernels_py as _impl

        BACKEND = "python"

scan_source = _impl.scan_source
