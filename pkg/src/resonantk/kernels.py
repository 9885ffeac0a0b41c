"""Kernel backend selection.

Imports the compiled kernels (``resonantk._speedups``, built from Cython)
when available, otherwise the pure-Python twin.  Setting the environment
variable ``RESONANTK_PURE=1`` forces the pure backend regardless.
"""

from __future__ import annotations

import os

if os.environ.get("RESONANTK_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

mate_array = _impl.mate_array
perfect_matchings = _impl.perfect_matchings
has_small_cyclic_cut = _impl.has_small_cyclic_cut


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return BACKEND
