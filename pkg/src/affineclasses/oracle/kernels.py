"""Kernel dispatch: compiled orbit scans when the extension is available,
pure Python otherwise.

Set AFFINECLASSES_PURE=1 to force the pure implementation.  Point counts
above 256 always run pure, because the compiled kernels store translation
tables as bytes.
"""

import os

from . import _kernels_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

_FORCE_PURE = os.environ.get("AFFINECLASSES_PURE", "").strip() not in ("", "0")
COMPILED = _speedups is not None and not _FORCE_PURE
BACKEND = "compiled" if COMPILED else "pure"


def orbit_scan(t_flat, ngen, size):
    if COMPILED:
        return _speedups.orbit_scan(t_flat, ngen, size)
    return _kernels_py.orbit_scan(t_flat, ngen, size)


def affine_orbit_scan(cg_flat, om_flat, hv_flat, add_tab, ngen, mg, mv, stride):
    if COMPILED and mv <= 256:
        return _speedups.affine_orbit_scan(cg_flat, om_flat, hv_flat, add_tab,
                                           ngen, mg, mv, stride)
    return _kernels_py.affine_orbit_scan(cg_flat, om_flat, hv_flat, add_tab,
                                         ngen, mg, mv, stride)
