"""Kernel backend selection.

The compiled extension is used when importable; set ``RIGIDITY_PURE_PYTHON=1``
to force the pure-Python implementation.  ``BACKEND`` names the active one.
"""
import os

from . import _fallback

if os.environ.get("RIGIDITY_PURE_PYTHON", "") not in ("", "0"):
    _impl = _fallback
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _fallback

BACKEND = "python" if _impl is _fallback else "cython"

linear_power_vanishes = _impl.linear_power_vanishes
det_int = _impl.det_int
scan_box = _impl.scan_box

__all__ = ["BACKEND", "linear_power_vanishes", "det_int", "scan_box"]
