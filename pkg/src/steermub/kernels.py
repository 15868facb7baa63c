"""Backend selection for the hot objective kernels.

The compiled extension is preferred; set ``STEERMUB_PURE_PYTHON=1`` to
force the pure-Python implementation.
"""

import os

from . import _kernels_py

if os.environ.get("STEERMUB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

bloch_entropy = _impl.bloch_entropy
holevo_bloch = _impl.holevo_bloch
sphere_holevo = _impl.sphere_holevo
frame_min_holevo = _impl.frame_min_holevo
cjwr_frame_value = _impl.cjwr_frame_value
multistart_maximize = _impl.multistart_maximize


def get_backend(name):
    """Return the kernel module for ``"compiled"`` or ``"python"``."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
