"""Kernel backend selection.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python twin takes over. Set MODLAT_BACKEND=pure to force the fallback.
"""

import os

from . import _pykernels as pure
from .config import ENV_BACKEND

try:
    from . import _kernels as compiled  # type: ignore[attr-defined]
except ImportError:
    compiled = None

if os.environ.get(ENV_BACKEND) == "pure" or compiled is None:
    active = pure
    BACKEND = "pure"
else:
    active = compiled
    BACKEND = "compiled"


def backends():
    """Name -> module map of the backends importable in this process."""
    out = {"pure": pure}
    if compiled is not None:
        out["compiled"] = compiled
    return out
