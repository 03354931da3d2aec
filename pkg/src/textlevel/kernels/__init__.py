"""Hot-loop kernels with a compiled fast path.

The compiled extension is optional: when it is missing (or when
TEXTLEVEL_PURE=1 is set) the numpy fallback in pure.py is used instead.
Both implementations are kept operation-for-operation identical so a tree
grown with one backend matches the other.
"""

import os

from . import pure

BACKEND = "pure"
split_scan = pure.split_scan

if os.environ.get("TEXTLEVEL_PURE", "") != "1":
    try:
        from . import _speedups

        split_scan = _speedups.split_scan
        BACKEND = "compiled"
    except ImportError:
        pass

__all__ = ["split_scan", "BACKEND", "pure"]
