"""Select the enumeration kernel at import time.

The compiled extension is preferred when present; set APCYCLE_PURE=1 in the
environment to force the pure-Python fallback (the two are interchangeable,
output included).
"""

import os

if os.environ.get("APCYCLE_PURE", "") not in ("", "0"):
    from apcycle import _pykernels as active

    COMPILED = False
else:
    try:
        from apcycle import _ckernels as active  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from apcycle import _pykernels as active  # type: ignore[no-redef]

        COMPILED = False


def kernel_name() -> str:
    return "compiled" if COMPILED else "pure-python"
