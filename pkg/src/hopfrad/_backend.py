"""Select the kernel implementation at import time.

The compiled ``_ckernels`` module is preferred.  Setting the environment
variable ``HOPFRAD_PURE_PYTHON=1`` forces the numpy fallback.
"""

import os

from . import _pykernels

kernels = _pykernels
if os.environ.get("HOPFRAD_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]
    except ImportError:  # extension not built
        kernels = _pykernels

BACKEND = kernels.NAME


def available_backends():
    names = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        names["cython"] = _ckernels
    return names
