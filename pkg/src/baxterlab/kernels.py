"""Hot kernels: compiled when available, pure Python otherwise.

Set ``BAXTERLAB_PURE=1`` to force the pure-Python versions.
"""

import os

from . import _kernels_py

BACKEND = "python"
if os.environ.get("BAXTERLAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
else:
    _impl = _kernels_py

is_baxter = _impl.is_baxter
baxter_census = _impl.baxter_census
count_nonintersecting = _impl.count_nonintersecting

__all__ = ["BACKEND", "is_baxter", "baxter_census", "count_nonintersecting"]
