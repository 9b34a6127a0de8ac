"""Kernel backend selection.

The numba backend is the default. Set DIGITOPO_NO_NUMBA=1 to force the
pure-numpy fallback; it is also used automatically when numba cannot be
imported. Both backends expose the same functions and are compared
against each other in the test suite and in benchmarks/bench_kernels.py.
"""

import os


def _want_numpy() -> bool:
    return os.environ.get("DIGITOPO_NO_NUMBA", "").strip() not in ("", "0")


if _want_numpy():
    from . import backend_numpy as _impl
else:
    try:
        from . import backend_numba as _impl
    except ImportError:
        from . import backend_numpy as _impl

BACKEND = _impl.NAME
label_grid = _impl.label_grid
config_map = _impl.config_map
thin_pass = _impl.thin_pass
