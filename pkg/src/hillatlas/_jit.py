"""JIT shim: numba acceleration with a pure-NumPy fallback.

Every hot kernel in the package is decorated with :func:`maybe_njit`.  By
default the kernels are compiled with numba's ``@njit``.  Setting the
environment variable ``HILL_ATLAS_NUMBA=0`` (or running on a machine without
numba) makes the decorator a no-op, so the identical source runs as plain
NumPy/Python.  ``benchmarks/bench_kernels.py`` compares the two paths.
"""

import os

NUMBA_ENABLED = False

if os.environ.get("HILL_ATLAS_NUMBA", "1") != "0":
    try:
        import numba

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False


def maybe_njit(*args, **kwargs):
    """``numba.njit`` when enabled, identity decorator otherwise."""
    if NUMBA_ENABLED:
        import numba

        return numba.njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]

    def wrap(func):
        return func

    return wrap
