"""Brute-force counting backends.

The compiled Cython kernel is preferred; the numpy fallback is selected
automatically when the extension is not built.  ``benchmarks/`` compares
the two.
"""

from . import pure

try:
    from . import _bruteforce as _compiled

    BACKEND = "cython"
    count_chunk = _compiled.count_chunk
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None
    BACKEND = "pure"
    count_chunk = pure.count_chunk


def backend_name() -> str:
    return BACKEND
