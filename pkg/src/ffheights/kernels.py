"""Polynomial kernel selection: compiled extension with pure-Python fallback.

Importing this module picks the fastest available backend at import time.
``BACKEND`` reports which one is active; ``benchmarks/bench_kernels.py``
compares the two on identical inputs.
"""

from . import _kernels_py

try:  # pragma: no cover - exercised only when the extension is built
    from . import _kernels as _impl
except ImportError:  # pragma: no cover
    _impl = _kernels_py

BACKEND = _impl.BACKEND
poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod

__all__ = ["BACKEND", "poly_mul", "poly_divmod"]
