"""Kernel backend selection: compiled _speedups if importable, else pure Python.

Set HOPLIFT_PURE=1 to force the pure backend (used by the benchmark and by
CI to exercise both paths).
"""

import os

if os.environ.get("HOPLIFT_PURE"):
    from hoplift import _kernel_py as _impl
else:
    try:
        from hoplift import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from hoplift import _kernel_py as _impl

BACKEND = _impl.BACKEND
normalize = _impl.normalize
add = _impl.add
sub = _impl.sub
mul = _impl.mul
mul_int = _impl.mul_int
