"""Kernel backend selection.

The hot per-sample loops (quantization, bitstream packing, error sums)
live in the compiled extension :mod:`kmodulus._kernels`; when it is not
built, the pure-Python :mod:`kmodulus._pykernels` takes over with
identical, byte-for-byte results.  Set ``KMODULUS_PURE=1`` to force the
pure backend even when the extension is available.
"""

from __future__ import annotations

import os

if os.environ.get("KMODULUS_PURE"):
    from kmodulus import _pykernels as kernels

    BACKEND = "pure-python"
else:
    try:
        from kmodulus import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from kmodulus import _pykernels as kernels  # type: ignore[no-redef]

        BACKEND = "pure-python"

__all__ = ["BACKEND", "kernels"]
