"""Select the compiled Cayley-graph kernels, falling back to pure Python.

Set ``CHIRALMAP_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("CHIRALMAP_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

cayley_enumerate = _impl.cayley_enumerate
extend_homomorphism = _impl.extend_homomorphism
