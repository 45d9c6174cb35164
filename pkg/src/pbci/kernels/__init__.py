"""Kernel backend selection.

The compiled Cython module is used when available; otherwise the pure-Python
twin takes over.  Set ``PBCI_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("PBCI_PURE_PYTHON"):
    from pbci.kernels import pure as _impl
else:
    try:
        from pbci.kernels import _native as _impl  # type: ignore[attr-defined]
    except ImportError:
        from pbci.kernels import pure as _impl

BACKEND = _impl.BACKEND
pbci_ok = _impl.pbci_ok
rpom3_ok = _impl.rpom3_ok
residuation_ok = _impl.residuation_ok
arguesian_witness = _impl.arguesian_witness
enumerate_tables = _impl.enumerate_tables
