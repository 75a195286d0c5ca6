"""Kernel selection: compiled extension when available, pure Python otherwise.

Set QUADEMBED_PURE=1 to force the fallback (used by the benchmark and
by tests that cross-check the two implementations).
"""

import os

if os.environ.get("QUADEMBED_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

implementation = _impl.NAME
reduce_codes = _impl.reduce_codes
common_runs = _impl.common_runs
