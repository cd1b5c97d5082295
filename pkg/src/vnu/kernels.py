"""Kernel backend selection: compiled extension with pure-python fallback.

Set VNU_FORCE_FALLBACK=1 to force the numpy path (used by the benchmark
to compare the two).
"""

import os

if os.environ.get("VNU_FORCE_FALLBACK", "0") == "1":
    from vnu import _fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from vnu import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from vnu import _fallback as _impl

        BACKEND = "fallback"

kb_gather_2d = _impl.kb_gather_2d
