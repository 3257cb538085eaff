"""Kernel backend selection.

The compiled extension ``_core`` is preferred; the pure-Python twin
``_pycore`` is used when the extension is unavailable or when the
environment variable ``WORDCONES_KERNEL`` is set to ``py``/``pure``.
Both expose the same functions with identical results.
"""

from __future__ import annotations

import os

_forced = os.environ.get("WORDCONES_KERNEL", "").strip().lower()

if _forced in ("py", "python", "pure"):
    from . import _pycore as _impl
elif _forced in ("c", "compiled", "ext"):
    from . import _core as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pycore as _impl

BACKEND: str = _impl.BACKEND

higman_leq = _impl.higman_leq
minimal_elements = _impl.minimal_elements
maximal_elements = _impl.maximal_elements
common_lower_bounds = _impl.common_lower_bounds
dfa_run = _impl.dfa_run
dfa_accepts = _impl.dfa_accepts
rule_scan_depth = _impl.rule_scan_depth
forced_missing_words = _impl.forced_missing_words
