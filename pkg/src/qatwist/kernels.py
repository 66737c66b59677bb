"""Kernel backend selection.

The compiled extension is used when importable; ``QATWIST_PURE=1`` forces
the pure-Python fallback.
"""

import os

from . import _canon_py, _statesum_py

BACKEND = "python"
state_histogram = _statesum_py.state_histogram
best_labelling = _canon_py.best_labelling

if os.environ.get("QATWIST_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._ext import canon as _canon_c
        from ._ext import statesum as _compiled
    except ImportError:  # extension not built
        pass
    else:
        state_histogram = _compiled.state_histogram
        best_labelling = _canon_c.best_labelling
        BACKEND = "cython"
