"""Kernel backend selection.

The compiled Cython kernels are used when the extension imported cleanly;
otherwise the pure-Python fallbacks take over.  Set ``DRSKIT_PURE=1`` in the
environment to force the fallback (useful for the backend-equivalence tests
and the benchmark).  Both backends implement identical algorithms and return
identical results.
"""

from __future__ import annotations

import importlib
import os
from typing import Optional, Sequence

from . import pure

_native = None
if not os.environ.get("DRSKIT_PURE"):
    try:
        _native = importlib.import_module(__name__ + "._native")
    except ImportError:
        _native = None

BACKEND = "native" if _native is not None else "pure"


def solve_cover(
    masks: Sequence[int], n_rows: int, budget: Optional[int] = None
) -> tuple[int, tuple[int, ...], bool, int]:
    """Exact minimum cover; see ``pure.solve_cover`` for the contract."""
    if _native is None or n_rows == 0:
        return pure.solve_cover(masks, n_rows, budget)
    import numpy as np

    ncols = len(masks)
    words = (n_rows + 63) // 64
    arr = np.zeros((ncols, words), dtype=np.uint64)
    for c, m in enumerate(masks):
        w = 0
        while m:
            arr[c, w] = m & 0xFFFFFFFFFFFFFFFF
            m >>= 64
            w += 1
    value, witness, optimal, nodes = _native.solve_cover(
        arr, ncols, n_rows, -1 if budget is None else budget
    )
    return (int(value), tuple(int(c) for c in witness), bool(optimal), int(nodes))


def weighing_outcomes_distinct(rows: Sequence[int], n: int) -> bool:
    """Injectivity of the weighing outcome map; see the pure kernel."""
    nonzero = [r for r in rows if r]
    if (
        _native is None
        or n > 48
        or len(nonzero) > 64
        or sum(r.bit_count().bit_length() for r in nonzero) > 128
    ):
        return pure.weighing_outcomes_distinct(rows, n)
    import numpy as np

    if not nonzero:
        return pure.weighing_outcomes_distinct(rows, n)
    return bool(_native.weighing_distinct(np.array(nonzero, dtype=np.uint64), n))
