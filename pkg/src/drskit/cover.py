"""Minimum set cover instances and the exact solve entry point.

A :class:`CoverInstance` is the 0-1 program ``min sum_t x_t`` subject to
"every row is covered by a chosen column", with one bitset per column over the
row indexes.  The branch-and-bound search itself lives in
:mod:`drskit._kernels` (compiled when available, pure Python otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .errors import InfeasibleCoverError


@dataclass(frozen=True)
class CoverInstance:
    """Rows are constraint labels (vertex pairs); columns are candidate vertex
    ids in strictly ascending order; ``covers[i]`` is the bitset of row
    indexes column ``i`` satisfies."""

    rows: tuple
    columns: tuple[int, ...]
    covers: tuple[int, ...]

    def __post_init__(self):
        if len(self.columns) != len(self.covers):
            raise ValueError("one cover bitset per column required")
        if any(a >= b for a, b in zip(self.columns, self.columns[1:])):
            raise ValueError("columns must be strictly ascending")


@dataclass(frozen=True)
class CoverResult:
    value: int
    chosen: tuple[int, ...]  # column labels (vertex ids), ascending
    optimal: bool
    nodes: int


def solve_cover_exact(
    inst: CoverInstance, budget: Optional[int] = None
) -> CoverResult:
    """Exact minimum cover with the lexicographically smallest witness.

    ``budget`` caps search-tree nodes; on exhaustion the best cover found is
    returned with ``optimal=False``.  Raises ``InfeasibleCoverError`` when a
    row is uncoverable.
    """
    n_rows = len(inst.rows)
    if n_rows:
        union = 0
        for m in inst.covers:
            union |= m
        missing = ((1 << n_rows) - 1) & ~union
        if missing:
            r = (missing & -missing).bit_length() - 1
            raise InfeasibleCoverError(f"row {inst.rows[r]} cannot be covered")
    value, witness, optimal, nodes = _kernels.solve_cover(inst.covers, n_rows, budget)
    chosen = tuple(inst.columns[i] for i in witness)
    return CoverResult(value, chosen, optimal, nodes)
