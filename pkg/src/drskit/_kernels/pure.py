"""Pure-Python kernels for the two hot loops.

* :func:`solve_cover` -- exact minimum set cover by depth-first branch and
  bound, returning the lexicographically smallest witness among the minimum
  solutions.
* :func:`weighing_outcomes_distinct` -- injectivity of the outcome map of a
  set of subset weighings over all 0/1 defect patterns.

Bitsets are Python ints.  The compiled kernel in ``_native.pyx`` mirrors the
search order and node accounting exactly, so both backends return identical
tuples; keep the two implementations in sync.
"""

from __future__ import annotations

import sys
from typing import Optional, Sequence


class BudgetExhausted(Exception):
    """Internal: raised when the node budget runs out mid-search."""


def solve_cover(
    masks: Sequence[int], n_rows: int, budget: Optional[int] = None
) -> tuple[int, tuple[int, ...], bool, int]:
    """Exact minimum set cover over columns given as row-bitsets.

    Returns ``(value, witness, optimal, nodes)`` where ``witness`` is the
    ascending tuple of column indexes that is lexicographically smallest among
    all minimum covers.  ``budget`` caps the number of search-tree nodes; on
    exhaustion the best cover found so far is returned with ``optimal=False``
    (its value may then exceed the true minimum, and its witness is not
    guaranteed canonical).

    Phase 1 proves the minimum size with strong pruning (lower bound =
    ``ceil(uncovered / best fresh coverage)``, branching on the uncovered row
    with fewest available columns).  Phase 2 re-searches for the
    lexicographically smallest witness of that size by picking columns in
    ascending order.

    Raises ``ValueError`` if some row has no covering column.
    """
    ncols = len(masks)
    if n_rows == 0:
        return (0, (), True, 0)
    rowcols = [0] * n_rows
    for c, m in enumerate(masks):
        bit = 1 << c
        while m:
            low = m & -m
            rowcols[low.bit_length() - 1] |= bit
            m ^= low
    for r, rc in enumerate(rowcols):
        if rc == 0:
            raise ValueError(f"row {r} has no covering column")

    full = (1 << n_rows) - 1
    all_cols = (1 << ncols) - 1

    # greedy incumbent: always feasible, ties broken toward low column ids
    covered = 0
    greedy: list[int] = []
    while covered != full:
        best_c = -1
        best_gain = 0
        for c in range(ncols):
            gain = (masks[c] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_c = c
        greedy.append(best_c)
        covered |= masks[best_c]

    if len(greedy) + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(len(greedy) + 200)

    best_size = len(greedy)
    best_witness = tuple(sorted(greedy))
    nodes = 0
    chosen: list[int] = []

    def dfs1(covered: int, avail: int) -> None:
        nonlocal best_size, best_witness, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted
        if covered == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_witness = tuple(sorted(chosen))
            return
        rem = n_rows - covered.bit_count()
        # lower bound: fewest columns whose fresh-coverage sum can reach rem
        gains = []
        m = avail
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            g = (masks[c] & ~covered).bit_count()
            if g:
                gains.append(g)
        gains.sort(reverse=True)
        need = rem
        lb = 0
        for g in gains:
            need -= g
            lb += 1
            if need <= 0:
                break
        if need > 0:
            return  # available columns cannot cover the rest at all
        if len(chosen) + lb >= best_size:
            return
        # one pass over uncovered rows: the branching row (fewest available
        # columns) plus a greedy disjoint-row packing, a second lower bound
        # that bites where the gain-sum bound is loose
        best_r = -1
        best_cnt = ncols + 1
        packed = 0
        used = 0
        unc = full & ~covered
        while unc:
            low = unc & -unc
            r = low.bit_length() - 1
            unc ^= low
            rc = rowcols[r] & avail
            cnt = rc.bit_count()
            if cnt == 0:
                return
            if cnt < best_cnt:
                best_cnt = cnt
                best_r = r
            if rc & used == 0:
                packed += 1
                used |= rc
        if len(chosen) + packed >= best_size:
            return
        cand = rowcols[best_r] & avail
        a = avail
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            a ^= low  # tried columns leave the pool for siblings and children
            chosen.append(c)
            dfs1(covered | masks[c], a)
            chosen.pop()

    try:
        dfs1(0, all_cols)
    except BudgetExhausted:
        return (best_size, best_witness, False, nodes)

    # phase 2: lexicographically smallest witness of the proven optimal size
    k = best_size
    target: list[int] = []
    found: Optional[tuple[int, ...]] = None

    def dfs2(covered: int, start_c: int, depth: int) -> bool:
        nonlocal nodes, found
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted
        if covered == full:
            found = tuple(target)
            return True
        if depth == k:
            return False
        avail = all_cols & ~((1 << start_c) - 1)
        rem = n_rows - covered.bit_count()
        gains = [0] * ncols
        m = avail
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            gains[c] = (masks[c] & ~covered).bit_count()
        suffmax = [0] * (ncols + 1)
        for c in range(ncols - 1, start_c - 1, -1):
            g = gains[c]
            suffmax[c] = g if g > suffmax[c + 1] else suffmax[c + 1]
        # same prefix-of-sorted-gains bound as phase 1, over the tail columns
        picks_left = k - depth
        need = rem
        lb = 0
        for g in sorted(gains[start_c:], reverse=True):
            if g == 0 or need <= 0:
                break
            need -= g
            lb += 1
        if need > 0 or lb > picks_left:
            return False
        # the next pick cannot exceed any uncovered row's last remaining column
        cap = ncols - 1
        packed = 0
        used = 0
        unc = full & ~covered
        while unc:
            low = unc & -unc
            r = low.bit_length() - 1
            unc ^= low
            rc = rowcols[r] & avail
            if rc == 0:
                return False
            top = rc.bit_length() - 1
            if top < cap:
                cap = top
            if rc & used == 0:
                packed += 1
                used |= rc
        if packed > picks_left:
            return False
        for c in range(start_c, cap + 1):
            g = gains[c]
            if g == 0:
                continue
            rem_child = rem - g
            if rem_child > 0:
                if picks_left == 1:
                    continue
                smax = suffmax[c + 1]
                if smax == 0:
                    continue
                if 1 + (rem_child + smax - 1) // smax > picks_left:
                    continue
            target.append(c)
            if dfs2(covered | masks[c], c + 1, depth + 1):
                return True
            target.pop()
        return False

    try:
        ok = dfs2(0, 0, 0)
    except BudgetExhausted:
        return (k, best_witness, False, nodes)
    assert ok and found is not None
    return (k, found, True, nodes)


def weighing_outcomes_distinct(rows: Sequence[int], n: int) -> bool:
    """True iff ``u -> (popcount(u & x))_x`` is injective on ``{0,1}^n``.

    Outcome vectors are packed into one integer key (enough bits per row to
    hold its popcount) and checked by hashing.  Cost is ``2^n`` iterations;
    large ``n`` wants the native kernel.
    """
    packed = [(r, r.bit_count().bit_length()) for r in rows if r]
    seen: set[int] = set()
    for u in range(1 << n):
        key = 0
        for r, w in packed:
            key = (key << w) | (u & r).bit_count()
        if key in seen:
            return False
        seen.add(key)
    return True
