# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled kernels: exact set-cover branch and bound and weighing-outcome
distinctness.  Mirrors ``drskit._kernels.pure`` exactly -- same search order,
same pruning, same node accounting -- so both backends return identical
tuples.  Keep the two implementations in sync."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport qsort

import numpy as np


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef int _cmp_desc(const void* a, const void* b) noexcept nogil:
    cdef int64_t x = (<const int64_t*>a)[0]
    cdef int64_t y = (<const int64_t*>b)[0]
    if x > y:
        return -1
    if x < y:
        return 1
    return 0


class BudgetExhausted(Exception):
    pass


cdef inline int _bit(uint64_t* words, int i) nogil:
    return (words[i >> 6] >> (i & 63)) & 1


cdef class _CoverSearch:
    cdef:
        int ncols, n_rows, wr, wc, best_size, k
        long long nodes, budget
        uint64_t[:, ::1] colrows
        uint64_t[:, ::1] rowcols
        uint64_t[:, ::1] cov_stk
        uint64_t[:, ::1] avail_stk
        int64_t[::1] chosen
        int64_t[::1] target
        int64_t[::1] sort_buf
        uint64_t[::1] used_buf
        uint64_t[::1] tmp_buf
        int64_t[:, ::1] gains_stk
        int64_t[:, ::1] suffmax_stk
        object best_witness
        object found

    cdef long long _popcnt(self, uint64_t* words, int nw) nogil:
        cdef long long t = 0
        cdef int w
        for w in range(nw):
            t += __builtin_popcountll(words[w])
        return t

    cdef int dfs1(self, int depth) except -1:
        self.nodes += 1
        if self.budget >= 0 and self.nodes > self.budget:
            raise BudgetExhausted
        cdef uint64_t* covered = &self.cov_stk[depth, 0]
        cdef uint64_t* avail = &self.avail_stk[depth, 0]
        cdef int w, r, c
        cdef long long rem = self.n_rows - self._popcnt(covered, self.wr)
        if rem == 0:
            if depth < self.best_size:
                self.best_size = depth
                lst = []
                for w in range(depth):
                    lst.append(self.chosen[w])
                lst.sort()
                self.best_witness = tuple(lst)
            return 0
        # lower bound: fewest columns whose fresh-coverage sum reaches rem
        cdef long long g, need, cnt
        cdef int nb = 0, lb
        cdef uint64_t* col
        cdef uint64_t* rc
        for c in range(self.ncols):
            if _bit(avail, c):
                col = &self.colrows[c, 0]
                g = 0
                for w in range(self.wr):
                    g += __builtin_popcountll(col[w] & ~covered[w])
                if g:
                    self.sort_buf[nb] = g
                    nb += 1
        if nb:
            qsort(&self.sort_buf[0], nb, sizeof(int64_t), _cmp_desc)
        need = rem
        lb = 0
        for w in range(nb):
            need -= self.sort_buf[w]
            lb += 1
            if need <= 0:
                break
        if need > 0:
            return 0
        if depth + lb >= self.best_size:
            return 0
        cdef int best_r = -1
        cdef long long best_cnt = self.ncols + 1
        cdef long long packed = 0
        cdef uint64_t inter, mword
        cdef uint64_t* used = &self.used_buf[0]
        cdef uint64_t* tmp = &self.tmp_buf[0]
        for w in range(self.wc):
            used[w] = 0
        for r in range(self.n_rows):
            if _bit(covered, r):
                continue
            rc = &self.rowcols[r, 0]
            cnt = 0
            inter = 0
            for w in range(self.wc):
                mword = rc[w] & avail[w]
                tmp[w] = mword
                cnt += __builtin_popcountll(mword)
                inter |= mword & used[w]
            if cnt == 0:
                return 0
            if cnt < best_cnt:
                best_cnt = cnt
                best_r = r
            if inter == 0:
                packed += 1
                for w in range(self.wc):
                    used[w] |= tmp[w]
        if depth + packed >= self.best_size:
            return 0
        cdef uint64_t* child_cov = &self.cov_stk[depth + 1, 0]
        cdef uint64_t* child_av = &self.avail_stk[depth + 1, 0]
        for w in range(self.wc):
            child_av[w] = avail[w]
        rc = &self.rowcols[best_r, 0]
        for c in range(self.ncols):
            if not (_bit(rc, c) and _bit(avail, c)):
                continue
            child_av[c >> 6] &= ~((<uint64_t>1) << (c & 63))
            col = &self.colrows[c, 0]
            for w in range(self.wr):
                child_cov[w] = covered[w] | col[w]
            self.chosen[depth] = c
            self.dfs1(depth + 1)
        return 0

    cdef int dfs2(self, int depth, int start_c) except -1:
        self.nodes += 1
        if self.budget >= 0 and self.nodes > self.budget:
            raise BudgetExhausted
        cdef uint64_t* covered = &self.cov_stk[depth, 0]
        cdef int w, r, c
        cdef long long rem = self.n_rows - self._popcnt(covered, self.wr)
        if rem == 0:
            lst = []
            for w in range(depth):
                lst.append(self.target[w])
            self.found = tuple(lst)
            return 1
        if depth == self.k:
            return 0
        cdef long long g
        cdef uint64_t* col
        cdef int64_t* gains = &self.gains_stk[depth, 0]
        cdef int64_t* suffmax = &self.suffmax_stk[depth, 0]
        for c in range(start_c, self.ncols):
            col = &self.colrows[c, 0]
            g = 0
            for w in range(self.wr):
                g += __builtin_popcountll(col[w] & ~covered[w])
            gains[c] = g
        suffmax[self.ncols] = 0
        for c in range(self.ncols - 1, start_c - 1, -1):
            g = gains[c]
            suffmax[c] = g if g > suffmax[c + 1] else suffmax[c + 1]
        # same prefix-of-sorted-gains bound as phase 1, over the tail columns
        cdef long long picks_left = self.k - depth
        cdef long long need
        cdef int nb = 0, lb
        for c in range(start_c, self.ncols):
            g = gains[c]
            if g:
                self.sort_buf[nb] = g
                nb += 1
        if nb:
            qsort(&self.sort_buf[0], nb, sizeof(int64_t), _cmp_desc)
        need = rem
        lb = 0
        for w in range(nb):
            if need <= 0:
                break
            need -= self.sort_buf[w]
            lb += 1
        if need > 0 or lb > picks_left:
            return 0
        # mask of columns >= start_c, applied wordwise while scanning rows
        cdef int start_w = start_c >> 6
        cdef uint64_t start_mask = (<uint64_t>0) - ((<uint64_t>1) << (start_c & 63))
        cdef int cap = self.ncols - 1
        cdef int top, hi_w
        cdef uint64_t word, inter
        cdef uint64_t* rc
        cdef uint64_t* used = &self.used_buf[0]
        cdef uint64_t* tmp = &self.tmp_buf[0]
        cdef long long packed = 0
        for w in range(self.wc):
            used[w] = 0
        for r in range(self.n_rows):
            if _bit(covered, r):
                continue
            rc = &self.rowcols[r, 0]
            hi_w = -1
            inter = 0
            for w in range(self.wc):
                word = rc[w]
                if w < start_w:
                    word = 0
                elif w == start_w:
                    word &= start_mask
                tmp[w] = word
                inter |= word & used[w]
                if word:
                    hi_w = w
            if hi_w < 0:
                return 0
            top = (hi_w << 6) + 63 - __builtin_clzll(tmp[hi_w])
            if top < cap:
                cap = top
            if inter == 0:
                packed += 1
                for w in range(self.wc):
                    used[w] |= tmp[w]
        if packed > picks_left:
            return 0
        cdef long long rem_child, smax
        cdef uint64_t* child_cov = &self.cov_stk[depth + 1, 0]
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
            col = &self.colrows[c, 0]
            for w in range(self.wr):
                child_cov[w] = covered[w] | col[w]
            self.target[depth] = c
            if self.dfs2(depth + 1, c + 1):
                return 1
        return 0


def solve_cover(object colrows_arr, int ncols, int n_rows, long long budget):
    """``(value, witness, optimal, nodes)`` for column row-bitsets packed as a
    C-contiguous ``(ncols, ceil(n_rows/64))`` uint64 array.  ``budget < 0``
    means unlimited."""
    if n_rows == 0:
        return (0, (), True, 0)
    cdef int wr = (n_rows + 63) >> 6
    cdef int wc = (ncols + 63) >> 6 if ncols else 1
    cdef uint64_t[:, ::1] colrows = colrows_arr
    rowcols_arr = np.zeros((n_rows, wc), dtype=np.uint64)
    cdef uint64_t[:, ::1] rowcols = rowcols_arr
    cdef int c, r, w
    cdef uint64_t word
    for c in range(ncols):
        for w in range(wr):
            word = colrows[c, w]
            while word:
                r = (w << 6) + __builtin_popcountll((word & (~word + 1)) - 1)
                rowcols[r, c >> 6] |= (<uint64_t>1) << (c & 63)
                word &= word - 1
    for r in range(n_rows):
        word = 0
        for w in range(wc):
            word |= rowcols[r, w]
        if word == 0:
            raise ValueError(f"row {r} has no covering column")

    # greedy incumbent, ties toward low column ids
    cov_arr = np.zeros(wr, dtype=np.uint64)
    cdef uint64_t[::1] cov = cov_arr
    greedy = []
    cdef long long rem = n_rows, best_gain, gain
    cdef int best_c
    while rem > 0:
        best_c = -1
        best_gain = 0
        for c in range(ncols):
            gain = 0
            for w in range(wr):
                gain += __builtin_popcountll(colrows[c, w] & ~cov[w])
            if gain > best_gain:
                best_gain = gain
                best_c = c
        greedy.append(best_c)
        for w in range(wr):
            cov[w] |= colrows[best_c, w]
        rem -= best_gain

    cdef _CoverSearch s = _CoverSearch()
    s.ncols = ncols
    s.n_rows = n_rows
    s.wr = wr
    s.wc = wc
    s.colrows = colrows
    s.rowcols = rowcols
    s.budget = budget
    s.nodes = 0
    s.best_size = len(greedy)
    s.best_witness = tuple(sorted(greedy))
    cdef int maxd = len(greedy) + 2
    cov_stk = np.zeros((maxd, wr), dtype=np.uint64)
    avail_stk = np.zeros((maxd, wc), dtype=np.uint64)
    s.cov_stk = cov_stk
    s.avail_stk = avail_stk
    s.chosen = np.zeros(maxd, dtype=np.int64)
    s.target = np.zeros(maxd, dtype=np.int64)
    s.gains_stk = np.zeros((maxd, ncols + 1), dtype=np.int64)
    s.suffmax_stk = np.zeros((maxd, ncols + 2), dtype=np.int64)
    s.sort_buf = np.zeros(max(ncols, 1), dtype=np.int64)
    s.used_buf = np.zeros(wc, dtype=np.uint64)
    s.tmp_buf = np.zeros(wc, dtype=np.uint64)
    # available-column bitset: all ncols columns, stray high bits cleared
    for c in range(ncols):
        avail_stk[0, c >> 6] |= np.uint64(1) << np.uint64(c & 63)

    try:
        s.dfs1(0)
    except BudgetExhausted:
        return (s.best_size, s.best_witness, False, s.nodes)

    s.k = s.best_size
    s.found = None
    cov_stk[0, :] = 0
    try:
        ok = s.dfs2(0, 0)
    except BudgetExhausted:
        return (s.k, s.best_witness, False, s.nodes)
    assert ok and s.found is not None
    return (s.k, s.found, True, s.nodes)


def weighing_distinct(object rows_arr, int n):
    """True iff the outcome vectors ``(popcount(u & x))_x`` are pairwise
    distinct over all n-bit ``u``.  Requires the packed key to fit 128 bits
    (the dispatcher checks); zero rows must be filtered out by the caller."""
    cdef uint64_t[::1] rows = rows_arr
    cdef int k = rows.shape[0]
    cdef int[64] widths
    cdef int j, w
    cdef int total = 0
    cdef uint64_t pc
    if k > 64:
        raise ValueError("too many rows for the native kernel")
    for j in range(k):
        pc = __builtin_popcountll(rows[j])
        w = 0
        while pc:
            w += 1
            pc >>= 1
        widths[j] = w
        total += w
    if total > 128:
        raise ValueError("packed outcome key exceeds 128 bits")
    cdef uint64_t count = (<uint64_t>1) << n
    his_arr = np.empty(count, dtype=np.uint64)
    los_arr = np.empty(count, dtype=np.uint64)
    cdef uint64_t[::1] his = his_arr
    cdef uint64_t[::1] los = los_arr
    cdef uint64_t u, hi, lo, cnt
    for u in range(count):
        hi = 0
        lo = 0
        for j in range(k):
            cnt = __builtin_popcountll(u & rows[j])
            w = widths[j]
            hi = (hi << w) | (lo >> (64 - w))
            lo = (lo << w) | cnt
        his[u] = hi
        los[u] = lo
    order = np.lexsort((los_arr, his_arr))
    sh = his_arr[order]
    sl = los_arr[order]
    dup = np.any((sh[1:] == sh[:-1]) & (sl[1:] == sl[:-1]))
    return not bool(dup)
