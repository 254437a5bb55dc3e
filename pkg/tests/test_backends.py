"""The compiled and pure kernels must be interchangeable: same values, same
witnesses, same optimal flags, same node counts."""

import random

import numpy as np
import pytest

from drskit._kernels import BACKEND, pure

try:
    from drskit._kernels import _native
except ImportError:
    _native = None

needs_native = pytest.mark.skipif(
    _native is None, reason="native kernel not built"
)


def native_solve(masks, n_rows, budget=None):
    ncols = len(masks)
    words = max(1, (n_rows + 63) // 64)
    arr = np.zeros((ncols, words), dtype=np.uint64)
    for c, m in enumerate(masks):
        w = 0
        while m:
            arr[c, w] = m & 0xFFFFFFFFFFFFFFFF
            m >>= 64
            w += 1
    r = _native.solve_cover(arr, ncols, n_rows, -1 if budget is None else budget)
    return (int(r[0]), tuple(int(x) for x in r[1]), bool(r[2]), int(r[3]))


def test_backend_name_is_sane():
    assert BACKEND in ("native", "pure")


@needs_native
def test_cover_solver_equivalence():
    rng = random.Random(101)
    checked = 0
    while checked < 400:
        n_rows = rng.randint(1, 90)
        ncols = rng.randint(1, 14)
        density = rng.choice([0.15, 0.4, 0.7])
        masks = [
            sum(1 << r for r in range(n_rows) if rng.random() < density)
            for _ in range(ncols)
        ]
        union = 0
        for m in masks:
            union |= m
        if union != (1 << n_rows) - 1:
            continue
        budget = rng.choice([None, None, None, 2, 19, 150])
        assert pure.solve_cover(masks, n_rows, budget) == native_solve(
            masks, n_rows, budget
        )
        checked += 1


@needs_native
def test_weighing_equivalence():
    rng = random.Random(55)
    for _ in range(300):
        n = rng.randint(1, 10)
        k = rng.randint(1, min(6, n + 2))
        rows = [rng.getrandbits(n) for _ in range(k)]
        nonzero = [r for r in rows if r]
        want = pure.weighing_outcomes_distinct(rows, n)
        if nonzero:
            got = bool(
                _native.weighing_distinct(np.array(nonzero, dtype=np.uint64), n)
            )
            assert got == want


@needs_native
def test_weighing_equivalence_larger_n():
    # identity strategy and a broken variant at a size worth compiling for
    n = 16
    identity = [1 << i for i in range(n)]
    assert bool(
        _native.weighing_distinct(np.array(identity, dtype=np.uint64), n)
    )
    assert pure.weighing_outcomes_distinct(identity, n)
    broken = identity[:-2] + [3 << (n - 2)]
    assert not bool(
        _native.weighing_distinct(np.array(broken, dtype=np.uint64), n)
    )
    assert not pure.weighing_outcomes_distinct(broken, n)
