"""Coin weighing: detecting sets of subset-weighings and their hypercube face.

A weighing is an n-bit row x; weighing a 0/1 defect pattern u returns
``u . x = popcount(u & x)``.  A set of rows is a weighing strategy when the
outcome vectors identify every pattern.  M(n) is the least number of rows.

The bridge to doubly resolving sets of Q_n runs through the identity
``d(u, 0) - d(u, x) = 2(u . x) - popcount(x)``: adjoining the zero word to a
strategy gives a doubly resolving set and vice versa, so the hypercube
doubly-resolving minimum equals M(n) + 1.  The transforms here realize both
directions, the coin-count monotonicity M(n) <= M(n+1) <= M(n) + 1, and the
Lindstrom-style upper bounds P(n) driven by the binary-expansion complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import _kernels
from .errors import SizeCapError
from .families import CubeFamily
from .resolving import doubly_resolving_witness

VERIFY_CAP = 24
BRUTE_CAP = 5


@dataclass(frozen=True)
class WeighingStrategy:
    """Rows are n-bit integers (bit j set = coin j weighed), stored sorted."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("coin count must be >= 1")
        rows = tuple(sorted(set(self.rows)))
        for r in rows:
            if not 0 <= r < (1 << self.n):
                raise ValueError(f"row {r:#x} out of range for n={self.n}")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)


def is_weighing_strategy(s: WeighingStrategy) -> bool:
    """Exact verification: outcome vectors of all 2^n patterns are distinct.

    Capped at n = 24 (hashes 2^n outcome vectors).
    """
    if s.n > VERIFY_CAP:
        raise SizeCapError(f"exact verification capped at n={VERIFY_CAP}")
    return _kernels.weighing_outcomes_distinct(s.rows, s.n)


def brute_force_M(n: int) -> tuple[int, WeighingStrategy]:
    """Exact M(n) with the lexicographically smallest witness, by enumerating
    row subsets in ascending size.  Zero rows distinguish nothing and are
    excluded from the search.  Capped at n = 5."""
    if n > BRUTE_CAP:
        raise SizeCapError(f"brute-force M capped at n={BRUTE_CAP}")
    if n < 1:
        raise ValueError("coin count must be >= 1")
    candidates = range(1, 1 << n)
    for k in range(1, n + 1):  # identity rows always work, so M(n) <= n
        for rows in combinations(candidates, k):
            if _kernels.weighing_outcomes_distinct(rows, n):
                return k, WeighingStrategy(n, rows)
    raise AssertionError("identity strategy must verify")


def strategy_to_drs(s: WeighingStrategy) -> tuple[int, ...]:
    """Adjoin the zero word: a valid strategy becomes a doubly resolving set
    of Q_n of size |rows| + 1."""
    if not is_weighing_strategy(s):
        raise ValueError("not a valid weighing strategy")
    return (0,) + s.rows


def drs_to_strategy(n: int, landmarks: Sequence[int]) -> WeighingStrategy:
    """Strip the zero word from a doubly resolving set of Q_n.

    The zero word must be present; translate an arbitrary set with
    :func:`translate_landmarks` first (XOR by any member is an automorphism of
    Q_n preserving the doubly-resolving property).
    """
    if 0 not in landmarks:
        raise ValueError(
            "the zero word must belong to the set; translate_landmarks can move "
            "a chosen member onto it"
        )
    bad = doubly_resolving_witness(CubeFamily(n), landmarks)
    if bad is not None:
        raise ValueError(f"set is not doubly resolving (vertices {bad})")
    return WeighingStrategy(n, tuple(x for x in landmarks if x != 0))


def translate_landmarks(landmarks: Iterable[int], x: int) -> tuple[int, ...]:
    """Image of the set under the hypercube automorphism u -> u XOR x."""
    return tuple(u ^ x for u in landmarks)


def project_strategy(s: WeighingStrategy) -> WeighingStrategy:
    """Drop the last coin (top bit) from every row; valid for n coins whenever
    the input is valid for n+1."""
    if s.n < 2:
        raise ValueError("needs n >= 2")
    mask = (1 << (s.n - 1)) - 1
    return WeighingStrategy(s.n - 1, tuple(r & mask for r in s.rows))


def extend_strategy(s: WeighingStrategy) -> WeighingStrategy:
    """Add a coin: keep every row (new coin unweighed) and add the singleton
    weighing of the new coin.  Size grows by exactly one."""
    return WeighingStrategy(s.n + 1, s.rows + (1 << s.n,))


def lindstrom_complex(m: int) -> tuple[frozenset[int], ...]:
    """The family F_0..F_{m-1} with F_j = exponents in the binary expansion
    of j; subset-closed since any sub-sum of j is below j."""
    if m < 1:
        raise ValueError("needs m >= 1")
    out = []
    for j in range(m):
        exps = frozenset(i for i in range(j.bit_length()) if (j >> i) & 1)
        out.append(exps)
    return tuple(out)


def is_complex(family: Iterable[frozenset[int]]) -> bool:
    members = set(family)
    return all(
        frozenset(sub) in members
        for a in members
        for k in range(len(a) + 1)
        for sub in combinations(sorted(a), k)
    )


def complex_weight(family: Iterable[frozenset[int]]) -> int:
    return sum(len(a) for a in family)


def algorithm1_bounds(m: int) -> dict[int, int]:
    """Upper bounds P(n) on the doubly-resolving minimum of Q_n for
    n <= sum of popcounts of 1..m-1: after the first i members of the
    binary-expansion complex account for N coins, the next popcount(i) coin
    counts are handled with i+1 landmarks."""
    if m < 2:
        raise ValueError("needs m >= 2")
    bounds: dict[int, int] = {}
    reached = 0
    for i in range(1, m):
        step = i.bit_count()
        for n in range(reached + 1, reached + step + 1):
            bounds[n] = i + 1
        reached += step
    return bounds


def complex_size_for(n_max: int) -> int:
    """Smallest m whose popcount prefix sum reaches n_max."""
    if n_max < 1:
        raise ValueError("needs n_max >= 1")
    total = 0
    i = 0
    while total < n_max:
        i += 1
        total += i.bit_count()
    return i + 1
