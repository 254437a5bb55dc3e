"""Exact minima for the three landmark objectives.

``beta``  -- minimum resolving set: classic set cover, rows = vertex pairs,
column ``t`` covers ``{u, v}`` iff ``d(u,t) != d(v,t)``.

``phi``   -- minimum doubly distance resolving set on an anchor ``s``: rows
are the pairs with ``d(u,s) != d(v,s)``, column ``t`` covers a row iff
``d(u,s)-d(u,t) != d(v,s)-d(v,t)``.

``psi``   -- minimum doubly resolving set.  Fixing any member ``a`` of the
set, the remaining members must separate every vertex pair through the
differences against ``a`` -- the same column rule as ``phi`` but over all
pairs.  The general solver scans each anchor ``a`` with columns restricted to
ids above ``a`` (every set is counted at its smallest member), which also
yields the lexicographically smallest witness.  Vertex-transitive graphs have
a minimum (doubly) resolving set through vertex 0, so callers asserting
``vertex_transitive=True`` get the single-anchor shortcut.

All builders accept a ``Graph`` or a closed-form family oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .cover import CoverInstance, CoverResult, solve_cover_exact
from .errors import InfeasibleCoverError, SizeCapError
from .graph import require_connected
from .resolving import is_ddrs, is_doubly_resolving, is_resolving

BRUTE_FORCE_CAP = 16


@dataclass(frozen=True)
class SolveResult:
    objective: str  # "beta" | "psi" | "phi"
    value: int
    witness: tuple[int, ...]  # sorted vertex ids
    optimal: bool

    def to_json(self) -> dict:
        return {
            "objective": self.objective,
            "value": self.value,
            "witness": list(self.witness),
            "optimal": self.optimal,
        }


def _distance_rows(g) -> Sequence[Sequence[int]]:
    if hasattr(g, "distance_matrix"):
        return g.distance_matrix()
    n = g.n_vertices
    dist = g.dist
    return [[dist(u, v) for v in range(n)] for u in range(n)]


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def build_beta_cover(g) -> CoverInstance:
    """Rows: all vertex pairs; column t covers {u,v} iff d(u,t) != d(v,t)."""
    require_connected(g)
    dm = _distance_rows(g)
    n = g.n_vertices
    rows = _all_pairs(n)
    covers = []
    for t in range(n):
        dt = dm[t]
        mask = 0
        bit = 1
        for u, v in rows:
            if dt[u] != dt[v]:
                mask |= bit
            bit <<= 1
        covers.append(mask)
    return CoverInstance(tuple(rows), tuple(range(n)), tuple(covers))


def build_phi_cover(g, anchor: int) -> CoverInstance:
    """Rows: pairs split by the anchor; column t covers (u,v) iff the
    difference d(.,anchor) - d(.,t) separates them."""
    require_connected(g)
    dm = _distance_rows(g)
    n = g.n_vertices
    if not 0 <= anchor < n:
        raise ValueError(f"anchor {anchor} out of range")
    da = dm[anchor]
    rows = [(u, v) for u, v in _all_pairs(n) if da[u] != da[v]]
    covers = []
    for t in range(n):
        dt = dm[t]
        mask = 0
        bit = 1
        for u, v in rows:
            if da[u] - dt[u] != da[v] - dt[v]:
                mask |= bit
            bit <<= 1
        covers.append(mask)
    return CoverInstance(tuple(rows), tuple(range(n)), tuple(covers))


def build_psi_cover_anchored(g, anchor: int, min_col: int = 0) -> CoverInstance:
    """Rows: all vertex pairs; column t covers {u,v} iff the difference
    d(.,anchor) - d(.,t) separates them.  The cover value plus one (for the
    anchor itself) is the minimum size of a doubly resolving set containing
    the anchor (with all other members >= ``min_col``)."""
    require_connected(g)
    dm = _distance_rows(g)
    n = g.n_vertices
    if not 0 <= anchor < n:
        raise ValueError(f"anchor {anchor} out of range")
    da = dm[anchor]
    rows = _all_pairs(n)
    diff = [da[u] - da[v] for u, v in rows]
    columns = [t for t in range(min_col, n) if t != anchor]
    covers = []
    for t in columns:
        dt = dm[t]
        mask = 0
        bit = 1
        for i, (u, v) in enumerate(rows):
            if diff[i] != dt[u] - dt[v]:
                mask |= bit
            bit <<= 1
        covers.append(mask)
    return CoverInstance(tuple(rows), tuple(columns), tuple(covers))


def solve_beta(
    g, budget: Optional[int] = None, vertex_transitive: bool = False
) -> SolveResult:
    """Metric dimension with witness.  ``vertex_transitive=True`` asserts the
    graph has a minimum resolving set through vertex 0, pinning vertex 0 and
    covering the remaining pairs -- only families may assert this."""
    require_connected(g)
    n = g.n_vertices
    if n <= 1:
        return SolveResult("beta", 0, (), True)
    if not vertex_transitive:
        res = solve_cover_exact(build_beta_cover(g), budget)
        return SolveResult("beta", res.value, res.chosen, res.optimal)
    dm = _distance_rows(g)
    d0 = dm[0]
    rows = [(u, v) for u, v in _all_pairs(n) if d0[u] == d0[v]]
    covers = []
    for t in range(1, n):
        dt = dm[t]
        mask = 0
        bit = 1
        for u, v in rows:
            if dt[u] != dt[v]:
                mask |= bit
            bit <<= 1
        covers.append(mask)
    inst = CoverInstance(tuple(rows), tuple(range(1, n)), tuple(covers))
    res = solve_cover_exact(inst, budget)
    return SolveResult("beta", res.value + 1, (0,) + res.chosen, res.optimal)


def solve_phi(g, anchor: int, budget: Optional[int] = None) -> SolveResult:
    require_connected(g)
    if g.n_vertices < 2:
        raise ValueError("doubly distance resolving needs >= 2 vertices")
    res = solve_cover_exact(build_phi_cover(g, anchor), budget)
    return SolveResult("phi", res.value, res.chosen, res.optimal)


def phi_of_graph(g, budget: Optional[int] = None) -> int:
    """max over anchors of the anchored minimum (the graph-level invariant)."""
    return max(solve_phi(g, a, budget).value for a in range(g.n_vertices))


def solve_psi_anchored(g, anchor: int, budget: Optional[int] = None) -> SolveResult:
    """Minimum doubly resolving set constrained to contain ``anchor``."""
    require_connected(g)
    if g.n_vertices < 2:
        raise ValueError("doubly resolving needs >= 2 vertices")
    res = solve_cover_exact(build_psi_cover_anchored(g, anchor), budget)
    witness = tuple(sorted((anchor,) + res.chosen))
    return SolveResult("psi", res.value + 1, witness, res.optimal)


def solve_psi(
    g, budget: Optional[int] = None, vertex_transitive: bool = False
) -> SolveResult:
    require_connected(g)
    n = g.n_vertices
    if n < 2:
        raise ValueError("doubly resolving needs >= 2 vertices")
    if vertex_transitive:
        return solve_psi_anchored(g, 0, budget)
    best: Optional[tuple[int, tuple[int, ...]]] = None
    all_optimal = True
    for a in range(n):
        inst = build_psi_cover_anchored(g, a, min_col=a + 1)
        try:
            res = solve_cover_exact(inst, budget)
        except InfeasibleCoverError:
            continue  # no doubly resolving set has a as its smallest member
        all_optimal = all_optimal and res.optimal
        cand = (1 + res.value, (a,) + res.chosen)
        if best is None or cand[0] < best[0]:
            best = cand
    assert best is not None
    return SolveResult("psi", best[0], best[1], all_optimal)


def brute_force_min(
    g, objective: str, anchor: Optional[int] = None
) -> SolveResult:
    """Independent oracle: enumerate subsets in lexicographic order against
    the predicates.  Capped at 16 vertices."""
    require_connected(g)
    n = g.n_vertices
    if n > BRUTE_FORCE_CAP:
        raise SizeCapError(f"brute force capped at {BRUTE_FORCE_CAP} vertices")
    if objective == "beta":
        start, universe, check = 0, range(n), lambda s: is_resolving(g, s)
    elif objective == "psi":
        if n < 2:
            raise ValueError("doubly resolving needs >= 2 vertices")
        start, universe, check = 2, range(n), lambda s: is_doubly_resolving(g, s)
    elif objective == "phi":
        if anchor is None:
            raise ValueError("phi requires an anchor")
        if n < 2:
            raise ValueError("doubly distance resolving needs >= 2 vertices")
        universe = [v for v in range(n) if v != anchor]
        start, check = 1, lambda s: is_ddrs(g, anchor, s)
    else:
        raise ValueError(f"unknown objective {objective!r}")
    for k in range(start, len(universe) + 1):
        for subset in combinations(universe, k):
            if check(subset):
                return SolveResult(objective, k, subset, True)
    raise AssertionError("full vertex set must satisfy the predicate")
