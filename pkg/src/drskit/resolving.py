"""Verification predicates for landmark sets.

Three notions, all phrased over hop distances ``d``:

* resolving: every vertex has a distinct vector ``(d(u, x_1), ..., d(u, x_m))``.
* doubly resolving: no two distance vectors differ by a constant vector.
  Equivalently (fixing ``x_1``), the normalized vectors
  ``(d(u, x_j) - d(u, x_1))_j`` are pairwise distinct.
* doubly distance resolving on an anchor ``x``: the difference vector
  ``(d(u, x) - d(u, x_j))_j`` determines ``d(u, x)``.

Each predicate has a ``*_witness`` variant returning the first offending
vertex pair for diagnostics (``None`` when the predicate holds).  Distinctness
is checked by hashing signatures, one pass over the vertex set.

All functions accept any distance provider with ``n_vertices``,
``dist(u, v)`` and ``is_connected()`` -- an explicit :class:`~drskit.graph.Graph`
or a closed-form family oracle from :mod:`drskit.families`.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import require_connected

Pair = tuple[int, int]


def _check_landmarks(g, landmarks: Sequence[int], minimum: int, what: str) -> None:
    if len(landmarks) < minimum:
        raise ValueError(f"{what} requires at least {minimum} landmark(s)")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError("landmark set contains duplicates")
    n = g.n_vertices
    for x in landmarks:
        if not 0 <= x < n:
            raise ValueError(f"landmark {x} out of range")


def distance_vector(g, u: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    """Vector of distances from ``u`` to each landmark, in landmark order."""
    require_connected(g)
    _check_landmarks(g, landmarks, 1, "distance vector")
    return tuple(g.dist(u, x) for x in landmarks)


def resolving_witness(g, landmarks: Sequence[int]) -> Optional[Pair]:
    """First pair of vertices sharing a distance vector, else ``None``."""
    require_connected(g)
    _check_landmarks(g, landmarks, 0, "resolving check")
    seen: dict[tuple[int, ...], int] = {}
    for u in range(g.n_vertices):
        key = tuple(g.dist(u, x) for x in landmarks)
        if key in seen:
            return (seen[key], u)
        seen[key] = u
    return None


def is_resolving(g, landmarks: Sequence[int]) -> bool:
    return resolving_witness(g, landmarks) is None


def doubly_resolving_witness(g, landmarks: Sequence[int]) -> Optional[Pair]:
    """First pair whose distance vectors differ by a constant, else ``None``.

    Normalization subtracts the distance to ``landmarks[0]``; the verdict is
    independent of which member is used as the base point.
    """
    require_connected(g)
    _check_landmarks(g, landmarks, 2, "doubly resolving check")
    base = landmarks[0]
    rest = landmarks[1:]
    seen: dict[tuple[int, ...], int] = {}
    for u in range(g.n_vertices):
        d0 = g.dist(u, base)
        key = tuple(g.dist(u, x) - d0 for x in rest)
        if key in seen:
            return (seen[key], u)
        seen[key] = u
    return None


def is_doubly_resolving(g, landmarks: Sequence[int]) -> bool:
    return doubly_resolving_witness(g, landmarks) is None


def ddrs_witness(g, anchor: int, landmarks: Sequence[int]) -> Optional[Pair]:
    """First pair ``u, v`` with ``d(u, anchor) != d(v, anchor)`` but equal
    difference vectors ``(d(., anchor) - d(., x_j))_j``, else ``None``."""
    require_connected(g)
    _check_landmarks(g, landmarks, 1, "doubly distance resolving check")
    if not 0 <= anchor < g.n_vertices:
        raise ValueError(f"anchor {anchor} out of range")
    seen: dict[tuple[int, ...], tuple[int, int]] = {}
    for u in range(g.n_vertices):
        da = g.dist(u, anchor)
        key = tuple(da - g.dist(u, x) for x in landmarks)
        hit = seen.get(key)
        if hit is None:
            seen[key] = (u, da)
        elif hit[1] != da:
            return (hit[0], u)
    return None


def is_ddrs(g, anchor: int, landmarks: Sequence[int]) -> bool:
    return ddrs_witness(g, anchor, landmarks) is None


def compose_drs(
    g,
    resolving: Sequence[int],
    anchor: int,
    ddrs: Sequence[int],
) -> tuple[int, ...]:
    """Union of a resolving set and a doubly distance resolving set on one of
    its members, which is always doubly resolving: pairs equidistant from the
    anchor are split by the resolving set (and then doubly resolved against
    the anchor), the others by the anchored difference vectors.

    Order of the result: anchor, remaining resolving vertices, then the ddrs
    vertices not already present.  Preconditions are re-verified and reported
    individually.
    """
    if anchor not in resolving:
        raise ValueError(f"anchor {anchor} is not a member of the resolving set")
    bad = resolving_witness(g, resolving)
    if bad is not None:
        raise ValueError(f"set is not resolving: vertices {bad} share a vector")
    bad = ddrs_witness(g, anchor, ddrs)
    if bad is not None:
        raise ValueError(
            f"set is not doubly distance resolving on {anchor}: "
            f"vertices {bad} share a difference vector"
        )
    out = [anchor]
    out.extend(x for x in resolving if x != anchor)
    out.extend(x for x in ddrs if x not in out)
    return tuple(out)
