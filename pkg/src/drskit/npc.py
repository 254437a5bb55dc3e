"""Reduction gadgets from 3-dimensional matching.

Given a 3DM instance (parts A, B, C of size n, triple set S) and a copy count
N, the gadget graph has an ``I`` side holding four hub vertices s_A, s_B, s_C,
s_D plus one vertex per triple copy, and a ``J`` side holding the element
copies plus selector vertices d_0..d_{v-1} with v = ceil(log2(N * |S|)), each
d_i adjacent to the triples whose global index has bit i set.  Base edges:

1. elements of A to s_A,   2. B to s_B,   3. C to s_C,
4. every element to s_D,
5. each triple to its three elements (within its copy),
6. d_i to triple s_j when floor(j / 2^i) is odd,
7. every d_i to s_D.

Variant extras: ``bipartite`` none, ``split`` makes J a clique, and
``cobipartite`` makes both I and J cliques.  For any perfect matching, the
matched triples together with the hubs and selectors form a doubly resolving
set in all three variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import FormatError
from .graph import Graph

VARIANTS = ("split", "bipartite", "cobipartite")


@dataclass(frozen=True)
class ThreeDMInstance:
    """Parts A, B, C have n elements each; triples index into them."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("part size must be >= 1")
        seen = set()
        for t in self.triples:
            if len(t) != 3 or any(not 0 <= x < self.n for x in t):
                raise ValueError(f"triple {t} out of range for n={self.n}")
            if t in seen:
                raise ValueError(f"duplicate triple {t}")
            seen.add(t)


def parse_3dm(text: str) -> ThreeDMInstance:
    """Parse the 3DM text format: line ``n <int>`` then one ``a b c`` triple
    per line, 0-indexed.  ``#`` starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("empty 3DM input")
    head = rows[0]
    if len(head) != 2 or head[0] != "n":
        raise FormatError(f"first line must be 'n <int>', got {' '.join(head)!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad part size {head[1]!r}") from exc
    triples = []
    for fields in rows[1:]:
        if len(fields) != 3:
            raise FormatError(f"triple line must be 'a b c', got {' '.join(fields)!r}")
        try:
            triples.append(tuple(int(x) for x in fields))
        except ValueError as exc:
            raise FormatError(f"non-integer triple {' '.join(fields)!r}") from exc
    if not triples:
        raise FormatError("no triples given")
    try:
        return ThreeDMInstance(n, tuple(triples))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# vertex layout: s_A s_B s_C s_D, d_0..d_{v-1}, elements by part/copy/index,
# triples by copy/index
def _element_id(v_bits: int, copies: int, n: int, part: int, copy: int, j: int) -> int:
    return 4 + v_bits + (part * copies + copy) * n + j


def _triple_id(v_bits: int, copies: int, n: int, tau: int, copy: int, j: int) -> int:
    return 4 + v_bits + 3 * copies * n + copy * tau + j


@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    roles: tuple[str, ...]
    instance: ThreeDMInstance
    variant: str
    copies: int
    v_bits: int

    s_a = 0
    s_b = 1
    s_c = 2
    s_d = 3

    def d_id(self, i: int) -> int:
        return 4 + i

    def element_id(self, part: int, copy: int, index: int) -> int:
        return _element_id(self.v_bits, self.copies, self.instance.n, part, copy, index)

    def triple_id(self, copy: int, index: int) -> int:
        return _triple_id(
            self.v_bits, self.copies, self.instance.n, len(self.instance.triples), copy, index
        )

    def i_side(self) -> tuple[int, ...]:
        """Hubs and triple vertices."""
        tau = len(self.instance.triples)
        trips = [
            self.triple_id(c, j) for c in range(self.copies) for j in range(tau)
        ]
        return (self.s_a, self.s_b, self.s_c, self.s_d, *trips)

    def j_side(self) -> tuple[int, ...]:
        """Element and selector vertices."""
        out = [self.d_id(i) for i in range(self.v_bits)]
        for part in range(3):
            for copy in range(self.copies):
                for idx in range(self.instance.n):
                    out.append(self.element_id(part, copy, idx))
        return tuple(sorted(out))


def build_gadget(
    inst: ThreeDMInstance, variant: str, copies: int = 1
) -> GadgetGraph:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if copies < 1:
        raise ValueError("copy count must be >= 1")
    tau = len(inst.triples)
    if tau == 0:
        raise ValueError("empty triple set")
    n = inst.n
    total_triples = copies * tau
    v_bits = (total_triples - 1).bit_length()

    roles: list[str] = ["s_A", "s_B", "s_C", "s_D"]
    roles.extend(f"d_{i}" for i in range(v_bits))
    for part_name in "ABC":
        for copy in range(copies):
            roles.extend(f"{part_name}_{copy}_{j}" for j in range(n))
    for copy in range(copies):
        roles.extend(f"t_{copy}_{j}" for j in range(tau))

    def eid(part: int, copy: int, j: int) -> int:
        return _element_id(v_bits, copies, n, part, copy, j)

    def tid(copy: int, j: int) -> int:
        return _triple_id(v_bits, copies, n, tau, copy, j)

    nv = 4 + v_bits + 3 * copies * n + total_triples
    edges: list[tuple[int, int]] = []
    for part in range(3):
        for copy in range(copies):
            for j in range(n):
                e = eid(part, copy, j)
                edges.append((e, part))  # s_A, s_B, s_C are ids 0, 1, 2
                edges.append((e, 3))
    for copy in range(copies):
        for j, (a, b, c) in enumerate(inst.triples):
            t = tid(copy, j)
            edges.append((eid(0, copy, a), t))
            edges.append((eid(1, copy, b), t))
            edges.append((eid(2, copy, c), t))
            g = copy * tau + j
            for i in range(v_bits):
                if (g >> i) & 1:
                    edges.append((4 + i, t))
    for i in range(v_bits):
        edges.append((4 + i, 3))

    i_side = [0, 1, 2, 3]
    i_side += [tid(c, j) for c in range(copies) for j in range(tau)]
    j_side = [4 + i for i in range(v_bits)]
    j_side += [
        eid(p, c, j) for p in range(3) for c in range(copies) for j in range(n)
    ]
    if variant in ("split", "cobipartite"):
        edges.extend(combinations(sorted(j_side), 2))
    if variant == "cobipartite":
        edges.extend(combinations(sorted(i_side), 2))

    graph = Graph.from_edge_list(nv, edges)
    return GadgetGraph(graph, tuple(roles), inst, variant, copies, v_bits)


def matching_cost(inst: ThreeDMInstance, subset: Iterable[int]) -> int:
    """|S'| + 3n - |elements covered by S'| for a triple-index subset of the
    base instance; equals |S'| exactly when coverage is total."""
    idx = sorted(set(subset))
    for i in idx:
        if not 0 <= i < len(inst.triples):
            raise ValueError(f"triple index {i} out of range")
    covered = set()
    for i in idx:
        a, b, c = inst.triples[i]
        covered.update([(0, a), (1, b), (2, c)])
    return len(idx) + 3 * inst.n - len(covered)


def is_perfect_matching(inst: ThreeDMInstance, subset: Iterable[int]) -> bool:
    idx = sorted(set(subset))
    if len(idx) != inst.n:
        return False
    return matching_cost(inst, idx) == inst.n


def find_perfect_matching(inst: ThreeDMInstance) -> Optional[tuple[int, ...]]:
    """Exhaustive search over triple subsets; intended for tiny instances."""
    for subset in combinations(range(len(inst.triples)), inst.n):
        if is_perfect_matching(inst, subset):
            return subset
    return None


def witness_set(gadget: GadgetGraph, matching: Sequence[int]) -> tuple[int, ...]:
    """Landmarks from a perfect matching of the base instance, replicated in
    every copy: matched triples + the four hubs + all selectors; the set is
    doubly resolving in all three variants.  Size = N*n + 4 + v."""
    if not is_perfect_matching(gadget.instance, matching):
        raise ValueError("matching is not a perfect 3-dimensional matching")
    out = [gadget.s_a, gadget.s_b, gadget.s_c, gadget.s_d]
    out.extend(gadget.d_id(i) for i in range(gadget.v_bits))
    for copy in range(gadget.copies):
        out.extend(gadget.triple_id(copy, j) for j in sorted(set(matching)))
    return tuple(sorted(out))


def ddrs_core(gadget: GadgetGraph) -> tuple[int, ...]:
    """The hub-and-selector set {s_A, s_B, s_C, d_0..d_{v-1}}: a doubly
    distance resolving set on s_D in every variant."""
    return (
        gadget.s_a,
        gadget.s_b,
        gadget.s_c,
        *(gadget.d_id(i) for i in range(gadget.v_bits)),
    )


def roles_sidecar(gadget: GadgetGraph) -> str:
    """Role-map sidecar: one ``<id> <role>`` line per vertex."""
    return "\n".join(f"{i} {r}" for i, r in enumerate(gadget.roles)) + "\n"
