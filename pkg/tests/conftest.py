import os
import random
from itertools import combinations

import pytest

from drskit.graph import Graph

extended = pytest.mark.skipif(
    not os.environ.get("DRSKIT_EXTENDED"),
    reason="extended table rows may take hours; set DRSKIT_EXTENDED=1",
)


def cycle(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edge_list(n, list(combinations(range(n), 2)))


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus density-``extra`` chords; always connected."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add(tuple(sorted((perm[i], perm[j]))))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edge_list(n, sorted(edges))


def connected_graphs_upto(max_n: int):
    """All labeled connected graphs with 2..max_n vertices (small n only)."""
    for n in range(2, max_n + 1):
        slots = list(combinations(range(n), 2))
        for mask in range(1 << len(slots)):
            edges = [slots[i] for i in range(len(slots)) if (mask >> i) & 1]
            g = Graph.from_edge_list(n, edges)
            if g.is_connected():
                yield g
