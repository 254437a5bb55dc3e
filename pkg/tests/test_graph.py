import random

import pytest

from drskit.errors import FormatError
from drskit.families import CubeFamily, build_graph
from drskit.graph import (
    Graph,
    UNREACHABLE,
    all_pairs_distances,
    cartesian_product,
    format_edge_list,
    from_edge_list,
    is_connected,
    read_edge_list,
)

from conftest import complete, cycle, path, random_connected_graph


def test_single_edge():
    g = from_edge_list(2, [(0, 1)])
    assert g.dist(0, 1) == 1


def test_four_cycle_antipode():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.dist(0, 2) == 2


def test_self_loop_rejected():
    with pytest.raises(ValueError, match="self-loop"):
        from_edge_list(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(ValueError, match="out of range"):
        from_edge_list(2, [(0, 2)])


def test_duplicate_edges_merged():
    g = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
    assert g.n_edges() == 1


def test_all_pairs_k2_and_path():
    assert all_pairs_distances(complete(2)) == ((0, 1), (1, 0))
    assert path(3).dist(0, 2) == 2


def test_disconnected_marker():
    g = Graph(2, [[], []])
    assert g.dist(0, 1) == UNREACHABLE
    assert not is_connected(g)


def test_is_connected():
    assert is_connected(complete(2))
    assert is_connected(cycle(4))
    assert not is_connected(Graph(2, [[], []]))


def test_bfs_matrix_symmetric_zero_diagonal():
    rng = random.Random(11)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(2, 8))
        dm = g.distance_matrix()
        for u in range(g.n_vertices):
            assert dm[u][u] == 0
            for v in range(g.n_vertices):
                assert dm[u][v] == dm[v][u]


def test_product_k2_k2_is_c4():
    g = cartesian_product(complete(2), complete(2))
    assert g.n_vertices == 4
    assert all(len(g.neighbors(u)) == 2 for u in range(4))
    assert is_connected(g)
    assert max(max(row) for row in g.distance_matrix()) == 2


def test_product_distance_additivity_k3():
    k3 = complete(3)
    prod = cartesian_product(k3, k3)
    dm = prod.distance_matrix()
    for g1 in range(3):
        for h1 in range(3):
            for g2 in range(3):
                for h2 in range(3):
                    assert dm[g1 * 3 + h1][g2 * 3 + h2] == k3.dist(g1, g2) + k3.dist(
                        h1, h2
                    )


def test_product_distance_additivity_random():
    rng = random.Random(5)
    for _ in range(15):
        g = random_connected_graph(rng, rng.randint(2, 6))
        h = random_connected_graph(rng, rng.randint(2, 6))
        prod = cartesian_product(g, h)
        dm = prod.distance_matrix()
        nh = h.n_vertices
        for a in range(g.n_vertices):
            for b in range(nh):
                for c in range(g.n_vertices):
                    for d in range(nh):
                        assert dm[a * nh + b][c * nh + d] == g.dist(a, c) + h.dist(b, d)


def test_iterated_product_matches_cube():
    k2 = complete(2)
    q3 = cartesian_product(cartesian_product(k2, k2), k2)
    cube = build_graph(CubeFamily(3))
    # ((a,b),c) -> a*4 + b*2 + c matches the cube's bit encoding, so the
    # distance matrices agree under identity labeling
    assert q3.distance_matrix() == cube.distance_matrix()


def test_product_associativity_identity_labeling():
    rng = random.Random(3)
    g = random_connected_graph(rng, 3)
    h = random_connected_graph(rng, 4)
    k = random_connected_graph(rng, 2)
    left = cartesian_product(cartesian_product(g, h), k)
    right = cartesian_product(g, cartesian_product(h, k))
    assert left.distance_matrix() == right.distance_matrix()


def test_product_requires_nonempty():
    with pytest.raises(ValueError):
        cartesian_product(Graph(0, []), complete(2))


def test_edge_list_round_trip():
    g = cycle(5)
    again = read_edge_list(format_edge_list(g))
    assert again.adjacency == g.adjacency


def test_edge_list_comments_and_errors():
    g = read_edge_list("# a square\n4 4\n0 1\n1 2\n2 3\n3 0  # closing edge\n")
    assert g.n_edges() == 4
    with pytest.raises(FormatError):
        read_edge_list("")
    with pytest.raises(FormatError):
        read_edge_list("2 1\n")  # missing edge line
    with pytest.raises(FormatError):
        read_edge_list("2 1\n0 1\n1 0\n")  # extra edge line
    with pytest.raises(FormatError):
        read_edge_list("2 one\n")
    with pytest.raises(FormatError):
        read_edge_list("3 1\n0 0\n")  # self-loop surfaces as format error
