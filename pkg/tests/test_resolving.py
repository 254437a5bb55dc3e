import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drskit.errors import NotConnectedError
from drskit.families import (
    CubeFamily,
    FoldedFamily,
    HammingFamily,
    build_graph,
    folded_ddrs_odd,
    hamming_ddrs_constant,
)
from drskit.graph import Graph
from drskit.resolving import (
    compose_drs,
    ddrs_witness,
    distance_vector,
    doubly_resolving_witness,
    is_ddrs,
    is_doubly_resolving,
    is_resolving,
    resolving_witness,
)
from drskit.solver import brute_force_min, solve_beta

from conftest import complete, connected_graphs_upto, cycle, random_connected_graph


def test_distance_vector_examples():
    assert distance_vector(cycle(4), 2, (0, 1)) == (2, 1)
    assert distance_vector(complete(2), 1, (0,)) == (1,)


def test_distance_vector_cube_matches_bfs():
    fam = CubeFamily(3)
    g = build_graph(fam)
    # BFS oracle for the closed form: u=101b=5, landmarks 000b and 011b
    assert distance_vector(g, 5, (0, 3)) == (2, 2)
    assert distance_vector(fam, 5, (0, 3)) == (2, 2)


def test_is_resolving_cycle():
    assert is_resolving(cycle(4), (0, 1))
    assert not is_resolving(cycle(4), (0, 2))
    witness = resolving_witness(cycle(4), (0, 2))
    assert witness is not None
    u, v = witness
    assert distance_vector(cycle(4), u, (0, 2)) == distance_vector(cycle(4), v, (0, 2))


def test_full_vertex_set_resolves():
    rng = random.Random(2)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 7))
        assert is_resolving(g, tuple(range(g.n_vertices)))


def test_is_doubly_resolving_examples():
    assert is_doubly_resolving(complete(2), (0, 1))
    assert not is_doubly_resolving(cycle(4), (0, 1))
    # Q_2 is the 4-cycle 00-01-11-10; {00, 01, 11} doubly resolves it
    assert is_doubly_resolving(CubeFamily(2), (0, 1, 3))


def test_doubly_resolving_witness_shares_constant_shift():
    g = cycle(4)
    witness = doubly_resolving_witness(g, (0, 1))
    assert witness is not None
    u, v = witness
    du = distance_vector(g, u, (0, 1))
    dv = distance_vector(g, v, (0, 1))
    assert du[0] - dv[0] == du[1] - dv[1]


def test_doubly_resolving_needs_two_landmarks():
    with pytest.raises(ValueError):
        is_doubly_resolving(complete(2), (0,))


def test_is_ddrs_examples():
    # Q_2 on anchor 00 with the opposite corner: differences -2,0,0,2
    assert is_ddrs(CubeFamily(2), 0, (3,))
    fam = FoldedFamily(5)
    s = folded_ddrs_odd(5)
    assert len(s) == 3
    assert is_ddrs(fam, 0, s)


def test_ddrs_full_set():
    rng = random.Random(4)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(2, 7))
        anchor = rng.randrange(g.n_vertices)
        rest = tuple(v for v in range(g.n_vertices) if v != anchor)
        assert is_ddrs(g, anchor, rest)


def test_ddrs_errors():
    with pytest.raises(ValueError):
        is_ddrs(complete(2), 0, ())
    with pytest.raises(ValueError):
        is_ddrs(complete(2), 5, (1,))


def test_disconnected_rejected():
    g = Graph(3, [[1], [0], []])
    for call in (
        lambda: is_resolving(g, (0,)),
        lambda: is_doubly_resolving(g, (0, 1)),
        lambda: is_ddrs(g, 0, (1,)),
        lambda: distance_vector(g, 0, (1,)),
    ):
        with pytest.raises(NotConnectedError):
            call()


def test_compose_drs_examples():
    out = compose_drs(CubeFamily(2), (0, 1), 0, (3,))
    assert out == (0, 1, 3)
    assert is_doubly_resolving(CubeFamily(2), out)
    assert compose_drs(complete(2), (0,), 0, (1,)) == (0, 1)


def test_compose_drs_hamming_certificate():
    # solver basis + constant-word anchored set certifies psi <= beta + phi
    fam = HammingFamily(3, 3)
    basis = solve_beta(fam, vertex_transitive=True).witness
    ddrs = hamming_ddrs_constant(3, 3)
    out = compose_drs(fam, basis, 0, ddrs)
    assert is_doubly_resolving(fam, out)


def test_compose_drs_precondition_messages():
    g = cycle(4)
    with pytest.raises(ValueError, match="anchor"):
        compose_drs(g, (0, 1), 2, (3,))
    with pytest.raises(ValueError, match="not resolving"):
        compose_drs(g, (0, 2), 0, (1, 2, 3))
    assert not is_ddrs(g, 0, (1,))  # vertices 0 and 3 share the difference -1
    with pytest.raises(ValueError, match="not doubly distance resolving"):
        compose_drs(g, (0, 1), 0, (1,))


def test_compose_drs_exhaustive_small():
    # minimum basis + minimum anchored set always compose to a doubly
    # resolving set, over every labeled connected graph on <= 5 vertices
    for g in connected_graphs_upto(5):
        basis = brute_force_min(g, "beta").witness
        anchor = basis[0]
        ddrs = brute_force_min(g, "phi", anchor=anchor).witness
        out = compose_drs(g, basis, anchor, ddrs)
        assert is_doubly_resolving(g, out)


def test_compose_drs_random_six_vertices():
    rng = random.Random(13)
    for _ in range(40):
        g = random_connected_graph(rng, 6)
        basis = brute_force_min(g, "beta").witness
        anchor = rng.choice(basis)
        ddrs = brute_force_min(g, "phi", anchor=anchor).witness
        out = compose_drs(g, basis, anchor, ddrs)
        assert is_doubly_resolving(g, out)


def test_doubly_implies_resolving_and_ddrs_on_members():
    rng = random.Random(7)
    hits = 0
    while hits < 25:
        g = random_connected_graph(rng, rng.randint(3, 8))
        k = rng.randint(2, g.n_vertices)
        s = tuple(sorted(rng.sample(range(g.n_vertices), k)))
        if not is_doubly_resolving(g, s):
            continue
        hits += 1
        assert is_resolving(g, s)
        for anchor in s:
            rest = tuple(x for x in s if x != anchor)
            if rest:
                assert is_ddrs(g, anchor, rest)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_doubly_resolving_order_invariant(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    g = random_connected_graph(rng, rng.randint(3, 7))
    k = rng.randint(2, g.n_vertices)
    s = rng.sample(range(g.n_vertices), k)
    perm = data.draw(st.permutations(s))
    assert is_doubly_resolving(g, tuple(s)) == is_doubly_resolving(g, tuple(perm))
