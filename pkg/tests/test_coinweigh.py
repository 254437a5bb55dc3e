import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drskit.coinweigh import (
    WeighingStrategy,
    algorithm1_bounds,
    brute_force_M,
    complex_size_for,
    complex_weight,
    drs_to_strategy,
    extend_strategy,
    is_complex,
    is_weighing_strategy,
    lindstrom_complex,
    project_strategy,
    strategy_to_drs,
    translate_landmarks,
)
from drskit.errors import SizeCapError
from drskit.families import CubeFamily
from drskit.resolving import is_doubly_resolving
from drskit.solver import solve_psi

# frozen by the brute-force oracle below (see test_brute_force_M_values)
M_SMALL = {1: 1, 2: 2, 3: 3, 4: 3, 5: 4}


def test_is_weighing_strategy_examples():
    assert is_weighing_strategy(WeighingStrategy(1, (0b1,)))
    # one row weighing both coins cannot tell 01 from 10
    assert not is_weighing_strategy(WeighingStrategy(2, (0b11,)))
    assert is_weighing_strategy(WeighingStrategy(2, (0b10, 0b01)))


def test_weighing_strategy_normalizes():
    s = WeighingStrategy(3, (5, 1, 5))
    assert s.rows == (1, 5)
    with pytest.raises(ValueError):
        WeighingStrategy(2, (4,))


def test_verification_cap():
    with pytest.raises(SizeCapError):
        is_weighing_strategy(WeighingStrategy(25, (1,)))


def test_brute_force_M_values():
    for n, expected in M_SMALL.items():
        value, strat = brute_force_M(n)
        assert value == expected
        assert is_weighing_strategy(strat)
        assert len(strat) == value
    with pytest.raises(SizeCapError):
        brute_force_M(6)


def test_brute_force_M_witness_is_lex_smallest():
    # identity weighings are the first valid pair for n = 2
    assert brute_force_M(2)[1].rows == (1, 2)
    assert brute_force_M(3)[1].rows == (1, 2, 4)


def test_no_single_row_separates_two_coins():
    for row in range(1, 4):
        assert not is_weighing_strategy(WeighingStrategy(2, (row,)))


def test_strategy_to_drs():
    landmarks = strategy_to_drs(WeighingStrategy(2, (0b10, 0b01)))
    assert landmarks == (0, 1, 2)
    assert is_doubly_resolving(CubeFamily(2), landmarks)
    assert strategy_to_drs(WeighingStrategy(1, (1,))) == (0, 1)
    with pytest.raises(ValueError):
        strategy_to_drs(WeighingStrategy(2, (0b11,)))


def test_strategy_to_drs_optimal_size():
    value, strat = brute_force_M(4)
    landmarks = strategy_to_drs(strat)
    assert is_doubly_resolving(CubeFamily(4), landmarks)
    assert len(landmarks) == value + 1
    assert solve_psi(CubeFamily(4), vertex_transitive=True).value == value + 1


def test_drs_to_strategy():
    s = drs_to_strategy(2, (0, 1, 2))
    assert s.rows == (1, 2)
    assert is_weighing_strategy(s)
    assert drs_to_strategy(1, (0, 1)).rows == (1,)
    with pytest.raises(ValueError, match="zero word"):
        drs_to_strategy(2, (1, 2, 3))
    with pytest.raises(ValueError, match="not doubly resolving"):
        drs_to_strategy(2, (0, 3))


def test_round_trip():
    strat = WeighingStrategy(3, (1, 2, 4))
    assert drs_to_strategy(3, strategy_to_drs(strat)).rows == strat.rows


def test_translate_landmarks():
    # XOR translation moves any member onto the zero word and preserves the
    # doubly resolving property
    psi = solve_psi(CubeFamily(3), vertex_transitive=True)
    shifted = translate_landmarks(psi.witness, psi.witness[-1])
    assert 0 in shifted
    assert is_doubly_resolving(CubeFamily(3), shifted)
    assert drs_to_strategy(3, shifted)


def test_project_strategy():
    assert project_strategy(WeighingStrategy(2, (0b10, 0b01))).rows == (0, 1)
    rng = random.Random(9)
    for n in (3, 4, 5):
        _, strat = brute_force_M(n)
        proj = project_strategy(strat)
        assert proj.n == n - 1
        assert is_weighing_strategy(proj)
        for _ in range(5):
            rows = tuple(
                sorted({rng.randrange(1, 1 << n) for _ in range(n + 1)})
            )
            s = WeighingStrategy(n, rows)
            if is_weighing_strategy(s):
                assert is_weighing_strategy(project_strategy(s))


def test_extend_strategy():
    ext = extend_strategy(WeighingStrategy(1, (1,)))
    assert ext.rows == (1, 2)
    assert is_weighing_strategy(ext)
    for n in (2, 3, 4):
        _, strat = brute_force_M(n)
        ext = extend_strategy(strat)
        assert ext.n == n + 1
        assert len(ext) == len(strat) + 1
        assert is_weighing_strategy(ext)


def test_chained_extensions_certify_cube_bounds():
    # extending the optimal 4-coin strategy certifies psi(Q_n) <= M(4)+1+(n-4)
    value, strat = brute_force_M(4)
    for n in range(5, 9):
        strat = extend_strategy(strat)
        assert is_weighing_strategy(strat)
        landmarks = strategy_to_drs(strat)
        assert is_doubly_resolving(CubeFamily(n), landmarks)
        assert len(landmarks) == value + 1 + (n - 4)


def test_monotonicity_brute_force():
    for n in range(1, 5):
        assert M_SMALL[n] <= M_SMALL[n + 1] <= M_SMALL[n] + 1


def test_lindstrom_complex():
    assert lindstrom_complex(4) == (
        frozenset(),
        frozenset({0}),
        frozenset({1}),
        frozenset({0, 1}),
    )
    assert lindstrom_complex(11)[10] == frozenset({1, 3})  # 10 = 2^1 + 2^3
    assert lindstrom_complex(1) == (frozenset(),)


@settings(max_examples=40, deadline=None)
@given(m=st.integers(1, 64))
def test_lindstrom_complex_is_subset_closed(m):
    assert is_complex(lindstrom_complex(m))


def test_lindstrom_bound_consistency():
    # |F_m| - 1 = m-1 weighings suffice for sum-of-sizes coins, checked
    # against brute force wherever the weight stays within the brute cap
    for m in range(2, 7):
        fam = lindstrom_complex(m)
        weight = complex_weight(fam)
        if weight <= 5:
            assert brute_force_M(weight)[0] <= m - 1


def test_algorithm1_prefix():
    table = algorithm1_bounds(8)
    assert [table[n] for n in range(1, 13)] == [2, 3, 4, 4, 5, 6, 6, 7, 7, 8, 8, 8]
    assert max(table) == 12


def test_algorithm1_deeper_values():
    table = algorithm1_bounds(complex_size_for(93))
    assert (table[13], table[14], table[15]) == (9, 10, 10)
    assert (table[91], table[92], table[93]) == (38, 38, 38)


def test_algorithm1_rejects_small_m():
    with pytest.raises(ValueError):
        algorithm1_bounds(1)


def test_bounds_table_invariants():
    table = algorithm1_bounds(64)
    ns = sorted(table)
    assert ns == list(range(1, len(ns) + 1))
    for n in ns[:-1]:
        assert table[n] <= table[n + 1] <= table[n] + 1


def test_bounds_sound_for_small_n():
    table = algorithm1_bounds(8)
    for n in range(1, 5):
        exact = solve_psi(CubeFamily(n), vertex_transitive=True).value
        assert exact <= table[n]


def test_complex_size_for():
    assert complex_size_for(93) == 38
    assert complex_size_for(1) == 2
    # prefix sums of popcounts reach exactly the advertised range
    for n_max in (5, 12, 22, 28):
        m = complex_size_for(n_max)
        assert sum(i.bit_count() for i in range(1, m)) >= n_max
        assert sum(i.bit_count() for i in range(1, m - 1)) < n_max
