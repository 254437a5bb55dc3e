"""Desk-scale reproduction of the published summary tables.

Tables 2-4 (upper bounds P(n) for the hypercube doubly-resolving minimum) come
straight from :func:`drskit.coinweigh.algorithm1_bounds`.  Tables 1 and 5
(exact metric dimension of Q_n / F_n and the folded-cube exact values) run the
exact solver; cells past the requested limit are emitted as ``skipped`` rather
than silently dropped.
"""

from __future__ import annotations

from .coinweigh import algorithm1_bounds, complex_size_for
from .families import CubeFamily, FoldedFamily
from .solver import solve_beta, solve_phi, solve_psi

SKIPPED = "skipped"


def bounds_upto(n_max: int) -> list[tuple[int, int]]:
    """Rows (n, P(n)) for 1 <= n <= n_max using the smallest sufficient
    binary-expansion complex."""
    table = algorithm1_bounds(complex_size_for(n_max))
    return [(n, table[n]) for n in range(1, n_max + 1)]


def bounds_csv(n_max: int) -> str:
    lines = ["n,P"]
    lines.extend(f"{n},{p}" for n, p in bounds_upto(n_max))
    return "\n".join(lines) + "\n"


def table1_csv(limit: int = 6) -> str:
    """Exact metric dimension of Q_n and F_n, n <= 9 (F_1 does not exist)."""
    lines = ["n,beta_q,beta_f"]
    for n in range(1, 10):
        if n <= limit:
            bq = str(solve_beta(CubeFamily(n), vertex_transitive=True).value)
        else:
            bq = SKIPPED
        if n < 2:
            bf = "-"
        elif n <= limit:
            bf = str(solve_beta(FoldedFamily(n), vertex_transitive=True).value)
        else:
            bf = SKIPPED
        lines.append(f"{n},{bq},{bf}")
    return "\n".join(lines) + "\n"


def table5_csv(limit: int = 6) -> str:
    """Exact beta, psi, phi of the folded cube, n = 2..10.  Anchoring phi at
    class [0] is lossless: folded cubes are vertex-transitive."""
    lines = ["n,beta_f,psi_f,phi_f"]
    for n in range(2, 11):
        if n <= limit:
            fam = FoldedFamily(n)
            b = str(solve_beta(fam, vertex_transitive=True).value)
            p = str(solve_psi(fam, vertex_transitive=True).value)
            f = str(solve_phi(fam, 0).value)
        else:
            b = p = f = SKIPPED
        lines.append(f"{n},{b},{p},{f}")
    return "\n".join(lines) + "\n"


def bounds_table_csv(which: int) -> str:
    ranges = {2: (1, 22), 3: (23, 28), 4: (29, 93)}
    lo, hi = ranges[which]
    table = algorithm1_bounds(complex_size_for(hi))
    lines = ["n,P"]
    lines.extend(f"{n},{table[n]}" for n in range(lo, hi + 1))
    return "\n".join(lines) + "\n"


def table_csv(which: int, limit: int = 6) -> str:
    if which == 1:
        return table1_csv(limit)
    if which == 5:
        return table5_csv(limit)
    if which in (2, 3, 4):
        return bounds_table_csv(which)
    raise ValueError("table must be 1..5")
