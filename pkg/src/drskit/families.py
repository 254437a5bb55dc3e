"""Hamming graphs H(n, q), hypercubes Q_n and folded hypercubes F_n.

Vertices are encoded as integers so that distances have closed forms:

* ``HammingFamily(n, q)``: a word ``(u_1, ..., u_n)`` over ``{0..q-1}`` is the
  base-q integer with digit ``i-1`` equal to ``u_i`` (little-endian, so word
  coordinate ``i`` maps to digit/bit ``i-1``).  Distance counts differing
  digits.
* ``CubeFamily(n)``: the q=2 case; distance is ``popcount(u ^ v)``.
* ``FoldedFamily(n)``: vertices are antipodal classes ``{u, ~u}`` of Q_n,
  represented canonically by the member whose top bit (bit n-1) is 0, i.e. an
  integer below ``2**(n-1)``.  Distance is ``min(d, n - d)`` with ``d`` the
  cube distance of representatives.

Families expose the same read surface as :class:`~drskit.graph.Graph`
(``n_vertices``, ``dist``, ``is_connected``) so every predicate and solver
runs directly on the closed-form oracle; ``build_graph`` materializes the
explicit graph for BFS cross-checks.  All three families are
vertex-transitive, which the solvers exploit when told so.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import FormatError, SizeCapError
from .graph import Graph
from .resolving import resolving_witness

ORACLE_CAP = 1 << 20
GRAPH_CAP = 1 << 12


@dataclass(frozen=True)
class HammingFamily:
    """H(n, q): words of length n over a q-letter alphabet, edges between
    words differing in exactly one coordinate."""

    n: int
    q: int

    vertex_transitive = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if self.q < 2:
            raise ValueError("alphabet size must be >= 2")

    @property
    def n_vertices(self) -> int:
        return self.q**self.n

    @property
    def descriptor(self) -> str:
        return f"h{self.n},{self.q}"

    def is_connected(self) -> bool:
        return True

    def dist(self, u: int, v: int) -> int:
        q = self.q
        d = 0
        while u or v:
            if u % q != v % q:
                d += 1
            u //= q
            v //= q
        return d

    def digits(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            out.append(code % self.q)
            code //= self.q
        return tuple(out)

    def code(self, digits: Sequence[int]) -> int:
        if len(digits) != self.n:
            raise ValueError("wrong number of digits")
        out = 0
        for d in reversed(digits):
            if not 0 <= d < self.q:
                raise ValueError(f"digit {d} out of range")
            out = out * self.q + d
        return out

    def constant(self, c: int) -> int:
        """The constant word (c, ..., c)."""
        if not 0 <= c < self.q:
            raise ValueError(f"letter {c} out of range")
        return c * (self.q**self.n - 1) // (self.q - 1)


@dataclass(frozen=True)
class CubeFamily:
    """Q_n = H(n, 2): n-bit integers, distance popcount(u ^ v)."""

    n: int

    vertex_transitive = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")

    @property
    def n_vertices(self) -> int:
        return 1 << self.n

    @property
    def descriptor(self) -> str:
        return f"q{self.n}"

    def is_connected(self) -> bool:
        return True

    def dist(self, u: int, v: int) -> int:
        return (u ^ v).bit_count()

    def complement(self, u: int) -> int:
        return u ^ ((1 << self.n) - 1)


@dataclass(frozen=True)
class FoldedFamily:
    """F_n: Q_n with antipodal vertex pairs merged (n >= 2)."""

    n: int

    vertex_transitive = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("folded cube needs dimension >= 2")

    @property
    def n_vertices(self) -> int:
        return 1 << (self.n - 1)

    @property
    def descriptor(self) -> str:
        return f"f{self.n}"

    def is_connected(self) -> bool:
        return True

    def canon(self, u: int) -> int:
        """Canonical representative of the class {u, ~u}: top bit cleared."""
        if u >> (self.n - 1) & 1:
            return u ^ ((1 << self.n) - 1)
        return u

    def dist(self, a: int, b: int) -> int:
        d = (a ^ b).bit_count()
        return min(d, self.n - d)


Family = HammingFamily | CubeFamily | FoldedFamily

_FAMILY_RE = re.compile(r"^(q(\d+)|f(\d+)|h(\d+),(\d+))$")


def parse_family(desc: str, max_vertices: int = ORACLE_CAP) -> Family:
    """Parse a family descriptor: ``q<n>``, ``f<n>`` or ``h<n>,<q>``."""
    m = _FAMILY_RE.match(desc.strip())
    if not m:
        raise FormatError(f"bad family descriptor {desc!r} (want q<n>, f<n>, h<n>,<q>)")
    try:
        if m.group(2) is not None:
            fam: Family = CubeFamily(int(m.group(2)))
        elif m.group(3) is not None:
            fam = FoldedFamily(int(m.group(3)))
        else:
            fam = HammingFamily(int(m.group(4)), int(m.group(5)))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if fam.n_vertices > max_vertices:
        raise SizeCapError(
            f"{desc}: {fam.n_vertices} vertices exceeds the cap {max_vertices}"
        )
    return fam


def build_graph(family: Family, max_vertices: int = GRAPH_CAP) -> Graph:
    """Materialize the explicit graph (vertex id = integer code)."""
    nv = family.n_vertices
    if nv > max_vertices:
        raise SizeCapError(f"{nv} vertices exceeds the cap {max_vertices}")
    adj: list[list[int]] = []
    if isinstance(family, HammingFamily):
        n, q = family.n, family.q
        for u in range(nv):
            nbrs = []
            base = 1
            for _ in range(n):
                du = (u // base) % q
                for c in range(q):
                    if c != du:
                        nbrs.append(u + (c - du) * base)
                base *= q
            adj.append(nbrs)
    elif isinstance(family, CubeFamily):
        for u in range(nv):
            adj.append([u ^ (1 << i) for i in range(family.n)])
    else:
        for u in range(nv):
            adj.append(sorted({family.canon(u ^ (1 << i)) for i in range(family.n)}))
    return Graph(nv, adj)


def hamming_ddrs_constant(n: int, q: int) -> tuple[int, ...]:
    """The q-1 constant words (1...1), ..., (q-1...q-1).

    A doubly distance resolving set on the zero word: with
    ``a_c = d(u, 0) - d(u, c...c)`` one has ``a_c = f(u, c) - f(u, 0)`` where
    ``f(u, c)`` counts letters equal to c, and summing over c recovers
    ``d(u, 0) = (sum_c a_c + (q-1) n) / q``.
    """
    fam = HammingFamily(n, q)
    return tuple(fam.constant(c) for c in range(1, q))


def hamming_ddrs_levels(n: int, q: int) -> tuple[int, ...]:
    """The n constant words (1...1), ..., (n...n); requires n <= q-1."""
    if n > q - 1:
        raise ValueError(f"needs n <= q-1, got n={n}, q={q}")
    fam = HammingFamily(n, q)
    return tuple(fam.constant(c) for c in range(1, n + 1))


def folded_ddrs_odd(n: int) -> tuple[int, ...]:
    """For odd n = 2k+1 >= 3: the k classes of the consecutive-pair words
    (bits 2i-2, 2i-1 set) plus the class of the last singleton bit, giving a
    doubly distance resolving set of F_n on [0] of at most (n+1)/2 classes.
    For n = 3 the pair word and the singleton word are antipodal, so the set
    collapses to a single class."""
    if n < 3 or n % 2 == 0:
        raise ValueError("needs odd n >= 3")
    fam = FoldedFamily(n)
    k = (n - 1) // 2
    out = [3 << (2 * i) for i in range(k)]
    last = fam.canon(1 << (n - 1))
    if last not in out:
        out.append(last)
    return tuple(out)


def folded_ddrs_even(n: int) -> tuple[int, ...]:
    """For even n >= 4: the n-1 prefix words (first i bits set, 1 <= i < n),
    a doubly distance resolving set of F_n on [0] of size n-1."""
    if n < 4 or n % 2 == 1:
        raise ValueError("needs even n >= 4")
    return tuple((1 << i) - 1 for i in range(1, n))


def _require_resolving(fam: Family, landmarks: Sequence[int], what: str) -> None:
    bad = resolving_witness(fam, landmarks)
    if bad is not None:
        raise ValueError(f"{what}: input set is not resolving (vertices {bad})")


def fold_resolving_map(n: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    """Send a resolving set of F_n (n >= 3) to a resolving set of Q_n by
    choosing the top-bit-0 representative of each class.  Since canonical
    representatives already live below 2**(n-1), the integer codes carry over
    unchanged; only their interpretation moves to Q_n."""
    if n < 3:
        raise ValueError("needs n >= 3")
    _require_resolving(FoldedFamily(n), landmarks, "fold map")
    return tuple(landmarks)


def unfold_resolving_map(n: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    """Send a resolving set of Q_n (odd n >= 3) to a resolving set of F_n by
    projecting each vertex to its antipodal class."""
    if n < 3 or n % 2 == 0:
        raise ValueError("needs odd n >= 3")
    _require_resolving(CubeFamily(n), landmarks, "unfold map")
    fam = FoldedFamily(n)
    out: list[int] = []
    for x in landmarks:
        r = fam.canon(x)
        if r not in out:
            out.append(r)
    return tuple(out)


def double_resolving_map(n: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    """Send a resolving set of Q_n to a resolving set of F_{n+1} of at most
    twice the size: each x maps to the classes of x0 and x1 (x with a 0 or 1
    appended as new top coordinate)."""
    _require_resolving(CubeFamily(n), landmarks, "doubling map")
    low_mask = (1 << n) - 1
    out: list[int] = []
    for x in landmarks:
        for r in (x, x ^ low_mask):  # classes [x0] and [x1] in F_{n+1}
            if r not in out:
                out.append(r)
    return tuple(out)
