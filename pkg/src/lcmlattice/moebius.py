"""Mobius function of a divisor poset, computed three independent ways.

The recursive definition sums over intervals, the zeta route inverts the
divisibility indicator matrix, and the closed form reads values off an
element's two-chain decomposition.  The three must agree wherever the closed
form is defined; the test suite enforces that on the whole corpus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .doublechain import decompose_chains
from .lattice import DivisorPoset


@dataclass(frozen=True)
class MoebiusTable:
    """Full table of mu(x_j, x_i) values; values[j][i] is 0 unless x_j | x_i."""

    poset: DivisorPoset
    values: tuple[tuple[int, ...], ...]

    def column(self, i: int) -> dict[int, int]:
        """Column of mu(., x_i) as an index-to-value map (zeros included)."""
        return {j: self.values[j][i] for j in range(self.poset.n)}

    def __getitem__(self, ji: tuple[int, int]) -> int:
        j, i = ji
        return self.values[j][i]


def mobius_recursive(p: DivisorPoset) -> MoebiusTable:
    """Interval recursion: mu(x,x) = 1 and each strict divisor takes the
    negated sum of the values strictly above it in the interval."""
    n = p.n
    mu = [[0] * n for _ in range(n)]
    for i in range(n):
        mu[i][i] = 1
        for j in range(i - 1, -1, -1):
            if p.leq(j, i):
                mu[j][i] = -sum(mu[k][i] for k in range(j + 1, i + 1)
                                if p.leq(j, k) and p.leq(k, i))
    return MoebiusTable(p, tuple(tuple(row) for row in mu))


def mobius_via_zeta_inverse(p: DivisorPoset) -> MoebiusTable:
    """Oracle route: exact integer inverse of the zeta (divisibility) matrix.

    The zeta matrix is unitriangular in the ascending element order, so back
    substitution inverts it exactly over the integers.
    """
    n = p.n
    zeta = [[1 if p.leq(j, i) else 0 for i in range(n)] for j in range(n)]
    inv = [[0] * n for _ in range(n)]
    for col in range(n):
        x = [0] * n
        x[col] = 1
        for row in range(n - 1, -1, -1):
            acc = x[row]
            for k in range(row + 1, n):
                acc -= zeta[row][k] * inv[k][col]
            inv[row][col] = acc
    return MoebiusTable(p, tuple(tuple(row) for row in inv))


def mobius_closed_form(p: DivisorPoset, i: int) -> dict[int, int]:
    """Column of mu(., x_i) read directly off the chain decomposition of x_i.

    Value 1 at x_i itself, -1 on the covered set, and on the core an
    attachment count corrected at the chain tops: a maximal top loses one, and
    with no doubly-attached element the meet of two incomparable tops gains
    one.  Everything outside the closure is 0.  Raises
    NotDoubleChainGeneratorError when x_i has no such decomposition.
    """
    dec = decompose_chains(p, i)
    col = {j: 0 for j in range(p.n)}
    col[i] = 1
    for z in p.covered(i):
        col[z] = -1
    core_members = dec.core.members
    if not core_members:
        return col

    ta, tb = dec.top_a, dec.top_b
    assert ta is not None and tb is not None
    tops_incomparable = ta != tb and not (p.leq(ta, tb) or p.leq(tb, ta))
    meet_of_tops = None
    if tops_incomparable:
        meet_of_tops = p.index(math.gcd(p.elements[ta], p.elements[tb]))

    def maximal_in_core(j: int) -> bool:
        return not any(k != j and p.leq(j, k) for k in core_members)

    for j in core_members:
        eta = dec.eta[j]
        if dec.doubly_attached is not None:
            col[j] = eta - 1 if j in (ta, tb) else eta
        elif j in (ta, tb) and maximal_in_core(j):
            col[j] = eta - 1
        elif tops_incomparable and j == meet_of_tops:
            col[j] = eta + 1
        else:
            col[j] = eta
    return col
