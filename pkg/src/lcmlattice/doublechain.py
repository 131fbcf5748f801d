"""Chain-pair structure of an element's cover set.

For a member x of a gcd-closed set S, take its covered set C (the maximal
strict divisors of x inside S) and close C under meets.  The elements added
by that closure (the "core") determine whether x admits a decomposition of
the core into at most two disjoint chains, which in turn drives the
closed-form Mobius column and the sign of the Psi value at x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .lattice import (
    DivisorPoset,
    SubPoset,
    has_antichain_3,
    meet_closure,
)


class NotDoubleChainGeneratorError(ValueError):
    """The element's core is not coverable by two chains (width exceeds 2)."""


class BadFoldCountError(ValueError):
    """The fold count r is outside the valid range 0..n-1."""


@dataclass(frozen=True)
class ChainDecomposition:
    """Result of splitting an element's core into two chains.

    All element references are indices into ``poset``.  ``chain_a`` holds the
    bottom of the core (the meet of the whole covered set) when the core is
    non-empty; ``top_b`` falls back to ``top_a`` when chain B is empty.
    ``attach`` maps each core element to the covered-set elements that cover
    it inside the meet closure; ``eta`` holds the counts.  At most one
    covered-set element may attach to both chains (``doubly_attached``).
    """

    poset: DivisorPoset
    owner: int
    core: SubPoset
    chain_a: tuple[int, ...]
    chain_b: tuple[int, ...]
    attach: dict[int, tuple[int, ...]] = field(repr=False)
    eta: dict[int, int] = field(repr=False)
    top_a: int | None
    top_b: int | None
    doubly_attached: int | None


def core_set(p: DivisorPoset, i: int) -> SubPoset:
    """Meet closure of the covered set of x_i, minus the covered set itself."""
    c = p.covered(i)
    closed = meet_closure(p, c)
    return SubPoset(p, set(closed) - set(c))


def generates_double_chain(p: DivisorPoset, i: int) -> bool:
    """True when the core of x_i has no antichain of three (width at most 2)."""
    return not has_antichain_3(core_set(p, i))


def _is_chain(p: DivisorPoset, seq: tuple[int, ...]) -> bool:
    return all(p.leq(a, b) for a, b in zip(seq, seq[1:]))


def _split_into_chains(p: DivisorPoset, core: SubPoset) -> tuple[list[int], list[int]]:
    """Partition a width-<=2 core into two chains, bottom-up.

    The core's minimum starts chain A.  At each step the remaining minimal
    elements (never more than two, or the width bound would fail) are placed:
    an element that fits only one chain goes there first, ascending ties go
    to A.  Feasibility is guaranteed by the width bound; any violation below
    is a genuine bug, hence the bare asserts.
    """
    members = list(core.members)
    if not members:
        return [], []
    chain_a: list[int] = [members[0]]
    chain_b: list[int] = []
    unassigned = members[1:]

    def fits(chain: list[int], u: int) -> bool:
        return not chain or p.leq(chain[-1], u)

    while unassigned:
        mins = [u for u in unassigned
                if not any(v != u and p.leq(v, u) for v in unassigned)]
        assert 1 <= len(mins) <= 2, "width bound violated during chain split"
        if len(mins) == 1:
            u = mins[0]
            if fits(chain_a, u):
                chain_a.append(u)
            else:
                assert fits(chain_b, u), "unplaceable element in width-2 core"
                chain_b.append(u)
            unassigned.remove(u)
        else:
            u, w = mins  # ascending, pairwise incomparable
            u_a, u_b = fits(chain_a, u), fits(chain_b, u)
            w_a, w_b = fits(chain_a, w), fits(chain_b, w)
            if u_a and u_b and w_a and w_b:
                chain_a.append(u)
                chain_b.append(w)
            elif u_a and not u_b:
                assert w_b, "unplaceable element in width-2 core"
                chain_a.append(u)
                chain_b.append(w)
            elif u_b and not u_a:
                assert w_a, "unplaceable element in width-2 core"
                chain_b.append(u)
                chain_a.append(w)
            elif w_a and not w_b:
                assert u_b, "unplaceable element in width-2 core"
                chain_a.append(w)
                chain_b.append(u)
            else:
                assert w_b and u_a, "unplaceable element in width-2 core"
                chain_b.append(w)
                chain_a.append(u)
            unassigned.remove(u)
            unassigned.remove(w)
    return chain_a, chain_b


def decompose_chains(p: DivisorPoset, i: int) -> ChainDecomposition:
    """Split the core of x_i into two chains and record attachments.

    Raises NotDoubleChainGeneratorError when the core has width above two.
    """
    c = p.covered(i)
    closed = meet_closure(p, c)
    core = SubPoset(p, set(closed) - set(c))
    if has_antichain_3(core):
        raise NotDoubleChainGeneratorError(
            f"element {p.elements[i]}: core of its covered set has width > 2")

    closure_sp = SubPoset(p, closed)
    attach: dict[int, list[int]] = {m: [] for m in core.members}
    doubly: int | None = None
    for z in c:
        below = closure_sp.covered(z)
        for k in below:
            attach[k].append(z)
        if len(below) >= 2:
            assert len(below) == 2, "cover set element attached three ways"
            assert doubly is None, "two doubly-attached elements found"
            doubly = z

    chain_a, chain_b = _split_into_chains(p, core)
    assert _is_chain(p, tuple(chain_a)) and _is_chain(p, tuple(chain_b))
    assert sorted(chain_a + chain_b) == list(core.members)

    top_a = chain_a[-1] if chain_a else None
    top_b = chain_b[-1] if chain_b else top_a
    eta = {m: len(zs) for m, zs in attach.items()}
    if len(c) >= 2:
        # With two or more covers, the closure's minimum sits strictly below
        # them all, so every cover attaches to at least one core element.
        assert sum(eta.values()) == len(c) + (1 if doubly is not None else 0)
    else:
        assert not core.members and not eta

    if doubly is not None:
        q, r = closure_sp.covered(doubly)
        assert top_a is not None and top_b is not None
        assert not (p.leq(top_a, top_b) or p.leq(top_b, top_a)), \
            "chain tops must be incomparable when an element attaches to both"
        tops_meet = math.gcd(p.elements[top_a], p.elements[top_b])
        qr_meet = math.gcd(p.elements[q], p.elements[r])
        assert tops_meet == qr_meet, \
            "meet of chain tops must equal meet of the doubly-attached covers"

    return ChainDecomposition(
        poset=p,
        owner=i,
        core=core,
        chain_a=tuple(chain_a),
        chain_b=tuple(chain_b),
        attach={m: tuple(zs) for m, zs in attach.items()},
        eta=eta,
        top_a=top_a,
        top_b=top_b,
        doubly_attached=doubly,
    )


def is_a_set(p: DivisorPoset) -> bool:
    """True when the pairwise gcds of distinct members form a single chain."""
    els = p.elements
    meets = sorted({math.gcd(els[a], els[b])
                    for a in range(len(els)) for b in range(a)})
    return all(b % a == 0 for a, b in zip(meets, meets[1:]))


def is_meet_tree(p: DivisorPoset) -> bool:
    """True when the Hasse diagram of the gcd closure of the set is a tree."""
    from .lattice import gcd_closure  # local to avoid polluting module API

    closed = DivisorPoset(gcd_closure(p.elements))
    edges = sum(len(closed.covered(i)) for i in range(closed.n))
    return edges == closed.n - 1


def is_r_fold_gcd_closed(p: DivisorPoset, r: int) -> bool:
    """True when the r smallest elements form a divisor chain whose maximum
    divides the minimum of the rest, and the rest is gcd closed.

    r = 0 degenerates to plain gcd closedness.  Raises BadFoldCountError for
    r outside 0..n-1.
    """
    n = p.n
    if not isinstance(r, int) or isinstance(r, bool) or not 0 <= r <= n - 1:
        raise BadFoldCountError(f"fold count must be an integer in 0..{n - 1}, got {r!r}")
    if r == 0:
        return p.gcd_closed
    els = p.elements
    head, tail = els[:r], els[r:]
    if not all(b % a == 0 for a, b in zip(head, head[1:])):
        return False
    if tail[0] % head[-1] != 0:
        return False
    present = set(tail)
    return all(math.gcd(tail[a], tail[b]) in present
               for a in range(len(tail)) for b in range(a))
