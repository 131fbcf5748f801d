"""Finite divisor posets: sets of positive integers ordered by divisibility.

Everything in this package is exact integer or rational arithmetic; no
floating point enters any analysis path.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from functools import cached_property


class EmptyInputError(ValueError):
    """An operation received an empty collection of integers."""


class NonPositiveElementError(ValueError):
    """An input element was zero, negative, or not an integer."""


class MeetOutsideSetError(ValueError):
    """A required gcd (meet) of two members is not itself a member."""


def _bits(mask: int):
    """Yield the set bit positions of a non-negative int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DivisorPoset:
    """An immutable poset of distinct positive integers under divisibility.

    Elements are deduplicated and stored in ascending order, so ``x_j | x_i``
    implies ``j <= i``.  All methods speak in element indices.  Instances do
    not mutate after construction and are safe to share across threads.
    """

    def __init__(self, xs: Iterable[int]):
        xs = list(xs)
        if not xs:
            raise EmptyInputError("need at least one positive integer")
        for x in xs:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise NonPositiveElementError(
                    f"elements must be positive integers, got {x!r}")
        self.elements: tuple[int, ...] = tuple(sorted(set(xs)))
        self._index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)

        # _down[i] is the bitmask of indices j with x_j | x_i (including i);
        # _up[j] is the strict dual (indices i != j with x_j | x_i).
        down = []
        for i, x in enumerate(self.elements):
            m = 0
            for j in range(i + 1):
                if x % self.elements[j] == 0:
                    m |= 1 << j
            down.append(m)
        up = [0] * n
        for i in range(n):
            for j in _bits(down[i] & ~(1 << i)):
                up[j] |= 1 << i
        self._down = tuple(down)
        self._up = tuple(up)

        covered = []
        for i in range(n):
            strict = down[i] & ~(1 << i)
            covered.append(tuple(j for j in _bits(strict) if not (strict & up[j])))
        self._covered = tuple(covered)

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, value: int) -> int:
        """Index of a member value; ValueError if absent."""
        try:
            return self._index[value]
        except KeyError:
            raise ValueError(f"{value} is not an element of the set") from None

    def __contains__(self, value: int) -> bool:
        return value in self._index

    def leq(self, j: int, i: int) -> bool:
        """True when x_j divides x_i."""
        return bool((self._down[i] >> j) & 1)

    def covered(self, i: int) -> tuple[int, ...]:
        """Indices of the elements covered by x_i within the set."""
        return self._covered[i]

    def covers_of(self, j: int) -> tuple[int, ...]:
        """Indices of the elements that cover x_j within the set."""
        return tuple(i for i in _bits(self._up[j]) if j in self._covered[i])

    @cached_property
    def gcd_closed(self) -> bool:
        els = self.elements
        present = self._index
        return all(math.gcd(els[a], els[b]) in present
                   for a in range(len(els)) for b in range(a))

    def __repr__(self) -> str:
        return f"DivisorPoset({list(self.elements)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, DivisorPoset) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)


class SubPoset:
    """An induced sub-poset: a subset of a DivisorPoset with the cover
    relation recomputed inside the subset.  Members are parent indices."""

    def __init__(self, parent: DivisorPoset, members: Iterable[int]):
        self.parent = parent
        self.members: tuple[int, ...] = tuple(sorted(set(members)))
        for m in self.members:
            if not 0 <= m < parent.n:
                raise ValueError(f"index {m} outside parent poset")
        mask = 0
        for m in self.members:
            mask |= 1 << m
        self._mask = mask
        covered = {}
        for m in self.members:
            strict = parent._down[m] & mask & ~(1 << m)
            covered[m] = tuple(j for j in _bits(strict)
                               if not (strict & parent._up[j]))
        self._covered = covered

    @property
    def size(self) -> int:
        return len(self.members)

    def values(self) -> tuple[int, ...]:
        return tuple(self.parent.elements[m] for m in self.members)

    def leq(self, j: int, i: int) -> bool:
        return self.parent.leq(j, i)

    def covered(self, i: int) -> tuple[int, ...]:
        """Indices covered by member i inside this sub-poset."""
        return self._covered[i]

    def __repr__(self) -> str:
        return f"SubPoset(values={list(self.values())})"


def build_poset(xs: Iterable[int]) -> DivisorPoset:
    """Validate, deduplicate, sort ascending, and build the divisibility poset."""
    return DivisorPoset(xs)


def is_gcd_closed(p: DivisorPoset) -> bool:
    """True when every pairwise gcd of members is itself a member."""
    return p.gcd_closed


def gcd_closure(xs: Iterable[int]) -> tuple[int, ...]:
    """Smallest superset of xs closed under pairwise gcd, sorted ascending."""
    xs = list(xs)
    if not xs:
        raise EmptyInputError("need at least one positive integer")
    for x in xs:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise NonPositiveElementError(
                f"elements must be positive integers, got {x!r}")
    have = set(xs)
    queue = list(have)
    while queue:
        x = queue.pop()
        for y in list(have):
            g = math.gcd(x, y)
            if g not in have:
                have.add(g)
                queue.append(g)
    return tuple(sorted(have))


def meet(p: DivisorPoset, i: int, j: int) -> int:
    """Index of gcd(x_i, x_j); MeetOutsideSetError if that gcd is not a member."""
    g = math.gcd(p.elements[i], p.elements[j])
    k = p._index.get(g)
    if k is None:
        raise MeetOutsideSetError(
            f"gcd({p.elements[i]}, {p.elements[j]}) = {g} is not in the set")
    return k


def meet_closure(p: DivisorPoset, subset: Iterable[int]) -> tuple[int, ...]:
    """Smallest superset of the given member indices closed under pairwise meet.

    Requires every needed meet to exist inside p (raises MeetOutsideSetError
    otherwise, which signals that p was not gcd closed where it mattered).
    """
    have = set(subset)
    for m in have:
        if not 0 <= m < p.n:
            raise ValueError(f"index {m} outside poset")
    queue = list(have)
    while queue:
        i = queue.pop()
        for j in list(have):
            k = meet(p, i, j)
            if k not in have:
                have.add(k)
                queue.append(k)
    return tuple(sorted(have))


def width(sp: SubPoset) -> int:
    """Size of the largest antichain of the sub-poset.

    Computed as size minus a maximum bipartite matching on the strict order
    (minimum chain cover equals maximum antichain on finite posets).
    """
    mem = sp.members
    k = len(mem)
    if k == 0:
        return 0
    parent = sp.parent
    succ = [[v for v in range(k) if v != u and parent.leq(mem[u], mem[v])]
            for u in range(k)]
    match_right = [-1] * k

    def augment(u: int, seen: list[bool]) -> bool:
        for v in succ[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] < 0 or augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    matched = sum(1 for u in range(k) if augment(u, [False] * k))
    return k - matched


def has_antichain_3(sp: SubPoset) -> bool:
    """True when the sub-poset contains three pairwise incomparable elements."""
    mem = sp.members
    parent = sp.parent
    k = len(mem)

    def comparable(a: int, b: int) -> bool:
        return parent.leq(mem[a], mem[b]) or parent.leq(mem[b], mem[a])

    for a in range(k):
        for b in range(a + 1, k):
            if comparable(a, b):
                continue
            for c in range(b + 1, k):
                if not comparable(a, c) and not comparable(b, c):
                    return True
    return False


def to_dot(p: DivisorPoset) -> str:
    """Hasse diagram of the poset as a DOT digraph with upward cover edges."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for x in p.elements:
        lines.append(f'  "{x}";')
    for i in range(p.n):
        for j in p.covered(i):
            lines.append(f'  "{p.elements[j]}" -> "{p.elements[i]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
