"""Poset construction, closure, meets, width, and DOT output."""

from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcmlattice import (
    DivisorPoset,
    EmptyInputError,
    MeetOutsideSetError,
    NonPositiveElementError,
    SubPoset,
    build_poset,
    gcd_closure,
    has_antichain_3,
    is_gcd_closed,
    meet,
    meet_closure,
    to_dot,
    width,
)


def exhaustive_width(sp: SubPoset) -> int:
    """Maximum antichain size by brute force.  Only for small subposets."""
    ms = sp.members
    assert len(ms) <= 12
    best = 0
    for mask in range(1 << len(ms)):
        chosen = [ms[k] for k in range(len(ms)) if mask >> k & 1]
        if all(not (sp.leq(a, b) or sp.leq(b, a))
               for a, b in combinations(chosen, 2)):
            best = max(best, len(chosen))
    return best


class TestConstruction:
    def test_empty_rejected(self):
        with pytest.raises(EmptyInputError):
            build_poset([])

    def test_nonpositive_rejected(self):
        with pytest.raises(NonPositiveElementError):
            build_poset([1, 0, 3])
        with pytest.raises(NonPositiveElementError):
            build_poset([-4])

    def test_non_integer_rejected(self):
        with pytest.raises(NonPositiveElementError):
            build_poset([1, 2.5])  # type: ignore[list-item]
        with pytest.raises(NonPositiveElementError):
            build_poset([True, 2])  # type: ignore[list-item]

    def test_dedupe_and_sort(self):
        p = build_poset([6, 2, 1, 6, 3, 2])
        assert p.elements == (1, 2, 3, 6)
        assert p.n == 4

    def test_index_and_contains(self):
        p = build_poset([1, 2, 6])
        assert p.index(6) == 2
        assert 2 in p and 5 not in p
        with pytest.raises(ValueError):
            p.index(5)

    def test_equality_and_hash(self):
        assert build_poset([2, 1]) == build_poset([1, 2, 2])
        assert hash(build_poset([2, 1])) == hash(build_poset([1, 2]))
        assert build_poset([1, 2]) != build_poset([1, 3])


class TestOrder:
    def test_leq_is_divisibility(self):
        p = build_poset([1, 2, 3, 6])
        i6 = p.index(6)
        assert p.leq(p.index(2), i6) and p.leq(p.index(3), i6)
        assert not p.leq(p.index(2), p.index(3))
        assert p.leq(i6, i6)

    def test_covers_diamond(self):
        p = build_poset([1, 2, 3, 6])
        assert [p.elements[j] for j in p.covered(p.index(6))] == [2, 3]
        assert [p.elements[j] for j in p.covered(p.index(2))] == [1]
        assert p.covered(p.index(1)) == ()

    def test_covers_skip_non_immediate(self):
        p = build_poset([1, 2, 4, 8])
        assert [p.elements[j] for j in p.covered(p.index(8))] == [4]

    def test_covers_of_upward(self):
        p = build_poset([1, 2, 3, 6])
        assert [p.elements[j] for j in p.covers_of(p.index(1))] == [2, 3]

    def test_covers_form_antichain(self, corpus):
        for _, p in corpus:
            for i in range(p.n):
                cs = p.covered(i)
                for a, b in combinations(cs, 2):
                    assert not p.leq(a, b) and not p.leq(b, a)


class TestClosure:
    def test_is_gcd_closed(self):
        assert is_gcd_closed(build_poset([1, 2, 3, 6]))
        assert not is_gcd_closed(build_poset([2, 3]))
        assert not is_gcd_closed(build_poset([1, 2, 15, 42]))
        assert is_gcd_closed(build_poset([7]))

    def test_closure_examples(self):
        assert gcd_closure([2, 3]) == (1, 2, 3)
        assert gcd_closure([1, 2, 15, 42]) == (1, 2, 3, 15, 42)
        assert gcd_closure([4, 6, 10]) == (2, 4, 6, 10)

    def test_closure_idempotent(self):
        xs = [12, 18, 30, 45]
        once = gcd_closure(xs)
        assert gcd_closure(once) == once
        assert is_gcd_closed(build_poset(once))

    def test_closure_adds_only_necessary_values(self):
        # Every added value must arise as a gcd of two closure members, so the
        # closure is contained in any gcd-closed superset.
        xs = [12, 18, 30, 45]
        closed = gcd_closure(xs)
        for v in set(closed) - set(xs):
            assert any(math.gcd(a, b) == v
                       for a, b in combinations(closed, 2))

    def test_closure_validates(self):
        with pytest.raises(EmptyInputError):
            gcd_closure([])
        with pytest.raises(NonPositiveElementError):
            gcd_closure([0, 3])

    @given(st.lists(st.integers(min_value=1, max_value=3000),
                    min_size=1, max_size=6))
    @settings(max_examples=150, deadline=None)
    def test_closure_properties_random(self, xs):
        closed = gcd_closure(xs)
        assert set(xs) <= set(closed)
        assert is_gcd_closed(build_poset(closed))
        assert gcd_closure(closed) == closed


class TestMeet:
    def test_meet_inside(self):
        p = build_poset([1, 2, 3, 6])
        assert p.elements[meet(p, p.index(2), p.index(3))] == 1
        assert p.elements[meet(p, p.index(6), p.index(2))] == 2

    def test_meet_outside_raises(self):
        p = build_poset([1, 2, 15, 42])
        with pytest.raises(MeetOutsideSetError):
            meet(p, p.index(15), p.index(42))  # gcd is 3, absent

    def test_meet_closure(self):
        p = build_poset([1, 2, 3, 5, 6, 10, 15, 30])
        sub = meet_closure(p, [p.index(6), p.index(10), p.index(15)])
        assert tuple(p.elements[j] for j in sub) == (1, 2, 3, 5, 6, 10, 15)

    def test_meet_closure_of_chain_is_itself(self):
        p = build_poset([1, 2, 4, 8])
        idxs = [p.index(2), p.index(8)]
        assert meet_closure(p, idxs) == tuple(sorted(idxs))


class TestWidth:
    def test_width_examples(self):
        p = build_poset([1, 2, 3, 5, 6, 10, 15, 30])
        assert width(SubPoset(p, range(p.n))) == 3  # {2,3,5} or {6,10,15}
        assert width(SubPoset(p, [p.index(v) for v in (1, 2, 6, 30)])) == 1
        assert width(SubPoset(p, [])) == 0

    def test_width_matches_exhaustive_on_corpus(self, corpus):
        for _, p in corpus:
            if p.n > 12:
                continue
            sp = SubPoset(p, range(p.n))
            assert width(sp) == exhaustive_width(sp)

    @given(st.lists(st.integers(min_value=1, max_value=500),
                    min_size=1, max_size=9))
    @settings(max_examples=150, deadline=None)
    def test_width_matches_exhaustive_random(self, xs):
        p = build_poset(xs)
        sp = SubPoset(p, range(p.n))
        assert width(sp) == exhaustive_width(sp)

    @given(st.lists(st.integers(min_value=1, max_value=500),
                    min_size=1, max_size=9))
    @settings(max_examples=150, deadline=None)
    def test_antichain3_iff_width_over_two(self, xs):
        p = build_poset(xs)
        sp = SubPoset(p, range(p.n))
        assert has_antichain_3(sp) == (width(sp) >= 3)


class TestSubPoset:
    def test_restricted_covers(self):
        p = build_poset([1, 2, 4, 8])
        sp = SubPoset(p, [p.index(1), p.index(8)])
        # With 2 and 4 removed, 8 covers 1 directly inside the subposet.
        assert sp.covered(p.index(8)) == (p.index(1),)

    def test_members_sorted_and_sized(self):
        p = build_poset([1, 2, 3, 6])
        sp = SubPoset(p, [3, 1])
        assert sp.members == (1, 3)
        assert sp.size == 2
        assert sp.values() == (2, 6)


class TestDot:
    def test_dot_chain(self):
        expected = (
            'digraph hasse {\n'
            '  rankdir=BT;\n'
            '  "1";\n'
            '  "2";\n'
            '  "6";\n'
            '  "1" -> "2";\n'
            '  "2" -> "6";\n'
            '}\n'
        )
        assert to_dot(build_poset([1, 2, 6])) == expected

    def test_dot_diamond_edges(self):
        out = to_dot(build_poset([1, 2, 3, 6]))
        assert '"2" -> "6";' in out and '"3" -> "6";' in out
        assert '"1" -> "6";' not in out  # only cover edges
