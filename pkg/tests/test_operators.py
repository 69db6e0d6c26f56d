import pytest
from hypothesis import given, settings

from alexspace import (
    PointSet,
    apply_operator,
    closure,
    consolidation,
    derived_set,
    interior,
    isolated_points,
    khalimsky_window,
    open_screen,
    open_sets,
    subspace,
)
from alexspace.operators import closure_mask, derived_mask, interior_mask, isolated_mask
from alexspace.predicates import SetPredicateKind, set_predicate_mask

from conftest import space_and_subset, table
from oracles import closure_oracle, interior_oracle


def ps(n, *m):
    return PointSet.of(n, m)


def labels(S, A):
    return {S.label(x) for x in A}


K02 = khalimsky_window(0, 2)


class TestExamples:
    def test_closure(self, indiscrete2):
        assert closure(K02, ps(3)) == ps(3)
        assert closure(K02, ps(3, 1)) == ps(3, 0, 1, 2)
        assert closure(indiscrete2, ps(2, 0)) == ps(2, 0, 1)

    def test_interior(self, indiscrete2):
        assert interior(K02, PointSet.full(3)) == PointSet.full(3)
        assert interior(K02, ps(3, 0, 1)) == ps(3, 0, 1)
        assert interior(indiscrete2, ps(2, 0)) == ps(2)

    def test_consolidation(self, trap3):
        assert consolidation(K02, ps(3, 1)) == ps(3, 0, 1, 2)
        assert consolidation(K02, ps(3)) == ps(3)
        assert closure(trap3, ps(3, 0)) == ps(3, 0, 1)
        assert consolidation(trap3, ps(3, 0)) == ps(3)

    def test_derived(self, indiscrete2):
        assert derived_set(indiscrete2, ps(2)) == ps(2)
        assert derived_set(indiscrete2, ps(2, 0)) == ps(2, 1)
        D = table([0], [1], [2])
        for a in range(8):
            assert derived_set(D, PointSet(3, a)) == ps(3)

    def test_isolated(self, trap3):
        assert isolated_points(K02, PointSet.full(3)) == ps(3, 1)
        assert isolated_points(K02, ps(3)) == ps(3)
        assert isolated_points(trap3, ps(3, 0, 1)) == ps(3)

    def test_open_screen(self, indiscrete2):
        K = khalimsky_window(-2, 2)
        assert labels(K, open_screen(K)) == {"-1", "1"}
        assert open_screen(indiscrete2) == ps(2)
        assert open_screen(table([0], [1], [2])) == PointSet.full(3)

    def test_empty_space(self):
        E = table()
        for op in (closure, interior, consolidation, derived_set, isolated_points):
            assert op(E, PointSet(0)) == PointSet(0)
        assert open_screen(E) == PointSet(0)

    def test_apply_operator(self):
        r = apply_operator(K02, "consolidation", ps(3, 1))
        assert r.operator_name == "consolidation" and r.output == ps(3, 0, 1, 2)
        with pytest.raises(KeyError):
            apply_operator(K02, "boundary", ps(3))


class TestAgainstOpenFamily:
    def test_closure_and_interior(self, spaces_upto4):
        for S in spaces_upto4:
            opens = open_sets(S).masks()
            for a in range(1 << S.n):
                assert closure_mask(S, a) == closure_oracle(opens, S.n, a)
                assert interior_mask(S, a) == interior_oracle(opens, a)

    def test_kuratowski_laws(self, spaces_upto4):
        for S in spaces_upto4:
            full = S.full
            for a in range(1 << S.n):
                c = closure_mask(S, a)
                assert a & ~c == 0
                assert closure_mask(S, c) == c
                assert interior_mask(S, a) == full & ~closure_mask(S, full & ~a)
                for b in range(1 << S.n):
                    assert closure_mask(S, a | b) == c | closure_mask(S, b)
                    if a & ~b == 0:
                        assert c & ~closure_mask(S, b) == 0

    def test_closed_iff_contains_derived(self, spaces_upto4):
        for S in spaces_upto4:
            opens = open_sets(S).masks()
            for a in range(1 << S.n):
                is_closed = (S.full & ~a) in opens
                assert is_closed == (derived_mask(S, a) & ~a == 0)

    def test_screen_empty_iff_no_singleton_nbhd(self, spaces_upto4):
        for S in spaces_upto4:
            assert (not open_screen(S)) == all(u != 1 << x for x, u in enumerate(S.nbhd))


@settings(max_examples=200, deadline=None)
@given(space_and_subset(6))
def test_isolated_points_via_subspace(arg):
    S, a = arg
    A = PointSet(S.n, a)
    sub = subspace(S, A)
    members = list(A)
    # x is isolated in A iff it is not a limit point of A inside the subspace
    inside = derived_mask(sub, sub.full)
    expected = 0
    for i, x in enumerate(members):
        if not inside >> i & 1:
            expected |= 1 << x
    assert isolated_mask(S, a) == expected


@settings(max_examples=200, deadline=None)
@given(space_and_subset(6))
def test_consolidation_is_regular_open(arg):
    S, a = arg
    c = interior_mask(S, closure_mask(S, a))
    assert set_predicate_mask(S, c, SetPredicateKind.REGULAR_OPEN)
