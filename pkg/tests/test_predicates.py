import pytest
from hypothesis import given, settings

from alexspace import (
    OracleCapExceeded,
    PointSet,
    SetPredicateKind as K,
    SpacePredicateKind as SK,
    Space,
    beta_open_direct,
    fenestration,
    is_alpha_scattered,
    is_scattered,
    khalimsky_window,
    open_sets,
    set_predicate,
    space_predicate,
)
from alexspace.predicates import (
    beta_open_direct_mask,
    is_alpha_scattered_mask,
    is_scattered_mask,
    set_predicate_mask,
)

from conftest import space_and_subset, table
from oracles import regular_closed_sets, closure_oracle, scattered_direct


def ps(n, *m):
    return PointSet.of(n, m)


class TestSetPredicateExamples:
    def test_indiscrete_singleton_preopen(self, indiscrete2):
        assert set_predicate(indiscrete2, ps(2, 0), K.PREOPEN)

    def test_khalimsky_even_point_nowhere_dense(self):
        assert set_predicate(khalimsky_window(0, 2), ps(3, 0), K.NOWHERE_DENSE)

    def test_empty_set_nowhere_dense(self, trap3):
        for S in (trap3, table(), khalimsky_window(-3, 3)):
            assert set_predicate(S, PointSet(S.n), "nowhere_dense")

    def test_beta_open_open_point(self, trap3):
        assert set_predicate(trap3, ps(3, 2), K.BETA_OPEN)

    def test_string_kinds(self, trap3):
        assert set_predicate(trap3, ps(3, 2), "open")
        with pytest.raises(ValueError):
            set_predicate(trap3, ps(3, 2), "clopen")

    def test_locally_closed(self, sierpinski, indiscrete2):
        # open and closed points are locally closed; a point of an indiscrete pair is not
        assert set_predicate(sierpinski, ps(2, 0), K.LOCALLY_CLOSED)
        assert set_predicate(sierpinski, ps(2, 1), K.LOCALLY_CLOSED)
        assert not set_predicate(indiscrete2, ps(2, 0), K.LOCALLY_CLOSED)

    def test_locally_closed_is_open_meet_closed(self, spaces_upto4):
        for S in spaces_upto4:
            opens = open_sets(S).masks()
            closeds = {S.full & ~o for o in opens}
            meets = {o & c for o in opens for c in closeds}
            for a in range(1 << S.n):
                assert set_predicate_mask(S, a, K.LOCALLY_CLOSED) == (a in meets)


class TestBetaOpenOracle:
    def test_examples(self, indiscrete2):
        D = table([0], [1])
        assert beta_open_direct(indiscrete2, ps(2))
        assert beta_open_direct(indiscrete2, ps(2, 0))
        assert beta_open_direct(D, ps(2, 0))

    def test_cap(self):
        with pytest.raises(OracleCapExceeded):
            beta_open_direct(khalimsky_window(0, 16), PointSet(17))

    def test_oracle_is_a_real_full_scan(self, spaces_upto4):
        # regular closed sets listed from the open family; R must contain A and sit in cl A
        for S in spaces_upto4:
            opens = open_sets(S).masks()
            rc = regular_closed_sets(opens, S.n)
            for a in range(1 << S.n):
                ca = closure_oracle(opens, S.n, a)
                brute = any(a & ~r == 0 and r & ~ca == 0 for r in rc)
                assert beta_open_direct_mask(S, a) == brute
                assert set_predicate_mask(S, a, K.BETA_OPEN) == brute


class TestScattered:
    def test_examples(self, trap3):
        assert is_scattered(trap3, ps(3)) == (True, 0)
        assert is_scattered(khalimsky_window(0, 2), PointSet.full(3)) == (True, 2)
        assert is_scattered(trap3, PointSet.full(3)) == (False, None)

    def test_rank_at_most_n(self, spaces_upto4):
        for S in spaces_upto4:
            for a in range(1 << S.n):
                ok, rank = is_scattered(S, PointSet(S.n, a))
                assert ok == scattered_direct(S.nbhd, a)
                if ok:
                    assert rank <= bin(a).count("1")

    def test_alpha_examples(self, trap3):
        assert is_alpha_scattered(trap3, ps(3))
        K = khalimsky_window(-2, 2)
        fen = fenestration(K, PointSet.full(5))
        assert {K.label(next(iter(f))) for f in fen} == {"-1", "1"}
        assert is_alpha_scattered(trap3, PointSet.full(3))
        assert not is_scattered(trap3, PointSet.full(3))[0]
        assert fenestration(table([0, 1], [0, 1]), PointSet.full(2)) is None

    @settings(max_examples=300, deadline=None)
    @given(space_and_subset(6))
    def test_scattered_implies_alpha_and_hereditary(self, arg):
        S, a = arg
        if is_scattered_mask(S, a):
            assert is_alpha_scattered_mask(S, a)
            b = a
            while b:
                assert is_scattered_mask(S, b)
                b = (b - 1) & a


class TestSpacePredicates:
    def test_empty_space_all_true(self):
        E = table()
        assert all(space_predicate(E, k) for k in SK)

    def test_indiscrete_pair(self, indiscrete2):
        assert not space_predicate(indiscrete2, SK.T0)
        assert space_predicate(indiscrete2, SK.DENSE_IN_ITSELF)
        assert not space_predicate(indiscrete2, SK.SEMI_T_D)

    def test_khalimsky_window(self):
        K = khalimsky_window(-2, 2)
        assert space_predicate(K, SK.T_D)
        assert not space_predicate(K, SK.T1)
        assert space_predicate(K, SK.TRACE_SPACE)
        assert space_predicate(K, "t0")

    def test_hierarchy_over_enumeration(self, spaces_upto4):
        for S in spaces_upto4:
            t1, td, std = (space_predicate(S, k) for k in (SK.T1, SK.T_D, SK.SEMI_T_D))
            assert (not t1 or td) and (not td or std)
            assert t1 == all(u == 1 << x for x, u in enumerate(S.nbhd))
            assert (not t1) or space_predicate(S, SK.T0)

    def test_t_d_readings_agree_on_valid_spaces_only(self, spaces_upto4):
        for S in spaces_upto4:
            space_predicate(S, SK.T_D)
        # a non-transitive table can split the two readings, which is reported loudly
        with pytest.raises(AssertionError):
            space_predicate(Space.unchecked([0b001, 0b011, 0b110]), SK.T_D)


class TestSmallLemmas:
    """Implications between the generalized open-set notions, exhaustively for n <= 4."""

    def test_all(self, spaces_upto4):
        for S in spaces_upto4:
            for a in range(1 << S.n):
                P = lambda k: set_predicate_mask(S, a, k)  # noqa: E731
                if bin(a).count("1") == 1:
                    assert P(K.PREOPEN) or P(K.NOWHERE_DENSE)
                if P(K.NOWHERE_DENSE):
                    assert P(K.SEMI_CLOSED)
                if P(K.PREOPEN) and P(K.SEMI_CLOSED):
                    assert P(K.REGULAR_OPEN)
                if P(K.OPEN) or P(K.DENSE):
                    assert P(K.PREOPEN)
                if P(K.PREOPEN):
                    assert P(K.BETA_OPEN)
                if P(K.REGULAR_OPEN):
                    assert P(K.OPEN) and P(K.SEMI_CLOSED)
                if P(K.SEMI_OPEN):
                    assert P(K.BETA_OPEN)
