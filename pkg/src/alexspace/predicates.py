"""Set-level and space-level properties of finite spaces.

Every rule below is part of the public contract.  Writing ``cl``/``int``
for closure and interior:

==============  ===========================================
open            ``int A == A``
closed          ``cl A == A``
dense           ``cl A == X``
semi_open       ``A <= cl int A``
semi_closed     ``int cl A <= A``
preopen         ``A <= int cl A``   (a.k.a. locally dense)
regular_open    ``A == int cl A``
regular_closed  ``A == cl int A``
nowhere_dense   ``int cl A == {}``
beta_open       ``A <= cl int cl A``
locally_closed  ``A`` open in the subspace ``cl A``
==============  ===========================================

On the empty set and the empty space every predicate is decided by the
same rules, which makes the vacuous cases come out true (``{}`` is open,
closed, nowhere dense, ...; the empty space is T0, T1, dense-in-itself,
...).  ``dense`` of ``{}`` holds only in the empty space.
"""

from __future__ import annotations

import enum

from .errors import OracleCapExceeded, UniverseMismatch
from .operators import closure_mask, interior_mask, isolated_mask, derived_mask
from .space import PointSet, Space, iter_bits

ORACLE_CAP = 16


class SetPredicateKind(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    DENSE = "dense"
    SEMI_OPEN = "semi_open"
    SEMI_CLOSED = "semi_closed"
    PREOPEN = "preopen"
    REGULAR_OPEN = "regular_open"
    REGULAR_CLOSED = "regular_closed"
    NOWHERE_DENSE = "nowhere_dense"
    BETA_OPEN = "beta_open"
    LOCALLY_CLOSED = "locally_closed"


class SpacePredicateKind(str, enum.Enum):
    T0 = "t0"
    T1 = "t1"
    T_D = "t_d"
    SEMI_T_D = "semi_t_d"
    DENSE_IN_ITSELF = "dense_in_itself"
    TRACE_SPACE = "trace_space"


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _locally_closed(S: Space, a: int) -> bool:
    c = closure_mask(S, a)
    return all(_sub(S.nbhd[x] & c, a) for x in iter_bits(a))


SET_RULES = {
    SetPredicateKind.OPEN: lambda S, a: interior_mask(S, a) == a,
    SetPredicateKind.CLOSED: lambda S, a: closure_mask(S, a) == a,
    SetPredicateKind.DENSE: lambda S, a: closure_mask(S, a) == S.full,
    SetPredicateKind.SEMI_OPEN: lambda S, a: _sub(a, closure_mask(S, interior_mask(S, a))),
    SetPredicateKind.SEMI_CLOSED: lambda S, a: _sub(interior_mask(S, closure_mask(S, a)), a),
    SetPredicateKind.PREOPEN: lambda S, a: _sub(a, interior_mask(S, closure_mask(S, a))),
    SetPredicateKind.REGULAR_OPEN: lambda S, a: interior_mask(S, closure_mask(S, a)) == a,
    SetPredicateKind.REGULAR_CLOSED: lambda S, a: closure_mask(S, interior_mask(S, a)) == a,
    SetPredicateKind.NOWHERE_DENSE: lambda S, a: interior_mask(S, closure_mask(S, a)) == 0,
    SetPredicateKind.BETA_OPEN: lambda S, a: _sub(
        a, closure_mask(S, interior_mask(S, closure_mask(S, a)))
    ),
    SetPredicateKind.LOCALLY_CLOSED: _locally_closed,
}


def set_predicate_mask(S: Space, bits: int, kind: SetPredicateKind | str) -> bool:
    return SET_RULES[SetPredicateKind(kind)](S, bits)


def set_predicate(S: Space, A: PointSet, kind: SetPredicateKind | str) -> bool:
    if A.n != S.n:
        raise UniverseMismatch(f"subset over universe {A.n}, space has {S.n} points")
    return set_predicate_mask(S, A.bits, kind)


def beta_open_direct_mask(S: Space, bits: int, cap: int = ORACLE_CAP) -> bool:
    if S.n > cap:
        raise OracleCapExceeded(f"beta-open oracle scans 2^{S.n} sets; cap is n <= {cap}")
    ca = closure_mask(S, bits)
    # R ranges over the supersets of A inside cl(A).
    free = ca & ~bits
    sub = free
    while True:
        r = bits | sub
        if closure_mask(S, interior_mask(S, r)) == r:
            return True
        if sub == 0:
            return False
        sub = (sub - 1) & free


def beta_open_direct(S: Space, A: PointSet, cap: int = ORACLE_CAP) -> bool:
    """Search for a regular closed ``R`` with ``A <= R <= cl A`` (``A`` dense in ``R``)."""
    if A.n != S.n:
        raise UniverseMismatch(f"subset over universe {A.n}, space has {S.n} points")
    return beta_open_direct_mask(S, A.bits, cap)


def scattered_rank_mask(S: Space, bits: int) -> int | None:
    """Cantor-Bendixson peeling; the number of rounds to reach ``{}``, or None."""
    rank = 0
    while bits:
        iso = isolated_mask(S, bits)
        if not iso:
            return None
        bits &= ~iso
        rank += 1
    return rank


def is_scattered(S: Space, A: PointSet) -> tuple[bool, int | None]:
    """Decide whether every nonempty subset of ``A`` has an isolated point.

    Returns ``(scattered, rank)`` where ``rank`` counts peeling rounds of
    isolated points until nothing remains (``None`` if a dense-in-itself
    kernel is left behind).  Each round removes at least one point, so at
    most ``n`` rounds happen.
    """
    if A.n != S.n:
        raise UniverseMismatch(f"subset over universe {A.n}, space has {S.n} points")
    rank = scattered_rank_mask(S, A.bits)
    return rank is not None, rank


def is_scattered_mask(S: Space, bits: int) -> bool:
    return scattered_rank_mask(S, bits) is not None


def is_alpha_scattered_mask(S: Space, bits: int) -> bool:
    return _sub(bits, closure_mask(S, isolated_mask(S, bits)))


def is_alpha_scattered(S: Space, A: PointSet) -> bool:
    """True when the isolated points of ``A`` are dense in the subspace ``A``."""
    if A.n != S.n:
        raise UniverseMismatch(f"subset over universe {A.n}, space has {S.n} points")
    return is_alpha_scattered_mask(S, A.bits)


def fenestration(S: Space, A: PointSet) -> list[PointSet] | None:
    """The singleton fenestration ``{{x} : x isolated in A}`` if ``A`` is alpha-scattered."""
    if not is_alpha_scattered(S, A):
        return None
    return [PointSet(S.n, 1 << x) for x in iter_bits(isolated_mask(S, A.bits))]


def _singleton_closed(S: Space, x: int) -> bool:
    return closure_mask(S, 1 << x) == 1 << x


def _t_d(S: Space) -> bool:
    by_local = all(_locally_closed(S, 1 << x) for x in range(S.n))
    by_derived = all(
        closure_mask(S, d) == d for d in (derived_mask(S, 1 << x) for x in range(S.n))
    )
    if by_local != by_derived:
        raise AssertionError(f"T_D characterisations disagree on {S!r}")
    return by_local


SPACE_RULES = {
    SpacePredicateKind.T0: lambda S: len(set(S.nbhd)) == S.n,
    SpacePredicateKind.T1: lambda S: all(_singleton_closed(S, x) for x in range(S.n)),
    SpacePredicateKind.T_D: _t_d,
    SpacePredicateKind.SEMI_T_D: lambda S: all(
        S.nbhd[x] == 1 << x
        or set_predicate_mask(S, 1 << x, SetPredicateKind.SEMI_CLOSED)
        for x in range(S.n)
    ),
    SpacePredicateKind.DENSE_IN_ITSELF: lambda S: isolated_mask(S, S.full) == 0,
    SpacePredicateKind.TRACE_SPACE: lambda S: is_alpha_scattered_mask(S, S.full),
}


def space_predicate(S: Space, kind: SpacePredicateKind | str) -> bool:
    return SPACE_RULES[SpacePredicateKind(kind)](S)
