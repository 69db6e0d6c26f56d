"""Closure, interior and their relatives on subsets of a finite space.

Each operator comes in two flavours: a ``*_mask`` function working on raw
bit masks (used by the enumeration-heavy harness) and a :class:`PointSet`
wrapper.  All of them return the empty set on the empty set and on the
empty space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UniverseMismatch
from .space import PointSet, Space


def closure_mask(S: Space, bits: int) -> int:
    out = 0
    for x, u in enumerate(S.nbhd):
        if u & bits:
            out |= 1 << x
    return out


def interior_mask(S: Space, bits: int) -> int:
    out = 0
    for x, u in enumerate(S.nbhd):
        if u & ~bits == 0:
            out |= 1 << x
    return out & bits


def consolidation_mask(S: Space, bits: int) -> int:
    return interior_mask(S, closure_mask(S, bits))


def derived_mask(S: Space, bits: int) -> int:
    out = 0
    for x, u in enumerate(S.nbhd):
        if u & ~(1 << x) & bits:
            out |= 1 << x
    return out


def isolated_mask(S: Space, bits: int) -> int:
    out = 0
    for x, u in enumerate(S.nbhd):
        if u & bits == 1 << x:
            out |= 1 << x
    return out


def _arg(S: Space, A: PointSet) -> int:
    if A.n != S.n:
        raise UniverseMismatch(f"subset over universe {A.n}, space has {S.n} points")
    return A.bits


def closure(S: Space, A: PointSet) -> PointSet:
    """Points whose minimal neighbourhood meets ``A``."""
    return PointSet(S.n, closure_mask(S, _arg(S, A)))


def interior(S: Space, A: PointSet) -> PointSet:
    """Points of ``A`` whose minimal neighbourhood stays inside ``A``."""
    return PointSet(S.n, interior_mask(S, _arg(S, A)))


def consolidation(S: Space, A: PointSet) -> PointSet:
    """Interior of the closure of ``A``."""
    return PointSet(S.n, consolidation_mask(S, _arg(S, A)))


def derived_set(S: Space, A: PointSet) -> PointSet:
    """Limit points of ``A``: every neighbourhood meets ``A`` away from the point itself."""
    return PointSet(S.n, derived_mask(S, _arg(S, A)))


def isolated_points(S: Space, A: PointSet) -> PointSet:
    """Points isolated in the subspace ``A``, i.e. ``U(x) & A == {x}``."""
    return PointSet(S.n, isolated_mask(S, _arg(S, A)))


def open_screen(S: Space) -> PointSet:
    """All points whose singleton is open."""
    return PointSet(S.n, isolated_mask(S, S.full))


@dataclass(frozen=True)
class OperatorResult:
    operator_name: str
    input: PointSet
    output: PointSet


OPERATORS = {
    "closure": closure,
    "interior": interior,
    "consolidation": consolidation,
    "derived": derived_set,
    "isolated": isolated_points,
    "screen": lambda S, A: open_screen(S),
}


def apply_operator(S: Space, name: str, A: PointSet | None = None) -> OperatorResult:
    if name not in OPERATORS:
        raise KeyError(name)
    if A is None:
        A = PointSet(S.n)
    return OperatorResult(name, A, OPERATORS[name](S, A))
