"""Exhaustive enumeration of labelled finite topologies and canonical forms.

A topology on ``n`` labelled points is the same thing as a reflexive,
transitive relation (``y in U(x)``), so the enumerator backtracks over the
rows ``U(0), U(1), ...`` one point at a time.  When row ``k`` is chosen it
is checked against every earlier row in both directions; once all rows are
placed every pair has been checked, which is exactly transitivity.

Rows are tried in ascending bit-mask order, so the stream is sorted
lexicographically by the tuple of rows.  Fixing a prefix of rows selects a
contiguous, independently deterministic slice of that order; this is how
work is split between processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapacityExceeded
from .space import Space, iter_bits

MAX_ENUM_N = 7
MAX_CANON_N = 10
MAX_COUNT_CANON_N = 6


def _row_ok(rows: Sequence[int], k: int, r: int) -> bool:
    for i in range(k):
        ri = rows[i]
        if ri >> k & 1 and r & ~ri:
            return False
        if r >> i & 1 and ri & ~r:
            return False
    return True


def valid_prefix(n: int, prefix: Sequence[int]) -> bool:
    if len(prefix) > n:
        return False
    for k, r in enumerate(prefix):
        if not r >> k & 1 or r >> n or not _row_ok(prefix, k, r):
            return False
    return True


def first_rows(n: int) -> list[int]:
    """Every legal first row; the work units handed to parallel workers."""
    return [r for r in range(1 << n) if r & 1] if n else []


class EnumerationStream:
    """Iterator over every topology on ``n`` labelled points.

    ``prefix`` pins the first rows of the neighbourhood table.  ``after``
    resumes strictly after a previously emitted table (pass the ``cursor``
    of an interrupted stream).  ``emitted`` counts spaces yielded so far.
    """

    def __init__(self, n: int, prefix: Sequence[int] = (), after: Sequence[int] | None = None):
        if not 0 <= n <= MAX_ENUM_N:
            raise CapacityExceeded(f"enumeration supports 0 <= n <= {MAX_ENUM_N}, got {n}")
        self.n = n
        self.prefix = tuple(prefix)
        self.after = None if after is None else tuple(after)
        self.emitted = 0
        self.cursor: tuple[int, ...] | None = None

    def __iter__(self) -> Iterator[Space]:
        n = self.n
        if not valid_prefix(n, self.prefix):
            return
        rows = list(self.prefix) + [0] * (n - len(self.prefix))
        after = self.after
        candidates = [[r for r in range(1 << n) if r >> k & 1] for k in range(n)]

        # tight: rows so far equal after[:k], so row k may not go below after[k]
        def rec(k: int, tight: bool) -> Iterator[tuple[int, ...]]:
            if k == n:
                if not tight:
                    yield tuple(rows)
                return
            for r in candidates[k]:
                if tight and r < after[k]:
                    continue
                if _row_ok(rows, k, r):
                    rows[k] = r
                    yield from rec(k + 1, tight and r == after[k])

        start = len(self.prefix)
        tight = after is not None
        if tight:
            head = tuple(after[:start])
            if head > self.prefix:
                return
            tight = head == self.prefix
        for table in rec(start, tight):
            self.emitted += 1
            self.cursor = table
            yield Space.from_masks(table)


def enumerate_topologies(n: int, prefix: Sequence[int] = ()) -> EnumerationStream:
    return EnumerationStream(n, prefix)


def random_space(n: int, rng: random.Random, density: float | None = None) -> Space:
    """A random topology: random relation, then reflexive-transitive closure.

    No distributional claims; meant for smoke tests and sampling.
    """
    if density is None:
        density = rng.choice((0.1, 0.2, 0.3, 0.5))
    rows = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < density:
                rows[x] |= 1 << y
    changed = True
    while changed:
        changed = False
        for x in range(n):
            r = rows[x]
            for y in iter_bits(r):
                r |= rows[y]
            if r != rows[x]:
                rows[x] = r
                changed = True
    return Space.from_masks(rows)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabelling-invariant encoding: the neighbourhood table under the
    lexicographically least admissible point ordering."""

    n: int
    table: tuple[int, ...]


def _colours(S: Space) -> list[int]:
    n = S.n
    up = [[y for y in iter_bits(S.nbhd[x])] for x in range(n)]
    down = [[y for y in range(n) if S.nbhd[y] >> x & 1] for x in range(n)]
    col = [(len(up[x]), len(down[x])) for x in range(n)]
    while True:
        sig = [
            (col[x], tuple(sorted(col[y] for y in up[x])), tuple(sorted(col[y] for y in down[x])))
            for x in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(col)):
            return new
        col = new


def canonical_form(S: Space) -> CanonicalForm:
    """Canonical encoding up to homeomorphism.

    Points are first split by refined invariants (neighbourhood size,
    closure size and those of their neighbours).  The ordering then
    minimises, position by position, the relation bits between the new
    point and all earlier ones; branches are cut as soon as their prefix
    exceeds the best complete ordering found.
    """
    n = S.n
    if n > MAX_CANON_N:
        raise CapacityExceeded(f"canonical form supports n <= {MAX_CANON_N}, got {n}")
    col = _colours(S)
    slots = sorted(col)
    nb = S.nbhd
    best: list[int] | None = None
    best_order: list[int] = []
    codes: list[int] = []
    order: list[int] = []
    used = [False] * n

    def code_for(c: int) -> int:
        v = 0
        for q in order:
            v = (v << 2) | (nb[c] >> q & 1) << 1 | (nb[q] >> c & 1)
        return v

    def rec(i: int) -> None:
        nonlocal best, best_order
        if i == n:
            if best is None or codes < best:
                best = list(codes)
                best_order = list(order)
            return
        options = sorted(
            (code_for(c), c) for c in range(n) if not used[c] and col[c] == slots[i]
        )
        for v, c in options:
            codes.append(v)
            if best is not None and codes > best[: i + 1]:
                codes.pop()
                break
            used[c] = True
            order.append(c)
            rec(i + 1)
            order.pop()
            used[c] = False
            codes.pop()

    rec(0)
    pos = {c: i for i, c in enumerate(best_order)}
    table = [0] * n
    for c in range(n):
        m = 0
        for y in iter_bits(nb[c]):
            m |= 1 << pos[y]
        table[pos[c]] = m
    return CanonicalForm(n, tuple(table))


def is_homeomorphic(S: Space, T: Space) -> bool:
    if S.n != T.n:
        return False
    return canonical_form(S) == canonical_form(T)


def count_topologies(n: int, canonical: bool = True) -> tuple[int, int | None]:
    """``(labelled, up-to-homeomorphism)``; the second entry is None when not requested."""
    if canonical and n > MAX_COUNT_CANON_N:
        raise CapacityExceeded(f"canonical counting supports n <= {MAX_COUNT_CANON_N}")
    labelled = 0
    forms = set()
    for S in enumerate_topologies(n):
        labelled += 1
        if canonical:
            forms.add(canonical_form(S))
    return labelled, (len(forms) if canonical else None)
