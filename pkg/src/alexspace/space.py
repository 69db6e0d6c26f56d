"""Finite topological spaces stored as minimal open neighbourhood tables.

A finite topology is Alexandrov: every point ``x`` has a smallest open set
``U(x)``, and a set is open exactly when it contains ``U(x)`` for each of
its points.  The table ``U`` is therefore a complete description, and it is
the canonical representation used throughout the package.  Point sets are
bit masks over at most ``MAX_POINTS`` points.

Subspaces are computed by intersecting neighbourhoods: in an Alexandrov
space the minimal neighbourhood of ``x`` inside ``A`` is ``U(x) & A``, since
the subspace opens are the traces ``G & A`` and the smallest trace
containing ``x`` is the trace of the smallest ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadRange,
    CapacityExceeded,
    ReflexivityViolation,
    TooManyOpens,
    TopoSyntaxError,
    TransitivityViolation,
    UniverseMismatch,
)

MAX_POINTS = 63
DEFAULT_OPEN_CAP = 1 << 20


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class PointSet:
    """An immutable subset of ``{0, ..., n-1}`` held as a bit mask."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if not 0 <= self.n <= MAX_POINTS:
            raise CapacityExceeded(f"universe size {self.n} outside [0, {MAX_POINTS}]")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} exceed universe of size {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> PointSet:
        bits = 0
        for m in members:
            if not 0 <= m < n:
                raise ValueError(f"member {m} outside universe of size {n}")
            bits |= 1 << m
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> PointSet:
        return cls(n, full_mask(n))

    def _check(self, other: PointSet) -> None:
        if self.n != other.n:
            raise UniverseMismatch(f"universes differ: {self.n} vs {other.n}")

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.n and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.n, self.bits | other.bits)

    def __and__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.n, self.bits & other.bits)

    def __sub__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.n, self.bits & ~other.bits)

    def complement(self) -> PointSet:
        return PointSet(self.n, full_mask(self.n) & ~self.bits)

    __invert__ = complement

    def __le__(self, other: PointSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: PointSet) -> bool:
        return other <= self

    issubset = __le__

    def __repr__(self) -> str:
        return f"PointSet({self.n}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Space:
    """A finite topology given by its minimal open neighbourhoods.

    ``nbhd[x]`` is the bit mask of ``U(x)``.  Labels are display metadata
    only and do not take part in equality.  Build instances with
    :func:`new_space` or :meth:`from_masks`, both of which validate.
    """

    n: int
    nbhd: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        _validate(self.n, self.nbhd)
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per point")

    @classmethod
    def from_masks(cls, nbhd: Sequence[int], labels: Sequence[str] | None = None) -> Space:
        return cls(len(nbhd), tuple(nbhd), None if labels is None else tuple(labels))

    @classmethod
    def unchecked(cls, nbhd: Sequence[int], labels: Sequence[str] | None = None) -> Space:
        """Build a Space *without* validation.  Only meant for negative controls in tests."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", len(nbhd))
        object.__setattr__(obj, "nbhd", tuple(nbhd))
        object.__setattr__(obj, "labels", None if labels is None else tuple(labels))
        return obj

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def min_nbhd(self) -> tuple[PointSet, ...]:
        return tuple(PointSet(self.n, b) for b in self.nbhd)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            x = int(label)
            if not 0 <= x < self.n:
                raise KeyError(label)
            return x
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def pointset(self, members: Iterable[int] = ()) -> PointSet:
        return PointSet.of(self.n, members)

    def relabel(self, perm: Sequence[int]) -> Space:
        """Move point ``x`` to ``perm[x]``.  The result is homeomorphic to ``self``."""
        new = [0] * self.n
        for x, b in enumerate(self.nbhd):
            m = 0
            for y in iter_bits(b):
                m |= 1 << perm[y]
            new[perm[x]] = m
        return Space.from_masks(new)

    def __repr__(self) -> str:
        rows = ", ".join("{" + ",".join(map(str, iter_bits(b))) + "}" for b in self.nbhd)
        return f"Space(n={self.n}, [{rows}])"


def _validate(n: int, nbhd: Sequence[int]) -> None:
    if not 0 <= n <= MAX_POINTS:
        raise CapacityExceeded(f"{n} points exceeds the {MAX_POINTS}-point capacity")
    if len(nbhd) != n:
        raise ValueError("neighbourhood table length differs from n")
    full = full_mask(n)
    for x, b in enumerate(nbhd):
        if b < 0 or b & ~full:
            raise UniverseMismatch(f"nbhd({x}) has members outside [0, {n})")
        if not b >> x & 1:
            raise ReflexivityViolation(x)
    for x, b in enumerate(nbhd):
        for y in iter_bits(b):
            if nbhd[y] & ~b:
                raise TransitivityViolation(x, y)


def new_space(table: Sequence[PointSet], labels: Sequence[str] | None = None) -> Space:
    """Validate a table of minimal neighbourhoods and wrap it as a Space."""
    n = len(table)
    for ps in table:
        if ps.n != n:
            raise UniverseMismatch(f"neighbourhood over universe {ps.n}, table has {n} rows")
    return Space.from_masks([ps.bits for ps in table], labels)


def generate_topology(n: int, family: Iterable[PointSet]) -> Space:
    """Space generated by ``family`` as a subbasis on ``n`` points.

    The smallest open set around ``x`` is the intersection of all members
    containing ``x`` (the whole space if there are none).
    """
    if not 0 <= n <= MAX_POINTS:
        raise CapacityExceeded(f"{n} points exceeds the {MAX_POINTS}-point capacity")
    masks = []
    for g in family:
        if g.n != n:
            raise UniverseMismatch(f"family member over universe {g.n}, expected {n}")
        masks.append(g.bits)
    full = full_mask(n)
    nbhd = []
    for x in range(n):
        m = full
        for g in masks:
            if g >> x & 1:
                m &= g
        nbhd.append(m)
    return Space.from_masks(nbhd)


@dataclass(frozen=True)
class OpenFamily:
    """Every open set of a space, listed explicitly.  Used as a test oracle."""

    n: int
    opens: tuple[PointSet, ...]

    def __len__(self) -> int:
        return len(self.opens)

    def masks(self) -> frozenset[int]:
        return frozenset(o.bits for o in self.opens)

    def is_topology(self) -> bool:
        ms = self.masks()
        if 0 not in ms or full_mask(self.n) not in ms:
            return False
        return all(a | b in ms and a & b in ms for a in ms for b in ms)

    def to_space(self) -> Space:
        """Recover minimal neighbourhoods as intersections of the opens containing each point."""
        full = full_mask(self.n)
        nbhd = []
        for x in range(self.n):
            m = full
            for o in self.opens:
                if o.bits >> x & 1:
                    m &= o.bits
            nbhd.append(m)
        return Space.from_masks(nbhd)


def open_sets(S: Space, cap: int = DEFAULT_OPEN_CAP) -> OpenFamily:
    """List all open sets, i.e. all unions of minimal neighbourhoods."""
    found = {0}
    for b in sorted(set(S.nbhd)):
        found |= {g | b for g in found}
        if len(found) > cap:
            raise TooManyOpens(cap)
    return OpenFamily(S.n, tuple(PointSet(S.n, g) for g in sorted(found)))


def is_open_mask(S: Space, bits: int) -> bool:
    return all(S.nbhd[x] & ~bits == 0 for x in iter_bits(bits))


def subspace(S: Space, A: PointSet) -> Space:
    """The subspace on ``A``; new point ``i`` is the ``i``-th smallest member of ``A``.

    Labels are carried over from ``S`` (original indices when ``S`` is unlabelled).
    """
    if A.n != S.n:
        raise UniverseMismatch(f"subset over universe {A.n}, space has {S.n} points")
    members = list(A)
    pos = {x: i for i, x in enumerate(members)}
    nbhd = []
    for x in members:
        m = 0
        for y in iter_bits(S.nbhd[x] & A.bits):
            m |= 1 << pos[y]
        nbhd.append(m)
    return Space.from_masks(nbhd, [S.label(x) for x in members])


def embed(A: PointSet, sub_bits: int) -> int:
    """Map a mask over ``subspace(S, A)`` back to the ambient universe."""
    members = list(A)
    out = 0
    for i in iter_bits(sub_bits):
        out |= 1 << members[i]
    return out


def restrict(A: PointSet, bits: int) -> int:
    """Map an ambient mask contained in ``A`` to a mask over ``subspace(S, A)``."""
    out = 0
    for i, x in enumerate(A):
        if bits >> x & 1:
            out |= 1 << i
    return out


def product(S: Space, T: Space) -> Space:
    """Finite product; the pair ``(x, y)`` becomes point ``x * T.n + y``."""
    n = S.n * T.n
    if n > MAX_POINTS:
        raise CapacityExceeded(f"product has {n} points, capacity is {MAX_POINTS}")
    nbhd = []
    for x in range(S.n):
        for y in range(T.n):
            m = 0
            for u in iter_bits(S.nbhd[x]):
                m |= T.nbhd[y] << (u * T.n)
            nbhd.append(m)
    labels = None
    if S.labels is not None or T.labels is not None:
        labels = [f"({S.label(x)};{T.label(y)})" for x in range(S.n) for y in range(T.n)]
    return Space.from_masks(nbhd, labels)


def khalimsky_generators(a: int, b: int) -> list[PointSet]:
    """The triples ``{2m-1, 2m, 2m+1}`` clipped to ``[a, b]``, reindexed from 0."""
    n = b - a + 1
    gens = []
    for even in range(a - (a % 2) , b + 2, 2):
        bits = 0
        for v in (even - 1, even, even + 1):
            if a <= v <= b:
                bits |= 1 << (v - a)
        if bits:
            gens.append(PointSet(n, bits))
    return gens


def khalimsky_window(a: int, b: int) -> Space:
    """The digital line restricted to the integers ``a..b``.

    Point ``i`` stands for the integer ``a + i``.  Odd integers are open
    points; an even integer ``2m`` has neighbourhood ``{2m-1, 2m, 2m+1}``
    clipped to the window.  A clipped even endpoint is faithful to the
    subspace topology, so predicates of a window need not agree with the
    same predicates on the whole line.
    """
    if a > b:
        raise BadRange(f"empty window [{a}, {b}]")
    if b - a > MAX_POINTS - 1:
        raise BadRange(f"window [{a}, {b}] has more than {MAX_POINTS} points")
    nbhd = []
    for v in range(a, b + 1):
        i = v - a
        if v % 2:
            nbhd.append(1 << i)
        else:
            m = 1 << i
            if v - 1 >= a:
                m |= 1 << (i - 1)
            if v + 1 <= b:
                m |= 1 << (i + 1)
            nbhd.append(m)
    return Space.from_masks(nbhd, [str(v) for v in range(a, b + 1)])


def serialize_space(S: Space) -> str:
    lines = [f"points {S.n}"]
    for x, b in enumerate(S.nbhd):
        members = " ".join(map(str, iter_bits(b)))
        lines.append(f"nbhd {x}: {members}".rstrip())
    if S.labels is not None:
        for x, lab in enumerate(S.labels):
            lines.append(f"label {x}: {lab}")
    return "\n".join(lines) + "\n"


def _parse_index(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise TopoSyntaxError(lineno, f"expected an integer, got {tok!r}") from None


def parse_space(text: str) -> Space:
    """Parse the ``.topo`` format; validation errors propagate from :class:`Space`."""
    n = None
    rows: dict[int, int] = {}
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.lstrip().startswith("label"):
            line = raw.strip()
        else:
            line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if n is None:
            if keyword != "points":
                raise TopoSyntaxError(lineno, "first line must be 'points <n>'")
            n = _parse_index(rest.strip(), lineno)
            if not 0 <= n <= MAX_POINTS:
                raise TopoSyntaxError(lineno, f"point count {n} outside [0, {MAX_POINTS}]")
            continue
        head, colon, body = rest.partition(":")
        if keyword not in ("nbhd", "label") or not colon:
            raise TopoSyntaxError(lineno, f"unrecognised line {raw!r}")
        i = _parse_index(head.strip(), lineno)
        if not 0 <= i < n:
            raise TopoSyntaxError(lineno, f"point {i} outside [0, {n})")
        if keyword == "label":
            if i in labels:
                raise TopoSyntaxError(lineno, f"duplicate label for point {i}")
            labels[i] = body.strip()
            continue
        if i in rows:
            raise TopoSyntaxError(lineno, f"duplicate nbhd for point {i}")
        members = [_parse_index(t, lineno) for t in body.split()]
        if members != sorted(set(members)):
            raise TopoSyntaxError(lineno, "neighbourhood members must be strictly ascending")
        m = 0
        for j in members:
            if not 0 <= j < n:
                raise TopoSyntaxError(lineno, f"member {j} outside [0, {n})")
            m |= 1 << j
        rows[i] = m
    if n is None:
        raise TopoSyntaxError(1, "missing 'points <n>' header")
    if len(rows) != n:
        missing = min(set(range(n)) - set(rows))
        raise TopoSyntaxError(lineno if text else 1, f"missing nbhd line for point {missing}")
    lab = None
    if labels:
        if len(labels) != n:
            raise TopoSyntaxError(lineno, "labels must be given for every point or none")
        lab = [labels[i] for i in range(n)]
    return Space.from_masks([rows[i] for i in range(n)], lab)
