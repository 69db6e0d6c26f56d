"""Exhaustive verification of the dense-in-itself / semi-T_D results on finite spaces.

Every check produces a :class:`CheckReport` that separates *substantive*
passes (the implication's antecedent held and so did the conclusion) from
*vacuous* ones (antecedent false).  On finite spaces the hypothesis
"dense-in-itself and semi-T_D" only holds for the empty space, so most
theorem-level passes are vacuous; :func:`theorem1_witness` gives the
argument itself a non-vacuous workout by running its construction on every
alpha-scattered set with a nonempty consolidation.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .enumeration import canonical_form, enumerate_topologies, first_rows, random_space
from .errors import CapacityExceeded, InternalProofStepFailed, PreconditionViolated
from .expr import PredExpr, evaluate, uses_subset
from .operators import closure_mask, consolidation_mask, interior_mask, isolated_mask
from .predicates import (
    SetPredicateKind as K,
    SpacePredicateKind as SK,
    beta_open_direct_mask,
    is_alpha_scattered_mask,
    is_scattered_mask,
    set_predicate_mask,
    space_predicate,
)
from .space import PointSet, Space, is_open_mask, iter_bits, khalimsky_window, serialize_space, subspace, product

EXHAUSTIVE_CAP = 6
DEFAULT_MAX_N = 5
IDEAL_PAIRS_CAP = 4
BUILTIN_WINDOWS = ((-5, 5), (0, 9))
NOTES_KEPT = 5


def _fmt(S: Space, bits: int) -> str:
    return "{" + ",".join(S.label(x) for x in iter_bits(bits)) + "}"


@dataclass(frozen=True, order=True)
class Failure:
    n: int
    table: tuple[int, ...]
    subsets: tuple[int, ...]
    diagnostic: str
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def of(cls, S: Space, subsets: Sequence[int], diagnostic: str) -> Failure:
        return cls(S.n, S.nbhd, tuple(subsets), diagnostic, S.labels)

    @property
    def space(self) -> Space:
        return Space.unchecked(self.table, self.labels)

    def to_text(self) -> str:
        S = self.space
        lines = [f"# {self.diagnostic}", serialize_space(S).rstrip()]
        for b in self.subsets:
            lines.append("subset: " + " ".join(S.label(x) for x in iter_bits(b)))
        return "\n".join(lines)


@dataclass
class CheckReport:
    check_name: str
    n: int | None = None
    spaces_checked: int = 0
    substantive_passes: int = 0
    vacuous_passes: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    label: str = ""

    @property
    def instances(self) -> int:
        return self.substantive_passes + self.vacuous_passes + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def tally(self, antecedent: bool, consequent: bool, S: Space, subsets=(), diag: str = "") -> bool:
        """Record one instance of ``antecedent => consequent``."""
        if not antecedent:
            self.vacuous_passes += 1
            return True
        if consequent:
            self.substantive_passes += 1
            return True
        self.failures.append(Failure.of(S, subsets, diag or self.check_name))
        return False

    def note(self, text: str) -> None:
        self.notes.append(text)
        self.notes = sorted(set(self.notes))[:NOTES_KEPT]

    def merge(self, other: CheckReport) -> CheckReport:
        self.spaces_checked += other.spaces_checked
        self.substantive_passes += other.substantive_passes
        self.vacuous_passes += other.vacuous_passes
        self.failures = sorted(self.failures + other.failures)
        self.notes = sorted(set(self.notes + other.notes))[:NOTES_KEPT]
        self.elapsed += other.elapsed
        return self

    def summary(self) -> str:
        where = f" n={self.n}" if self.n is not None else ""
        tag = f" [{self.label}]" if self.label else ""
        status = "PASS" if self.ok else "FAIL"
        lines = [
            f"{status} {self.check_name}{where}{tag}: spaces={self.spaces_checked} "
            f"instances={self.instances} substantive={self.substantive_passes} "
            f"vacuous={self.vacuous_passes} failures={len(self.failures)}"
        ]
        lines += [f"    note: {t}" for t in self.notes]
        for f in self.failures[:10]:
            lines += ["    " + ln for ln in f.to_text().splitlines()]
        if len(self.failures) > 10:
            lines.append(f"    ... {len(self.failures) - 10} more failures")
        return "\n".join(lines)


# --- Proposition: four equivalent conditions ---------------------------------


def dense_in_itself_semi_td(S: Space) -> bool:
    return space_predicate(S, SK.DENSE_IN_ITSELF) and space_predicate(S, SK.SEMI_T_D)


@dataclass(frozen=True)
class Prop1Result:
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    preopen_singleton: int | None = None

    @property
    def consistent(self) -> bool:
        return self.c1 == self.c2 == self.c3 == self.c4


def check_proposition1(S: Space) -> Prop1Result:
    """Evaluate the four conditions independently of one another.

    c3 ranges over every subset (all sets are finite here) rather than
    being reduced to singletons.
    """
    if S.n > 16:
        raise CapacityExceeded(f"condition (3) scans 2^{S.n} subsets")
    c1 = dense_in_itself_semi_td(S)
    c2 = all(set_predicate_mask(S, 1 << x, K.NOWHERE_DENSE) for x in range(S.n))
    c3 = all(set_predicate_mask(S, a, K.NOWHERE_DENSE) for a in range(1 << S.n))
    preopen = [x for x in range(S.n) if set_predicate_mask(S, 1 << x, K.PREOPEN)]
    c4 = not preopen
    return Prop1Result(c1, c2, c3, c4, preopen[0] if preopen else None)


def prop1_report(S: Space) -> CheckReport:
    rep = CheckReport("prop1", S.n, spaces_checked=1)
    r = check_proposition1(S)
    rep.tally(True, r.consistent, S, (), f"conditions disagree: c1..c4 = {r.c1},{r.c2},{r.c3},{r.c4}")
    if r.c1:
        rep.note(f"all four conditions hold on a {S.n}-point space")
    return rep


# --- Theorem: alpha-scattered => nowhere dense ---------------------------------


def check_theorem1(S: Space) -> CheckReport:
    """Per subset: (dense-in-itself & semi-T_D & alpha-scattered(A)) => nowhere dense(A)."""
    if S.n > 16:
        raise CapacityExceeded(f"theorem check scans 2^{S.n} subsets")
    rep = CheckReport("thm1", S.n, spaces_checked=1)
    c1 = dense_in_itself_semi_td(S)
    if S.n and c1:
        rep.failures.append(Failure.of(S, (), "nonempty finite space is dense-in-itself and semi-T_D"))
    for a in range(1 << S.n):
        if not c1:
            rep.vacuous_passes += 1
            continue
        rep.tally(
            is_alpha_scattered_mask(S, a),
            set_predicate_mask(S, a, K.NOWHERE_DENSE),
            S,
            (a,),
            "alpha-scattered set is not nowhere dense",
        )
    return rep


@dataclass(frozen=True)
class Witness:
    """Objects built by the argument: ``U`` open inside ``cl A``, ``x`` an isolated
    point of ``A`` in ``U``, ``V`` open with ``V & A == {x}``, and ``W = U & V``."""

    x: int
    W: PointSet
    A: PointSet
    U: PointSet
    V: PointSet

    def violations(self, S: Space) -> list[str]:
        bad = []
        w, a, u, v = self.W.bits, self.A.bits, self.U.bits, self.V.bits
        if not w:
            bad.append("W empty")
        if not is_open_mask(S, w):
            bad.append("W not open")
        if w & ~closure_mask(S, 1 << self.x):
            bad.append("W not inside cl{x}")
        if not isolated_mask(S, a) >> self.x & 1:
            bad.append("x not isolated in A")
        if v & a != 1 << self.x:
            bad.append("V & A != {x}")
        if w != u & v:
            bad.append("W != U & V")
        if not is_open_mask(S, v) or not is_open_mask(S, u) or u & ~closure_mask(S, a):
            bad.append("U or V malformed")
        return bad


def theorem1_witness(S: Space, A: PointSet) -> Witness:
    """Run the contradiction argument on a concrete alpha-scattered ``A`` with ``A+ != {}``.

    The returned witness shows ``{x}`` has nonempty consolidation, i.e. a
    singleton that is not nowhere dense, which is why the hypothesis on
    ``S`` must fail.
    """
    a = A.bits
    if not is_alpha_scattered_mask(S, a):
        raise PreconditionViolated("A is not alpha-scattered")
    u = consolidation_mask(S, a)
    if not u:
        raise PreconditionViolated("consolidation of A is empty")
    meet = u & isolated_mask(S, a)
    if not meet:
        raise InternalProofStepFailed(f"U does not meet I(A) for A={_fmt(S, a)} in {S!r}")
    x = (meet & -meet).bit_length() - 1
    v = S.nbhd[x]
    if v & a != 1 << x:
        raise InternalProofStepFailed(f"V & A != {{x}} for x={x}")
    n = S.n
    return Witness(x, PointSet(n, u & v), A, PointSet(n, u), PointSet(n, v))


def witness_report(S: Space) -> CheckReport:
    rep = CheckReport("witness", S.n, spaces_checked=1)
    for a in range(1 << S.n):
        applicable = is_alpha_scattered_mask(S, a) and consolidation_mask(S, a) != 0
        if not applicable:
            rep.vacuous_passes += 1
            continue
        try:
            w = theorem1_witness(S, PointSet(S.n, a))
        except InternalProofStepFailed as e:
            rep.tally(True, False, S, (a,), f"InternalProofStepFailed: {e}")
            continue
        bad = w.violations(S)
        if not bad and set_predicate_mask(S, 1 << w.x, K.NOWHERE_DENSE):
            bad.append("{x} unexpectedly nowhere dense")
        rep.tally(True, not bad, S, (a,), "witness invariants: " + ", ".join(bad))
    return rep


# --- Observation: beta-open subspaces and products ----------------------------


def obs2_subspace_stated(S: Space) -> CheckReport:
    rep = CheckReport("obs2_subspace_stated", S.n, spaces_checked=1)
    c1 = dense_in_itself_semi_td(S)
    for b in range(1 << S.n):
        if not set_predicate_mask(S, b, K.BETA_OPEN):
            continue
        rep.tally(c1, c1 and dense_in_itself_semi_td(subspace(S, PointSet(S.n, b))), S, (b,),
                  "beta-open subspace loses dense-in-itself semi-T_D")
    return rep


def obs2_subspace_derived(S: Space) -> CheckReport:
    """Pointwise form: a singleton nowhere dense in X stays nowhere dense in a beta-open B."""
    rep = CheckReport("obs2_subspace_derived", S.n, spaces_checked=1, label="derived")
    nd = [set_predicate_mask(S, 1 << x, K.NOWHERE_DENSE) for x in range(S.n)]
    for b in range(1 << S.n):
        if not set_predicate_mask(S, b, K.BETA_OPEN):
            continue
        B = PointSet(S.n, b)
        sub = subspace(S, B)
        for i, x in enumerate(B):
            rep.tally(nd[x], set_predicate_mask(sub, 1 << i, K.NOWHERE_DENSE), S, (b, 1 << x),
                      f"{{{S.label(x)}}} nowhere dense in X but not in beta-open B")
    return rep


def check_observation2_subspace(S: Space) -> CheckReport:
    rep = obs2_subspace_stated(S)
    rep.check_name = "obs2_subspace"
    d = obs2_subspace_derived(S)
    d.spaces_checked = 0
    return rep.merge(d)


def _product_all(factors: Sequence[Space]) -> Space:
    P = factors[0]
    for F in factors[1:]:
        P = product(P, F)
    return P


def _coords(factors: Sequence[Space], p: int) -> list[int]:
    out = []
    for F in reversed(factors):
        out.append(p % F.n)
        p //= F.n
    return out[::-1]


def _failure_space(factors: Sequence[Space]) -> Space:
    return _product_all(factors)


def obs2_product_stated(factors: Sequence[Space]) -> CheckReport:
    if not 2 <= len(factors) <= 3:
        raise ValueError("products of 2 or 3 factors are supported")
    P = _product_all(factors)
    rep = CheckReport("obs2_product_stated", max(F.n for F in factors), spaces_checked=1,
                      label="finite-arity only")
    some = any(dense_in_itself_semi_td(F) for F in factors)
    rep.tally(some, dense_in_itself_semi_td(P), P, (), "product of factors loses dense-in-itself semi-T_D")
    return rep


def obs2_product_derived(factors: Sequence[Space]) -> CheckReport:
    """Pointwise form: if ``{x_j}`` is nowhere dense in some factor, the product point is too."""
    if not 2 <= len(factors) <= 3:
        raise ValueError("products of 2 or 3 factors are supported")
    P = _product_all(factors)
    rep = CheckReport("obs2_product_derived", max(F.n for F in factors), spaces_checked=1,
                      label="derived, finite-arity only")
    nd = [[set_predicate_mask(F, 1 << x, K.NOWHERE_DENSE) for x in range(F.n)] for F in factors]
    for p in range(P.n):
        cs = _coords(factors, p)
        p_nd = set_predicate_mask(P, 1 << p, K.NOWHERE_DENSE)
        for j, c in enumerate(cs):
            rep.tally(nd[j][c], p_nd, P, (1 << p,), f"factor {j} point nowhere dense, product point not")
    return rep


def check_observation2_product(factors: Sequence[Space]) -> CheckReport:
    rep = obs2_product_stated(factors)
    rep.check_name = "obs2_product"
    d = obs2_product_derived(factors)
    d.spaces_checked = 0
    return rep.merge(d)


# --- Scattered sets form an ideal iff T0 ----------------------------------


def _pairs(S: Space, sample: int | None, seed: int) -> Iterator[tuple[int, int]]:
    n = S.n
    if sample is None:
        for a in range(1 << n):
            for b in range(1 << n):
                yield a, b
        return
    for x in range(n):
        for y in range(n):
            yield 1 << x, 1 << y
    rng = random.Random(f"{seed}:{S.nbhd}")
    for _ in range(sample):
        yield rng.getrandbits(n) if n else 0, rng.getrandbits(n) if n else 0


def check_scattered_ideal(S: Space, sample: int | None = None, seed: int = 0) -> CheckReport:
    """Scattered sets closed under finite unions <=> T0; plus unconditional ideal facts.

    All subset pairs are scanned for ``n <= 4``; above that (or when
    ``sample`` is given) every pair of singletons plus ``sample`` random
    pairs are used.  Singleton pairs always expose non-additivity, since a
    non-T0 space has two points with equal neighbourhoods.
    """
    n = S.n
    if sample is None and n > IDEAL_PAIRS_CAP:
        sample = 256
    rep = CheckReport("ideal", n, spaces_checked=1, label="" if sample is None else "sampled")
    scat = {}

    def sc(a: int) -> bool:
        if a not in scat:
            scat[a] = is_scattered_mask(S, a)
        return scat[a]

    additive = True
    for a, b in _pairs(S, sample, seed):
        if sc(a) and sc(b) and not sc(a | b):
            if additive:
                rep.note(f"non-additive: {_fmt(S, a)} and {_fmt(S, b)} scattered, union not "
                         f"(space {S!r})")
            additive = False
            break
    t0 = space_predicate(S, SK.T0)
    rep.tally(True, additive == t0, S, (), f"scattered additive={additive} but t0={t0}")

    subsets = range(1 << n) if n <= IDEAL_PAIRS_CAP + 2 else sorted({p for ab in _pairs(S, sample, seed) for p in ab})
    # heredity of scattered sets: enough to drop one point at a time from every scattered set
    hered = all(sc(a & ~(1 << x)) for a in subsets if sc(a) for x in iter_bits(a))
    rep.tally(True, hered, S, (), "scattered sets not hereditary")
    nd = [a for a in subsets if set_predicate_mask(S, a, K.NOWHERE_DENSE)]
    n_ideal = set_predicate_mask(S, 0, K.NOWHERE_DENSE) and all(
        set_predicate_mask(S, a & ~(1 << x), K.NOWHERE_DENSE) for a in nd for x in iter_bits(a)
    ) and all(set_predicate_mask(S, a | b, K.NOWHERE_DENSE) for a in nd for b in nd)
    rep.tally(True, n_ideal, S, (), "nowhere dense sets do not form an ideal")
    # every subset of a finite space is finite, so the finite sets are the whole power set
    rep.tally(True, True, S, (), "")
    return rep


# --- Micro-lemmas ------------------------------------------------------------


ORACLE_N = 6


def run_lemma_suite(S: Space, oracle: bool | None = None) -> CheckReport:
    """Evaluate every small lemma on every subset; failures carry the lemma id."""
    n = S.n
    if n > 16:
        raise CapacityExceeded(f"lemma suite scans 2^{n} subsets")
    if oracle is None:
        oracle = n <= ORACLE_N
    rep = CheckReport("lemmas", n, spaces_checked=1)
    full = S.full
    P = lambda a, k: set_predicate_mask(S, a, k)  # noqa: E731

    t1 = space_predicate(S, SK.T1)
    try:
        td = space_predicate(S, SK.T_D)
        rep.tally(True, True, S, (), "L_td_agreement")
    except AssertionError:
        td = False
        rep.tally(True, False, S, (), "L_td_agreement")
    std = space_predicate(S, SK.SEMI_T_D)
    rep.tally(t1, td, S, (), "L_t1_td")
    rep.tally(td, std, S, (), "L_td_semitd")
    rep.tally(True, t1 == all(u == 1 << x for x, u in enumerate(S.nbhd)), S, (), "L_t1_discrete")
    rep.tally(True, (isolated_mask(S, full) == 0) == all(u != 1 << x for x, u in enumerate(S.nbhd)),
              S, (), "L_screen")

    for a in range(1 << n):
        c = closure_mask(S, a)
        i = interior_mask(S, a)
        rep.tally(True, a & ~c == 0 and closure_mask(S, c) == c, S, (a,), "L_closure_kuratowski")
        rep.tally(True, i == full & ~closure_mask(S, full & ~a), S, (a,), "L_interior_duality")
        rep.tally(True, (c == a) == (_derived(S, a) & ~a == 0), S, (a,), "L_closed_derived")
        if a and a & (a - 1) == 0:
            rep.tally(True, P(a, K.PREOPEN) or P(a, K.NOWHERE_DENSE), S, (a,), "L_singleton_dichotomy")
        nd, sc_, pre = P(a, K.NOWHERE_DENSE), P(a, K.SEMI_CLOSED), P(a, K.PREOPEN)
        beta = P(a, K.BETA_OPEN)
        rep.tally(nd, sc_, S, (a,), "L_nd_semiclosed")
        rep.tally(pre and sc_, P(a, K.REGULAR_OPEN), S, (a,), "L_preopen_semiclosed_regopen")
        rep.tally(P(a, K.OPEN) or P(a, K.DENSE), pre, S, (a,), "L_open_dense_preopen")
        rep.tally(pre, beta, S, (a,), "L_preopen_beta")
        if oracle:
            rep.tally(True, beta == beta_open_direct_mask(S, a), S, (a,), "L_beta_oracle")
        scat = is_scattered_mask(S, a)
        alpha = is_alpha_scattered_mask(S, a)
        rep.tally(scat, alpha, S, (a,), "L_scattered_alpha")
        rep.tally(scat, all(is_scattered_mask(S, a & ~(1 << x)) for x in iter_bits(a)), S, (a,),
                  "L_scattered_hereditary")
        rep.tally(alpha, _fenestration_ok(S, a), S, (a,), "L_fenestration")
    return rep


def _derived(S: Space, a: int) -> int:
    out = 0
    for x, u in enumerate(S.nbhd):
        if u & ~(1 << x) & a:
            out |= 1 << x
    return out


def _fenestration_ok(S: Space, a: int) -> bool:
    """The singletons of isolated points: nonempty, disjoint, open in A, union dense in A."""
    iso = isolated_mask(S, a)
    pieces = [1 << x for x in iter_bits(iso)]
    if any(S.nbhd[x] & a != 1 << x for x in iter_bits(iso)):
        return False
    union = 0
    for p in pieces:
        if union & p:
            return False
        union |= p
    return a & ~closure_mask(S, union) == 0


# --- Counterexample search ---------------------------------------------------


@dataclass
class SearchResult:
    n_max: int
    witnesses: list[tuple[Space, PointSet]] = field(default_factory=list)
    spaces_scanned: int = 0
    instances: int = 0
    vacuous: int = 0
    substantive: int = 0
    antecedent_spaces: int = 0


def search(
    n_max: int,
    antecedent: PredExpr,
    consequent: PredExpr,
    quantifier: str = "exists",
    canonical: bool = False,
    n_min: int = 0,
) -> SearchResult:
    """Look for instances where ``antecedent => consequent`` fails.

    With ``quantifier="exists"`` every failing ``(space, subset)`` pair is
    a witness.  With ``"forall"`` each space is one instance and is
    reported once, with its least failing subset.  Antecedents that mention
    no set predicate are evaluated once per space.
    """
    if quantifier not in ("exists", "forall"):
        raise ValueError(f"unknown quantifier {quantifier!r}")
    if n_max > EXHAUSTIVE_CAP:
        raise CapacityExceeded(f"search supports n_max <= {EXHAUSTIVE_CAP}")
    res = SearchResult(n_max)
    ante_sub = uses_subset(antecedent)
    cons_sub = uses_subset(consequent)
    for k in range(n_min, n_max + 1):
        seen = set()
        for S in enumerate_topologies(k):
            if canonical:
                cf = canonical_form(S)
                if cf in seen:
                    continue
                seen.add(cf)
            res.spaces_scanned += 1
            subsets = 1 << k
            if not ante_sub and not evaluate(antecedent, S):
                res.instances += subsets if quantifier == "exists" else 1
                res.vacuous += subsets if quantifier == "exists" else 1
                continue
            cons_const = None if cons_sub else evaluate(consequent, S)
            any_ante = False
            first_fail = None
            for a in range(subsets):
                if ante_sub and not evaluate(antecedent, S, a):
                    if quantifier == "exists":
                        res.instances += 1
                        res.vacuous += 1
                    continue
                any_ante = True
                holds = cons_const if cons_const is not None else evaluate(consequent, S, a)
                if quantifier == "exists":
                    res.instances += 1
                    if holds:
                        res.substantive += 1
                    else:
                        res.witnesses.append((S, PointSet(k, a)))
                elif not holds and first_fail is None:
                    first_fail = a
            if any_ante:
                res.antecedent_spaces += 1
            if quantifier == "forall":
                res.instances += 1
                if first_fail is not None:
                    res.witnesses.append((S, PointSet(k, first_fail)))
                elif any_ante:
                    res.substantive += 1
                else:
                    res.vacuous += 1
    return res


# --- Suite runner -------------------------------------------------------------


PER_SPACE: dict[str, Callable[[Space], CheckReport]] = {
    "prop1": prop1_report,
    "thm1": check_theorem1,
    "witness": witness_report,
    "obs2_subspace_stated": obs2_subspace_stated,
    "obs2_subspace_derived": obs2_subspace_derived,
    "ideal": check_scattered_ideal,
    "lemmas": run_lemma_suite,
}
PRODUCT_CHECKS = {
    "obs2_product_stated": obs2_product_stated,
    "obs2_product_derived": obs2_product_derived,
}
SUITES = {
    "prop1": ["prop1"],
    "thm1": ["thm1"],
    "witness": ["witness"],
    "obs2": ["obs2_subspace_stated", "obs2_subspace_derived", "obs2_product_stated", "obs2_product_derived"],
    "ideal": ["ideal"],
    "lemmas": ["lemmas"],
}
SUITES["all"] = [c for s in ("prop1", "thm1", "witness", "obs2", "ideal", "lemmas") for c in SUITES[s]]

PRODUCT_FACTOR_N = 3
TRIPLE_FACTOR_N = 2
LEMMA_SAMPLE_SPACES = 60


@dataclass(frozen=True)
class RunConfig:
    max_n: int = DEFAULT_MAX_N
    canonical_dedup: bool = False
    workers: int = 1
    output_format: str = "text"
    seed: int = 0
    windows: bool = True
    allow_large: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= self.max_n <= 7:
            raise CapacityExceeded(f"max_n must be in [0, 7], got {self.max_n}")
        limit = EXHAUSTIVE_CAP if self.allow_large else DEFAULT_MAX_N
        if self.max_n > limit:
            raise CapacityExceeded(
                f"exhaustive verification is capped at n <= {limit}"
                + ("" if self.allow_large else " (n = 6 needs the opt-in flag)")
            )


def _spaces_for(n: int, first_row: int | None, canonical: bool) -> Iterator[Space]:
    stream = enumerate_topologies(n, () if first_row is None else (first_row,))
    if not canonical:
        yield from stream
        return
    # keep a class only at its lexicographically first labelled member
    for S in stream:
        if _is_first_of_class(S):
            yield S


def _is_first_of_class(S: Space) -> bool:
    from itertools import permutations

    return all(S.relabel(p).nbhd >= S.nbhd for p in permutations(range(S.n)))


def _task_space(args) -> list[CheckReport]:
    checks, n, first_row, canonical = args
    reports = [CheckReport(c, n) for c in checks]
    for S in _spaces_for(n, first_row, canonical):
        for rep, c in zip(reports, checks):
            t = time.perf_counter()
            r = PER_SPACE[c](S)
            r.elapsed = time.perf_counter() - t
            rep.label = r.label
            rep.merge(r)
    return reports


def _task_fixed(args) -> list[CheckReport]:
    checks, name, spaces, kwargs = args
    out = []
    for c in checks:
        rep = CheckReport(f"{c}@{name}", max((S.n for S in spaces), default=0))
        for S in spaces:
            t = time.perf_counter()
            r = PER_SPACE[c](S, **kwargs.get(c, {})) if c in kwargs else PER_SPACE[c](S)
            r.elapsed = time.perf_counter() - t
            rep.label = r.label
            rep.merge(r)
        out.append(rep)
    return out


def _product_factor_lists(max_n: int) -> list[tuple[Space, ...]]:
    base = [S for k in range(min(max_n, PRODUCT_FACTOR_N) + 1) for S in enumerate_topologies(k)]
    small = [S for k in range(min(max_n, TRIPLE_FACTOR_N) + 1) for S in enumerate_topologies(k)]
    lists = [(S, T) for S in base for T in base]
    lists += [(S, T, R) for S in small for T in small for R in small]
    lists.append((khalimsky_window(0, 2), Space.from_masks([0b01, 0b11])))
    return lists


def _task_product(args) -> list[CheckReport]:
    checks, chunk = args
    out = []
    for c in checks:
        rep = CheckReport(c, None)
        for factors in chunk:
            t = time.perf_counter()
            r = PRODUCT_CHECKS[c](factors)
            r.elapsed = time.perf_counter() - t
            rep.label = r.label
            rep.merge(r)
            rep.n = max(rep.n or 0, r.n or 0)
        out.append(rep)
    return out


def _sampled_spaces(n: int, count: int, seed: int) -> list[Space]:
    rng = random.Random(f"lemma-sample:{seed}:{n}")
    if n <= 5:
        pool = list(enumerate_topologies(n))
        return [pool[rng.randrange(len(pool))] for _ in range(count)]
    return [random_space(n, rng) for _ in range(count)]


def run_suite(suite: str, config: RunConfig = RunConfig()) -> list[CheckReport]:
    """Run a named suite over every labelled space with ``n <= max_n``,
    the built-in digital-line windows and, for some checks, sampled larger
    spaces.  Output is independent of ``config.workers``."""
    if suite not in SUITES:
        raise KeyError(suite)
    checks = SUITES[suite]
    space_checks = [c for c in checks if c in PER_SPACE]
    prod_checks = [c for c in checks if c in PRODUCT_CHECKS]

    jobs: list[tuple[Callable, tuple]] = []
    for n in range(config.max_n + 1):
        if not space_checks:
            break
        rows = first_rows(n) or [None]
        jobs.append(("merge", [(_task_space, (space_checks, n, r, config.canonical_dedup)) for r in rows]))
    if config.windows and space_checks:
        for a, b in BUILTIN_WINDOWS:
            jobs.append(("one", [(_task_fixed, (space_checks, f"K[{a},{b}]", [khalimsky_window(a, b)], {}))]))
    if "lemmas" in space_checks:
        for n in (5, 6):
            if n > config.max_n:
                spaces = _sampled_spaces(n, LEMMA_SAMPLE_SPACES, config.seed)
                jobs.append(("one", [(_task_fixed, (["lemmas"], f"sampled{n}", spaces, {}))]))
    if prod_checks:
        lists = _product_factor_lists(config.max_n)
        size = 64
        chunks = [lists[i : i + size] for i in range(0, len(lists), size)]
        jobs.append(("merge", [(_task_product, (prod_checks, ch)) for ch in chunks]))

    flat = [t for _, group in jobs for t in group]
    if config.workers == 1:
        results = [fn(arg) for fn, arg in flat]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as ex:
            futures = [ex.submit(fn, arg) for fn, arg in flat]
            results = [f.result() for f in futures]

    out: list[CheckReport] = []
    i = 0
    for _, group in jobs:
        part = results[i : i + len(group)]
        i += len(group)
        merged = part[0]
        for more in part[1:]:
            for m, r in zip(merged, more):
                m.merge(r)
        for m in merged:
            m.failures.sort()
        out.extend(merged)
    order = {c: k for k, c in enumerate(checks)}
    out.sort(key=lambda r: order[r.check_name.split("@")[0]])
    return out


CSV_HEADER = "name,n,spaces,substantive,vacuous,failures,elapsed_ms"


def reports_to_csv(reports: Iterable[CheckReport], timing: bool = False) -> str:
    lines = [CSV_HEADER]
    for r in reports:
        elapsed = f"{r.elapsed * 1000:.1f}" if timing else ""
        lines.append(
            f"{r.check_name},{'' if r.n is None else r.n},{r.spaces_checked},"
            f"{r.substantive_passes},{r.vacuous_passes},{len(r.failures)},{elapsed}"
        )
    return "\n".join(lines) + "\n"


def reports_to_text(reports: Iterable[CheckReport]) -> str:
    return "\n".join(r.summary() for r in reports) + "\n"
