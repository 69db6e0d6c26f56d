"""Command-line entry point.

Exit codes: 0 all checks pass / no counterexample, 1 counterexample found,
2 usage, parse, validation or capacity error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .enumeration import canonical_form, enumerate_topologies
from .errors import ExprSyntaxError, TopologyError, UnknownPredicate
from .expr import evaluate, parse_pred_expr, uses_subset
from .harness import SUITES, RunConfig, reports_to_csv, reports_to_text, run_suite, search
from .operators import OPERATORS, apply_operator
from .space import (
    DEFAULT_OPEN_CAP,
    PointSet,
    Space,
    khalimsky_window,
    open_sets,
    parse_space,
    product,
    serialize_space,
)


class UsageError(Exception):
    pass


def _load(path: str) -> Space:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_space(text)


def parse_subset(S: Space, literal: str) -> PointSet:
    """Parse a comma/space separated list of labels; ``{}`` is the empty set."""
    text = literal.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    bits = 0
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        try:
            bits |= 1 << S.index_of(tok)
        except (KeyError, ValueError):
            raise UsageError(f"{tok!r} is not a point of this space") from None
    return PointSet(S.n, bits)


def format_subset(S: Space, A: PointSet) -> str:
    return " ".join(S.label(x) for x in A) if A else "{}"


def compact_row(S: Space) -> str:
    return f"{S.n}:" + ",".join(f"{b:x}" for b in S.nbhd)


def _caret(text: str, pos: int) -> str:
    return f"  {text}\n  {' ' * pos}^"


def cmd_validate(args) -> int:
    S = _load(args.path)
    fam = open_sets(S, cap=args.cap_opens)
    sys.stdout.write(serialize_space(S))
    print(f"# open sets: {len(fam)}")
    return 0


def cmd_op(args) -> int:
    S = _load(args.path)
    if args.operator not in OPERATORS:
        raise UsageError(f"unknown operator {args.operator!r}; choose from {', '.join(OPERATORS)}")
    if args.operator != "screen" and args.subset is None:
        raise UsageError(f"operator {args.operator!r} needs a subset")
    A = parse_subset(S, args.subset) if args.subset is not None else None
    print(format_subset(S, apply_operator(S, args.operator, A).output))
    return 0


def cmd_enumerate(args) -> int:
    flt = parse_pred_expr(args.filter) if args.filter else None
    if flt is not None and uses_subset(flt):
        raise UsageError("--filter accepts space predicates only (prefix 'space:')")
    seen = set()
    blocks = []
    for S in enumerate_topologies(args.n):
        if args.canonical:
            cf = canonical_form(S)
            if cf in seen:
                continue
            seen.add(cf)
        if flt is not None and not evaluate(flt, S):
            continue
        if args.compact:
            print(compact_row(S))
        else:
            blocks.append(serialize_space(S))
    if blocks:
        sys.stdout.write("\n".join(blocks))
    return 0


def cmd_verify(args) -> int:
    config = RunConfig(
        max_n=args.max_n,
        canonical_dedup=args.canonical,
        workers=args.workers,
        output_format=args.format,
        seed=args.seed,
        windows=not args.no_windows,
        allow_large=args.allow_n6,
    )
    reports = run_suite(args.suite, config)
    if args.format == "csv":
        sys.stdout.write(reports_to_csv(reports, timing=args.timing))
    else:
        sys.stdout.write(reports_to_text(reports))
    return 0 if all(r.ok for r in reports) else 1


def cmd_search(args) -> int:
    exprs = []
    for text in (args.antecedent, args.consequent):
        try:
            exprs.append(parse_pred_expr(text))
        except (ExprSyntaxError, UnknownPredicate) as e:
            pos = e.position if e.position is not None else 0
            raise UsageError(f"{type(e).__name__}: {e}\n{_caret(text, pos)}") from None
    res = search(args.max_n, exprs[0], exprs[1], args.quantifier, canonical=args.canonical)
    for S, A in res.witnesses:
        sys.stdout.write(serialize_space(S))
        print(f"subset: {format_subset(S, A)}")
        print()
    tail = (
        f"spaces={res.spaces_scanned} instances={res.instances} "
        f"substantive={res.substantive} vacuous={res.vacuous} "
        f"antecedent_spaces={res.antecedent_spaces}"
    )
    if res.witnesses:
        print(f"{len(res.witnesses)} counterexample(s) up to n={args.max_n}; {tail}")
        return 1
    print(f"no counterexample up to n={args.max_n}; {tail}")
    return 0


def cmd_khalimsky(args) -> int:
    sys.stdout.write(serialize_space(khalimsky_window(args.a, args.b)))
    return 0


def cmd_product(args) -> int:
    sys.stdout.write(serialize_space(product(_load(args.left), _load(args.right))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alexspace", description="Finite topological spaces toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse and validate a .topo file")
    v.add_argument("path")
    v.add_argument("--cap-opens", type=int, default=DEFAULT_OPEN_CAP)
    v.set_defaults(func=cmd_validate)

    o = sub.add_parser("op", help="apply an operator to a subset")
    o.add_argument("path")
    o.add_argument("operator", help=", ".join(OPERATORS))
    o.add_argument("subset", nargs="?", help="labels separated by commas or spaces; {} is empty")
    o.set_defaults(func=cmd_op)

    e = sub.add_parser("enumerate", help="list every topology on n points")
    e.add_argument("n", type=int)
    e.add_argument("--canonical", action="store_true", help="one space per homeomorphism class")
    e.add_argument("--compact", action="store_true", help="one 'n:hex,hex,...' row per space")
    e.add_argument("--filter", help="space-predicate expression, e.g. 'space:t0 & !space:t1'")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("verify", help="run a verification suite")
    r.add_argument("suite", choices=sorted(SUITES))
    r.add_argument("--max-n", type=int, default=4)
    r.add_argument("--canonical", action="store_true")
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--format", choices=("text", "csv"), default="text")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--allow-n6", action="store_true", help="permit --max-n 6")
    r.add_argument("--no-windows", action="store_true", help="skip the built-in digital-line windows")
    r.add_argument("--timing", action="store_true", help="fill the elapsed_ms CSV column")
    r.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="hunt for counterexamples to an implication")
    s.add_argument("antecedent")
    s.add_argument("consequent")
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--quantifier", choices=("exists", "forall"), default="exists")
    s.set_defaults(func=cmd_search)

    k = sub.add_parser("khalimsky", help="emit a digital-line window a..b as .topo")
    k.add_argument("a", type=int)
    k.add_argument("b", type=int)
    k.set_defaults(func=cmd_khalimsky)

    x = sub.add_parser("product", help="product of two .topo spaces")
    x.add_argument("left")
    x.add_argument("right")
    x.set_defaults(func=cmd_product)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TopologyError as e:
        names = [c.__name__ for c in type(e).__mro__ if c.__module__ == TopologyError.__module__]
        kind = " / ".join(n for n in names[:2] if n not in ("TopologyError",))
        print(f"error: {kind}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
