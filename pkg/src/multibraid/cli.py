"""Command-line front end.

Commands: convert, expand, verify, check-generation, bounds, components,
invariant, corpus.  Exit codes: 0 success, 1 input/output problems,
2 contract or theory errors (including the odd-width knot obstruction),
3 resource-guard refusals.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import corpus as corpus_mod
from .braid import (
    expand,
    format_braid,
    format_multibraid,
    closure_components,
    parse_braid,
    parse_multibraid,
)
from .construct import convert_even_with_audit
from .errors import ContractError, MultibraidError, RangeError, ResourceGuardError
from .group import classify_crossing_group
from .oddn import convert_odd_with_audit
from .triple import convert_triple_with_audit
from .verify.bracket import MAX_JONES_STRANDS, jones, kauffman_bracket_closure
from .verify.laurent import format_poly
from .verify.report import equivalence_report


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def format_jones(poly) -> str:
    """Render a polynomial stored in t^(1/2) units with fractional
    exponents spelled out, e.g. ``-t^(-5/2) - t^(-1/2)``."""
    if poly.is_zero():
        return "0"
    parts = []
    for e, c in poly.terms():
        if e == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            if e % 2 == 0:
                exp = e // 2
                body = f"{mag}t" if exp == 1 else f"{mag}t^{exp}"
            else:
                body = f"{mag}t^({e}/2)"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def cmd_convert(args) -> int:
    word = parse_braid(_read(args.infile))
    if args.n == 3:
        out, audit = convert_triple_with_audit(word)
    elif args.n % 2 == 0:
        out, audit = convert_even_with_audit(word, args.n)
    else:
        out, audit = convert_odd_with_audit(word, args.n)
    _write(args.outfile, format_multibraid(out))
    if args.audit:
        _write(args.audit, json.dumps(audit, indent=1) + "\n")
    print(f"converted to width {out.width} on {out.strands} strands "
          f"({len(out.crossings)} crossings)")
    return 0


def cmd_expand(args) -> int:
    word = parse_multibraid(_read(args.infile))
    _write(args.outfile, format_braid(expand(word)))
    return 0


def cmd_verify(args) -> int:
    word = parse_braid(_read(args.infile))
    out = parse_multibraid(_read(args.outfile))
    audit = json.loads(_read(args.audit)) if args.audit else None
    report = equivalence_report(word, out, audit, guard=args.jones_guard)
    for key in (
        "phi_match",
        "components_match",
        "burau_match",
        "normal_form_match",
        "jones_match",
    ):
        print(f"{key}: {getattr(report, key)}")
    print(f"verdict: {report.verdict}")
    if args.seed is not None:
        ok = bounds_mod.markov_parity_example_check(word, moves=50, seed=args.seed)
        print(f"markov_parity_spot_check: {ok}")
    if args.report:
        _write(args.report, json.dumps(report.as_dict(), indent=1) + "\n")
    return 0 if report.verdict != "Mismatch" else 2


def cmd_check_generation(args) -> int:
    if args.n_max is not None:
        for n, m in bounds_mod.required_cells(args.n_max):
            c = classify_crossing_group(n, m)
            print(f"{n}\t{m}\t{c.tag}\t{c.order}")
        return 0
    if args.n is None or args.m is None:
        raise RangeError("check-generation needs --n and --m, or --n-max")
    c = classify_crossing_group(args.n, args.m)
    print(f"{args.n}\t{args.m}\t{c.tag}\t{c.order}")
    return 0


def cmd_bounds(args) -> int:
    statements, gaps = bounds_mod.derive_bounds(args.max_n)
    if args.transitive:
        statements = bounds_mod.transitive_closure(statements)
    sys.stdout.write(bounds_mod.bounds_tsv(statements))
    for gap in gaps:
        print(f"gap: {gap}", file=sys.stderr)
    return 0


def cmd_components(args) -> int:
    text = _read(args.infile)
    word = (
        parse_multibraid(text)
        if text.lstrip().startswith("multibraid")
        else parse_braid(text)
    )
    print(closure_components(word))
    return 0


def cmd_invariant(args) -> int:
    text = _read(args.infile)
    word = (
        expand(parse_multibraid(text))
        if text.lstrip().startswith("multibraid")
        else parse_braid(text)
    )
    if args.jones:
        print(format_jones(jones(word, args.jones_guard)))
    if args.bracket:
        print(format_poly(kauffman_bracket_closure(word, args.jones_guard), "A"))
    if not args.jones and not args.bracket:
        raise RangeError("choose an invariant: --jones and/or --bracket")
    return 0


def cmd_corpus(args) -> int:
    for path in corpus_mod.write_corpus(args.dir):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multibraid",
        description="multi-crossing braid conversions, generation checks, "
        "braid-index bounds, and invariant verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="rewrite a braid with width-n crossings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--audit", default=None)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("expand", help="expand multi-crossings into letters")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="compare a braid with a conversion")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--audit", default=None)
    p.add_argument("--report", default=None, help="write the report as JSON")
    p.add_argument("--jones-guard", type=int, default=MAX_JONES_STRANDS)
    p.add_argument("--seed", type=int, default=None,
                   help="also spot-check Markov-move parity bookkeeping")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "check-generation", help="classify the group generated by crossings"
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.set_defaults(func=cmd_check_generation)

    p = sub.add_parser("bounds", help="emit the braid-index inequality table")
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--transitive", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("components", help="closure component count")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("invariant", help="closure invariants")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--jones", action="store_true")
    p.add_argument("--bracket", action="store_true")
    p.add_argument("--jones-guard", type=int, default=MAX_JONES_STRANDS)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("corpus", help="write the bundled example braids")
    p.add_argument("--dir", required=True)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except (ContractError, RangeError, MultibraidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
