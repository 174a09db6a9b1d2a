"""Command-line interface.

Exit codes: 0 success/verified, 1 verification failure, 2 syntax or input
error, 3 non-associative table, 4 coloring condition failure.  Reports go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .coloring import (
    CONDITION_NAMES,
    build_coloring,
    check_conditions,
    conditions_ok,
    parse_coloring,
)
from .presentation import (
    ColoringConditionError,
    NotAssociativeError,
    RULE_FAMILIES,
    format_word,
    generate_presentation,
    parse_word,
    presentation_from_json,
    presentation_to_json,
    rule_counts,
)
from .rewrite import check_local_confluence, enumerate_normal_forms, normal_form
from .semigroup import BUILTIN_NAMES, builtin, parse_cayley
from .witness import collapse, format_trace, parse_trace, verify_trace


def _load_presentation(path):
    return presentation_from_json(Path(path).read_text())


def cmd_build(args) -> int:
    if args.builtin:
        table = builtin(args.builtin)
    else:
        table = parse_cayley(Path(args.cayley).read_text())
    pres = generate_presentation(table, build_coloring(table.n))
    Path(args.out).write_text(presentation_to_json(pres) + "\n")
    counts = rule_counts(pres)
    breakdown = " ".join(f"{fam}={counts[fam]}" for fam in RULE_FAMILIES)
    print(f"n={pres.n}: {len(pres.rules)} rules ({breakdown})")
    return 0


def cmd_nf(args) -> int:
    pres = _load_presentation(args.pres)
    word = parse_word(args.word, pres.n)
    print(format_word(normal_form(word, pres)))
    return 0


def cmd_check_complete(args) -> int:
    pres = _load_presentation(args.pres)
    ok, bad, pairs = check_local_confluence(pres)
    combos = {}
    for cp in pairs:
        key = (cp.rule_left.family, cp.rule_right.family)
        combos[key] = combos.get(key, 0) + 1
    print(f"critical pairs: {len(pairs)}")
    for (f1, f2), count in sorted(combos.items()):
        print(f"  {f1}-{f2}: {count}")
    if ok:
        print(f"all {len(pairs)} pairs joinable: system is complete")
        return 0
    print(f"NOT CONFLUENT at overlap {format_word(bad.overlap)}")
    print(f"  left reduct  {format_word(bad.left_reduct)} -> {format_word(normal_form(bad.left_reduct, pres))}")
    print(f"  right reduct {format_word(bad.right_reduct)} -> {format_word(normal_form(bad.right_reduct, pres))}")
    return 1


def cmd_check_f(args) -> int:
    col = parse_coloring(Path(args.coloring).read_text())
    report = check_conditions(col)
    print(f"coloring n={col.n}")
    for name in CONDITION_NAMES:
        passed, violation = report[name]
        print(f"{name}: {'pass' if passed else f'FAIL at {violation}'}")
    return 0 if conditions_ok(report) else 4


def cmd_check_embed(args) -> int:
    pres = _load_presentation(args.pres)
    n = pres.n
    generators = [(("s", i),) for i in range(1, n + 1)]
    bad = []
    for g in generators:
        if normal_form(g, pres) != g:
            bad.append(f"generator {format_word(g)} is not a normal form")
    if len(set(generators)) != n:
        bad.append("generators are not pairwise distinct")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            got = normal_form((("s", i), ("s", j)), pres)
            want = (("s", pres.table.mul(i, j)),)
            if got != want:
                bad.append(
                    f"s{i} s{j} reduces to {format_word(got)}, table says {format_word(want)}"
                )
    if bad:
        for line in bad:
            print(line)
        return 1
    print(f"embedding verified: {n} distinct generators, {n * n} products match the table")
    return 0


def cmd_collapse(args) -> int:
    pres = _load_presentation(args.pres)
    u = parse_word(args.left, pres.n)
    v = parse_word(args.right, pres.n)
    trace = collapse(u, v, pres)
    text = format_trace(trace)
    if args.out:
        Path(args.out).write_text(text)
        final_l, final_r = trace.steps[-1].pair
        print(f"trace: {len(trace.steps)} steps, final ({format_word(final_l)}, {format_word(final_r)})")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_trace(args) -> int:
    pres = _load_presentation(args.pres)
    trace = parse_trace(Path(args.trace).read_text(), pres)
    ok, idx, reason = verify_trace(trace, pres)
    if ok:
        print(f"trace verified: {len(trace.steps)} steps")
        return 0
    print(f"INVALID TRACE at step {idx}: {reason}")
    return 1


def cmd_enumerate(args) -> int:
    pres = _load_presentation(args.pres)
    for w in enumerate_normal_forms(pres, args.maxlen):
        print(format_word(w))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfmonoid",
        description="Finitely presented congruence-free monoids from finite semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="generate a presentation from a Cayley table")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cayley", help="Cayley table file")
    src.add_argument("--builtin", choices=BUILTIN_NAMES, help="builtin semigroup name")
    p.add_argument("--out", required=True, help="output presentation file (JSON)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("nf", help="normal form of a word")
    p.add_argument("--pres", required=True, help="presentation file")
    p.add_argument("word", help="word in word syntax, e.g. 'x1 s2 y1'")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("check-complete", help="critical-pair confluence report")
    p.add_argument("--pres", required=True)
    p.set_defaults(func=cmd_check_complete)

    p = sub.add_parser("check-f", help="check the six conditions on a coloring file")
    p.add_argument("coloring", help="coloring file in slice-per-block format")
    p.set_defaults(func=cmd_check_f)

    p = sub.add_parser("check-embed", help="verify the semigroup embeds via its generators")
    p.add_argument("--pres", required=True)
    p.set_defaults(func=cmd_check_embed)

    p = sub.add_parser("collapse", help="derive (1, 0) from a pair of distinct normal forms")
    p.add_argument("--pres", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out", help="trace output file (default: stdout)")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("verify-trace", help="independently verify a trace file")
    p.add_argument("--pres", required=True)
    p.add_argument("trace", help="trace file")
    p.set_defaults(func=cmd_verify_trace)

    p = sub.add_parser("enumerate", help="list nonzero normal forms up to a length")
    p.add_argument("--pres", required=True)
    p.add_argument("--maxlen", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAssociativeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ColoringConditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
