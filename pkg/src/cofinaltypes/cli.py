"""Command-line front end: enumeration, codec, diagrams and self-checks.

Exit codes: 0 on success, 1 on usage or expression errors, 2 when a
consistency check fails.  All output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures
from .codec import decode, encode
from .dyck import DyckVector, catalan, covers, enumerate_paths, rank, render_steps, tukey_precedes
from .intervals import covering_pairs, interval_table
from .order import Comparison, compare, oracle_compare, powerset_embed_check
from .typeexpr import ParseError, canonicalize, enumerate_types, format_type, parse

_VERDICT_WORDS = {
    Comparison.EQUIVALENT: "EQUIVALENT",
    Comparison.STRICTLY_BELOW: "BELOW",
    Comparison.STRICTLY_ABOVE: "ABOVE",
    Comparison.INCOMPARABLE: "INCOMPARABLE",
}


class _Parser(argparse.ArgumentParser):
    # spec'd exit codes: usage errors are 1, not argparse's default 2
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bounded(name, bound):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer")
        if not 0 <= value <= bound:
            raise argparse.ArgumentTypeError(f"need 0 <= {name} <= {bound}")
        return value

    return convert


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args) -> int:
    records = []
    for t in enumerate_types(args.level):
        v = encode(t)
        records.append((format_type(t, args.unicode), v, rank(v), render_steps(v)))
    if args.format == "json":
        payload = [
            {"type": s, "heights": list(v.heights), "rank": r, "steps": steps}
            for s, v, r, steps in records
        ]
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [f"{s}  {v}  rank={r}  {steps}" for s, v, r, steps in records]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_encode(args) -> int:
    t = canonicalize(parse(args.expr, args.level))
    v = encode(t)
    if args.format == "json":
        payload = {
            "type": format_type(t, args.unicode),
            "heights": list(v.heights),
            "steps": render_steps(v),
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, f"{format_type(t, args.unicode)}  {v}  {render_steps(v)}\n")
    return 0


def _cmd_decode(args) -> int:
    text = args.heights.strip().strip("[]")
    try:
        heights = tuple(int(part) for part in text.split(",")) if text else ()
        v = DyckVector(heights)
    except ValueError as exc:
        raise ParseError(str(exc))
    _emit(args, format_type(decode(v), args.unicode) + "\n")
    return 0


def _cmd_compare(args) -> int:
    a = canonicalize(parse(args.expr_a, args.level))
    b = canonicalize(parse(args.expr_b, args.level))
    verdict = compare(a, b)
    lines = [
        _VERDICT_WORDS[verdict],
        f"A = {format_type(a, args.unicode)}  {encode(a)}",
        f"B = {format_type(b, args.unicode)}  {encode(b)}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _dot(n: int, unicode: bool) -> str:
    lines = [f"digraph hasse_level_{n} {{", "  rankdir=BT;", "  node [shape=box];"]
    for t in enumerate_types(n):
        lines.append(f'  "{format_type(t, unicode)}";')
    for g, h, k, l in covering_pairs(n):
        attrs = f'label="k={k},l={l}"'
        if l > 0:
            attrs += ", style=dashed"
        lines.append(
            f'  "{format_type(g, unicode)}" -> "{format_type(h, unicode)}" [{attrs}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tikz(n: int, unicode: bool) -> str:
    lines = [
        f"% {len(enumerate_types(n))} canonical types at level {n} as "
        f"{n + 2}-grid lattice paths",
        "% drawing code: comma-separated step word, 0 = right, 1 = up",
    ]
    for t in enumerate_types(n):
        steps = render_steps(encode(t))
        lines.append(
            f"\\catalannumber{{0,0}}{{{n + 2}}}{{{steps}}} % {format_type(t, unicode)}"
        )
    return "\n".join(lines) + "\n"


def _cmd_hasse(args) -> int:
    text = _tikz(args.level, args.unicode) if args.tikz else _dot(args.level, args.unicode)
    _emit(args, text)
    return 0


def _cmd_intervals(args) -> int:
    rows = interval_table(args.level)
    if args.format == "json":
        _emit(args, json.dumps([row.as_dict() for row in rows], indent=2) + "\n")
        return 0
    lines = []
    for row in rows:
        base = (
            f"{format_type(row.lower, args.unicode)} -> "
            f"{format_type(row.upper, args.unicode)}  k={row.level} l={row.diag}  "
            f"{row.classification.kind}"
        )
        if row.classification.hypothesis is not None:
            base += f"  [{row.classification.hypothesis}]"
        lines.append(base)
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_catalan(args) -> int:
    _emit(args, f"{catalan(args.number)}\n")
    return 0


def _cmd_powerset_check(args) -> int:
    ok = powerset_embed_check(args.level)
    _emit(args, f"powerset embedding (n={args.level}): {'ok' if ok else 'FAILED'}\n")
    return 0 if ok else 2


def _selfcheck_suites(n: int):
    def catalan_counts() -> bool:
        return all(
            len(enumerate_types(m)) == catalan(m + 2) == len(enumerate_paths(m + 2))
            for m in range(n + 1)
        )

    def codec_roundtrip() -> bool:
        for m in range(n + 1):
            if any(decode(encode(t)) != t for t in enumerate_types(m)):
                return False
            if any(encode(decode(p)) != p for p in enumerate_paths(m + 2)):
                return False
        return True

    def order_laws() -> bool:
        types = enumerate_types(n)
        below = {
            a: {b for b in types if compare(a, b) == Comparison.STRICTLY_BELOW}
            for a in types
        }
        for a in types:
            for b in types:
                verdict = compare(a, b)
                if (verdict == Comparison.EQUIVALENT) != (a == b):
                    return False
                dual = compare(b, a)
                pairs = {
                    (Comparison.EQUIVALENT, Comparison.EQUIVALENT),
                    (Comparison.STRICTLY_BELOW, Comparison.STRICTLY_ABOVE),
                    (Comparison.STRICTLY_ABOVE, Comparison.STRICTLY_BELOW),
                    (Comparison.INCOMPARABLE, Comparison.INCOMPARABLE),
                }
                if (verdict, dual) not in pairs:
                    return False
        return all(below[b] <= below[a] for a in types for b in below[a])

    def oracle_agreement() -> bool:
        types = enumerate_types(n)
        return all(compare(a, b) == oracle_compare(a, b) for a in types for b in types)

    def path_laws() -> bool:
        paths = enumerate_paths(n + 2)
        below = {
            a: {b for b in paths if tukey_precedes(a, b)} for a in paths
        }
        if any(a in below[a] for a in paths):
            return False
        if any(a in below[b] for a in paths for b in below[a]):
            return False
        if not all(below[b] <= below[a] for a in paths for b in below[a]):
            return False
        # covers must be exactly the transitive reduction
        for a in paths:
            reachable_indirect = set().union(*(below[c] for c in below[a])) if below[a] else set()
            if set(covers(a)) != below[a] - reachable_indirect:
                return False
        return True

    def powerset() -> bool:
        return powerset_embed_check(n)

    return [
        ("catalan-counts", catalan_counts),
        ("codec-roundtrip", codec_roundtrip),
        ("order-laws", order_laws),
        ("oracle-agreement", oracle_agreement),
        ("path-laws", path_laws),
        ("powerset-embedding", powerset),
    ]


def _cmd_selfcheck(args) -> int:
    n = args.level
    ok = True
    out = []
    for name, suite in _selfcheck_suites(n):
        passed = suite()
        ok = ok and passed
        out.append(f"{name}: {'pass' if passed else 'fail'}")
    if n >= 2:
        codes = fixtures.figure2_codes()
        matched = sum(
            1
            for t in enumerate_types(2)
            if codes.get(format_type(t)) == render_steps(encode(t))
        )
        ok = ok and matched == len(codes) == 14
        out.append(f"figure2: {matched}/{len(codes)} matched")

        expected = {
            (e["lower"], e["upper"], e["dashed"]) for e in fixtures.figure3_edges()
        }
        actual = {
            (format_type(g), format_type(h), l > 0) for g, h, k, l in covering_pairs(2)
        }
        edge_matched = len(expected & actual)
        ok = ok and expected == actual
        out.append(f"figure3: {edge_matched}/{len(expected)} edges matched")
    out.append(f"selfcheck: {'ok' if ok else 'FAILED'}")
    _emit(args, "\n".join(out) + "\n")
    return 0 if ok else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="cofinaltypes")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("enumerate", _cmd_enumerate, help="list the canonical types of a level")
    p.add_argument("-n", dest="level", type=_bounded("n", 8), required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--unicode", action="store_true")
    p.add_argument("-o", "--output")

    p = add("encode", _cmd_encode, help="encode a product as a lattice path")
    p.add_argument("expr")
    p.add_argument("-n", dest="level", type=_bounded("n", 8), required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--unicode", action="store_true")
    p.add_argument("-o", "--output")

    p = add("decode", _cmd_decode, help="decode a height vector, e.g. 1,1,3")
    p.add_argument("heights")
    p.add_argument("--unicode", action="store_true")
    p.add_argument("-o", "--output")

    p = add("compare", _cmd_compare, help="Tukey-compare two product expressions")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("-n", dest="level", type=_bounded("n", 8), required=True)
    p.add_argument("--unicode", action="store_true")
    p.add_argument("-o", "--output")

    p = add("hasse", _cmd_hasse, help="emit the Hasse diagram (DOT or TikZ)")
    p.add_argument("-n", dest="level", type=_bounded("n", 6), required=True)
    style = p.add_mutually_exclusive_group()
    style.add_argument("--dot", action="store_true", default=True)
    style.add_argument("--tikz", action="store_true")
    p.add_argument("--unicode", action="store_true")
    p.add_argument("-o", "--output")

    p = add("intervals", _cmd_intervals, help="classify all covering intervals")
    p.add_argument("-n", dest="level", type=_bounded("n", 8), required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--unicode", action="store_true")
    p.add_argument("-o", "--output")

    p = add("catalan", _cmd_catalan, help="print a Catalan number")
    p.add_argument("number", type=_bounded("N", 30))
    p.add_argument("-o", "--output")

    p = add("powerset-check", _cmd_powerset_check, help="check the powerset embedding")
    p.add_argument("-n", dest="level", type=_bounded("n", 6), required=True)
    p.add_argument("-o", "--output")

    p = add("selfcheck", _cmd_selfcheck, help="run the consistency suites")
    p.add_argument("-n", dest="level", type=_bounded("n", 4), required=True)
    p.add_argument("-o", "--output")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
