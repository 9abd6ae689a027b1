"""Command-line front end: ``segrebundles <command> [options]``.

Each command calls one library function and renders the result as text,
JSON or TSV. Exit status is 0 on success, 1 for integrality or internal
failures and 2 for unsupported input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .bundles import ChernData, IntegralityError, chern_character, euler_char_hrr, euler_char_paper, kunneth_h, whitney_sum
from .classifier import ClassificationEntry, UnsupportedC1Error, classify_any, verify_tables
from .curves import (
    CurveData,
    UnsupportedRegimeError,
    ci_invariants,
    ci_rank_range,
    h0_twisted_canonical,
    segre_degree,
    serre_rank_range,
    twisted_canonical_degree,
)
from .descriptions import LineBundle, TangentTwist
from .ring import ParseError, RingSpec, parse_element

EXIT_OK, EXIT_FAIL, EXIT_UNSUPPORTED = 0, 1, 2


def _int_tuple(n: int | None = None):
    def parse(text: str) -> tuple[int, ...]:
        try:
            vals = tuple(int(v) for v in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
        if n is not None and len(vals) != n:
            raise argparse.ArgumentTypeError(f"expected {n} integers, got {text!r}")
        return vals

    return parse


_SUMMAND = re.compile(r"^\s*(?:O\((-?\d+),(-?\d+)\)|T(?:\((-?\d+),(-?\d+)\))?)\s*$")


def parse_summand(text: str):
    """``O(a,b)`` or ``T`` / ``T(s1,s2)`` for pi2*(TP2(-1))(s1,s2)."""
    m = _SUMMAND.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"bad summand {text!r}; use O(a,b), T or T(s1,s2)")
    if m.group(1) is not None:
        return LineBundle(int(m.group(1)), int(m.group(2)))
    return TangentTwist(int(m.group(3) or 0), int(m.group(4) or 0))


# ---------------------------------------------------------------- rendering


def _tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    out = ["\t".join(cols)]
    for row in rows:
        out.append("\t".join(json.dumps(row[c]) if isinstance(row[c], (list, dict)) else str(row[c]) for c in cols))
    return "\n".join(out)


def _emit(fmt: str, records: list[dict], text_lines: list[str]):
    if fmt == "json":
        print(json.dumps(records[0] if len(records) == 1 else records, indent=2))
    elif fmt == "tsv":
        print(_tsv(records))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------- commands


def cmd_ring(args) -> int:
    spec = RingSpec(tuple(args.factors))
    value = parse_element(args.expr, spec)
    rendered = str(value)
    _emit(args.format, [{"factors": list(spec.factors), "expr": args.expr, "value": rendered,
                         "integral": str(value.integrate())}], [rendered])
    return EXIT_OK


def cmd_chern(args) -> int:
    data = whitney_sum(*(m.chern() for m in args.summands))
    ch = chern_character(data)
    label = " + ".join(m.label for m in args.summands)
    record = {"bundle": label, **data.to_dict(), "ch": str(ch), "chi": euler_char_hrr(data)}
    _emit(args.format, [record], [str(data), f"ch={ch}", f"chi={record['chi']}"])
    return EXIT_OK


def cmd_chi(args) -> int:
    data = ChernData(args.rank, args.c1, args.c2, args.c3)
    closed = euler_char_paper(data.rank, *data.c1, *data.c2, data.c3)
    hrr = euler_char_hrr(data)
    if closed != hrr:
        print(f"closed form {closed} disagrees with HRR {hrr}", file=sys.stderr)
        return EXIT_FAIL
    _emit(args.format, [{**data.to_dict(), "chi_closed_form": closed, "chi_hrr": hrr}],
          [f"chi={hrr} (closed form {closed}, HRR {hrr})"])
    return EXIT_OK


def cmd_cohomology(args) -> int:
    a, b = args.a, args.b
    hs = [kunneth_h(a, b, i) for i in range(4)]
    _emit(args.format, [{"a": a, "b": b, "h": hs}],
          [" ".join(f"h{i}(O({a},{b}))={h}" for i, h in enumerate(hs))])
    return EXIT_OK


def cmd_ci(args) -> int:
    a, b = args.a, args.b
    curve = ci_invariants(a, b)
    ranks = ci_rank_range(a, b)
    record = {"type": [a, b], **curve.to_dict(), "degree": segre_degree(curve), "ranks": [ranks.r_min, ranks.r_max]}
    _emit(args.format, [record], [f"{curve} degree={record['degree']} r={ranks}"])
    return EXIT_OK


def cmd_curve(args) -> int:
    curve = CurveData(args.s, args.bidegree, args.genus)
    u, v = 2 - args.c1[0], 3 - args.c1[1]
    deg = twisted_canonical_degree(curve, u, v)
    ranks = serre_rank_range(curve, args.c1, canonical=args.canonical)
    try:
        h0 = h0_twisted_canonical(curve, u, v, trivial=args.canonical)
    except UnsupportedRegimeError:
        h0 = None
    record = {**curve.to_dict(), "c1": list(args.c1), "degree": segre_degree(curve),
              "twisted_canonical_degree": deg, "h0": h0,
              "ranks": None if ranks.is_empty else [ranks.r_min, ranks.r_max]}
    _emit(args.format, [record], [
        f"{curve} degree={record['degree']} deg_omega_twist={deg} h0={'?' if h0 is None else h0} r={ranks}"
    ])
    return EXIT_OK


def render_entries(entries: list[ClassificationEntry], fmt: str, as_c2: bool = False) -> str:
    if fmt == "json":
        return json.dumps([e.to_dict(as_c2) for e in entries], indent=2)
    if fmt == "tsv":
        return _tsv([
            {**{k: v for k, v in e.to_dict(as_c2).items() if k != "descriptions"}, "descriptions": e.description_text()}
            for e in entries
        ])
    return "\n".join(e.text_line(as_c2) for e in entries)


def cmd_classify(args) -> int:
    entries = classify_any(args.c1)
    print(render_entries(entries, args.format, args.as_c2))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_tables()
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif args.format == "tsv":
        print(_tsv([line.to_dict() for line in report.lines]))
    else:
        print(report.render())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segrebundles", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    parser.add_argument("--factors", type=_int_tuple(), default=(1, 2),
                        help="ring factors n1,n2,... for the ring command (default 1,2)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="evaluate an expression in the Chow ring")
    p.add_argument("expr")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("chern", help="Chern data of a direct sum, e.g. 'O(1,0)' 'T'")
    p.add_argument("summands", nargs="+", type=parse_summand)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("chi", help="Euler characteristic by closed form and by HRR")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1", type=_int_tuple(2), default=(0, 0))
    p.add_argument("--c2", type=_int_tuple(2), default=(0, 0))
    p.add_argument("--c3", type=int, default=0)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("cohomology", help="h^i(O_X(a,b)) for i = 0..3")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("ci", help="complete intersection of two (a,b) divisors")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("curve", help="invariants and Serre rank range of a curve")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--bidegree", type=_int_tuple(2), required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--c1", type=_int_tuple(2), required=True)
    p.add_argument("--canonical", action="store_true",
                   help="omega_C((2,3) - c1) is trivial")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("classify", help="classification table for a first Chern class")
    p.add_argument("--c1", type=_int_tuple(2), required=True)
    p.add_argument("--as-c2", action="store_true", help="show (e2,e1) = c2 coordinates instead of bidegree")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check the classification against the expected tables")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IntegralityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ParseError, UnsupportedC1Error, UnsupportedRegimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
