"""Command-line front end.

Exit codes: 0 success, 1 parse/file error, 2 precondition violation,
3 resource limit, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .classify import ComponentClass, catalog, classify_graph
from .errors import CosetLimitExceeded, GraphFormatError, PreconditionError
from .graph import INF, CoxeterGraph, parse, serialize
from .invariants import abelianization_rank, analyze, group_order
from .oracles import DEFAULT_MAX_COSETS, snf_abelianization, todd_coxeter
from .profinite import compare_profinite
from .quotients import find_infinite_proper_quotient

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PRECONDITION, f"{self.prog}: error: {message}\n")


def _read_graph(path: str) -> CoxeterGraph:
    if path == "-":
        text = sys.stdin.buffer.read().decode("utf-8")
    else:
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
    return parse(text)


def _dump(obj, args) -> str:
    return json.dumps(obj, indent=2 if args.pretty else None, sort_keys=False)


def _cmd_analyze(args, out):
    report = analyze(_read_graph(args.file))
    data = report.to_json()
    if args.json:
        out.write(_dump(data, args) + "\n")
        return EXIT_OK
    data["classification"] = " ".join(data["classification"]) or "(empty)"
    data["direct_decomposition"] = "; ".join(
        d["kind"] + (f" [{', '.join(d['factors'])}]" if d["factors"] else "")
        for d in data["direct_decomposition"]) or "(empty)"
    width = max(len(k) for k in data)
    for k, v in data.items():
        if isinstance(v, bool):
            v = "yes" if v else "no"
        out.write(f"{k.ljust(width)}  {v}\n")
    return EXIT_OK


def _cmd_classify(args, out):
    classes = [str(t) for t in classify_graph(_read_graph(args.file))]
    if args.json:
        out.write(_dump({"classification": classes}, args) + "\n")
    else:
        out.write("".join(c + "\n" for c in classes))
    return EXIT_OK


def _cmd_compare(args, out):
    verdict = compare_profinite(_read_graph(args.file1), _read_graph(args.file2))
    data = verdict.to_json()
    if args.json:
        out.write(_dump(data, args) + "\n")
    else:
        tag = f" {data['invariant']}" if data["invariant"] else ""
        out.write(f"{data['verdict']}{tag}: {data['reason']}\n")
    return EXIT_OK


def _cmd_quotients(args, out):
    w = find_infinite_proper_quotient(_read_graph(args.file))
    if args.json:
        out.write(_dump(None if w is None else w.to_json(), args) + "\n")
    elif w is None:
        out.write("none found\n")
    else:
        data = w.to_json()
        out.write(f"construction  {data['construction']}\n")
        out.write(f"proper        {'yes' if w.proper else 'no'}\n")
        out.write(f"infinite      {'yes' if w.target_infinite else 'no'}\n")
        out.write("map           " + " ".join(f"{k}->{v}" for k, v in data["map"].items()) + "\n")
        out.write("target\n")
        out.write("".join("  " + line + "\n" for line in data["target"].splitlines()))
    return EXIT_OK


def _cmd_catalog(args, out):
    t = ComponentClass.parse(args.type)
    text = serialize(catalog(t))
    if args.json:
        out.write(_dump({"type": str(t), "graph": text}, args) + "\n")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_verify(args, out):
    g = _read_graph(args.file)
    checks = []
    order = group_order(g)
    if order == INF:
        checks.append(("order", "inf", "skipped", "SKIPPED"))
    else:
        oracle = todd_coxeter(g, args.max_cosets)
        checks.append(("order", str(order), str(oracle), "MATCH" if oracle == order else "MISMATCH"))
    k = abelianization_rank(g)
    inv = snf_abelianization(g)
    expected = (2,) * k
    ok = inv.torsion == expected and inv.free_rank == 0
    fmt = lambda t, r: " x ".join([f"Z/{d}" for d in t] + (["Z"] * r)) or "1"  # noqa: E731
    checks.append(("abelianization", fmt(expected, 0), fmt(inv.torsion, inv.free_rank),
                   "MATCH" if ok else "MISMATCH"))
    if args.json:
        rows = [dict(zip(("check", "closed_form", "oracle", "status"), c)) for c in checks]
        out.write(_dump({"checks": rows}, args) + "\n")
    else:
        for name, cf, orc, status in checks:
            out.write(f"{name}: closed-form {cf}, oracle {orc}, {status}\n")
    return EXIT_MISMATCH if any(c[3] == "MISMATCH" for c in checks) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coxgraph", description="Analyze Coxeter graphs.")

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--pretty", action="store_true", help="indent JSON output")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("analyze", help="group-theoretic report")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", help="catalog type of each component")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("compare", help="profinite comparison of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    common(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("quotients", help="search for an infinite proper quotient")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_quotients)

    p = sub.add_parser("catalog", help="print a catalog graph, e.g. tB:3 or E8")
    p.add_argument("type")
    common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="check closed forms against brute-force oracles")
    p.add_argument("file")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    common(p)
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with contextlib.redirect_stderr(stderr):
            args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PRECONDITION
    try:
        return args.func(args, stdout)
    except (OSError, UnicodeDecodeError, GraphFormatError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except CosetLimitExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_LIMIT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
