"""Command-line interface: ``dikernels <subcommand> ...``.

Exit status is 0 on success or a passing suite, 1 on a failing suite and 2 on
usage, format or precondition errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from .digraph6 import encode_digraph6, read_digraphs
from .enumeration import EnumClass, FilterSpec, class_table
from .errors import DigraphError
from .families import (
    antihole,
    biorient,
    circulant,
    complete_digraph,
    directed_cycle,
    path_edges,
    star_edges,
    three_cycle_extension,
    transitive_tournament,
)
from .kernels import all_kernels, find_kernel, is_cki
from .predicates import PREDICATE_NAMES, check
from .structure4t import classify_strong_4_transitive
from .verification import lemma_ids, run_lemma_suite, suite_ids, verify_theorem

FAMILIES = ("circulant", "cycle", "antihole", "tournament", "complete", "star", "path", "three-cycle-extension")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt_set(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _read_input(path: str | None):
    if path is None or path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    return list(read_digraphs(lines))


def _write(lines: Iterable[str], out=None):
    out = out or sys.stdout
    for ln in lines:
        out.write(ln + "\n")


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"gen --family {args.family} needs --{name.replace('_', '-')}")
    return value


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "circulant":
        d = circulant(_need(args, "n"), _need(args, "jumps"))
    elif fam == "cycle":
        d = directed_cycle(_need(args, "n"))
    elif fam == "antihole":
        d = antihole(_need(args, "n"))
    elif fam == "tournament":
        d = transitive_tournament(_need(args, "n"))
    elif fam == "complete":
        d = complete_digraph(_need(args, "n"))
    elif fam == "star":
        r = _need(args, "n")
        d = biorient(star_edges(r), r + 1)
    elif fam == "path":
        n = _need(args, "n")
        d = biorient(path_edges(n), n)
    else:
        sizes = _need(args, "sizes")
        if len(sizes) != 3:
            raise UsageError("--sizes takes three part sizes")
        d = three_cycle_extension(tuple(sizes))
    line = encode_digraph6(d)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(line + "\n")
    else:
        print(line)
    return 0


def cmd_check(args) -> int:
    ds = _read_input(args.input)
    _write("true" if check(d, args.pred) else "false" for d in ds)
    return 0


def cmd_kernel(args) -> int:
    for d in _read_input(args.input):
        if args.all:
            ks = all_kernels(d)
            print(" ".join(_fmt_set(k) for k in ks) if ks else "NONE")
        else:
            ans = find_kernel(d)
            print(_fmt_set(ans.witness) if ans.found else "NONE")
    return 0


def cmd_cki(args) -> int:
    _write(f"CKI: {'true' if is_cki(d) else 'false'}" for d in _read_input(args.input))
    return 0


def cmd_classify4t(args) -> int:
    for d in _read_input(args.input):
        label = classify_strong_4_transitive(d)
        if label is None:
            rec = {"label": None, "evidence": {}}
        else:
            rec = {"label": label.index, "evidence": label.evidence}
        print(json.dumps(rec, sort_keys=True))
    return 0


def cmd_enum(args) -> int:
    filt = FilterSpec.parse(args.filter, prune=not args.no_prune)
    table = class_table(args.n, EnumClass.parse(args.cls), filt, jobs=args.jobs)
    out = sys.stdout
    for d in table:
        out.write(encode_digraph6(d) + "\n")
    return 0


def cmd_verify(args) -> int:
    if args.list:
        _write(suite_ids() + [f"lemma:{x}" for x in lemma_ids()])
        return 0
    if args.suite is None:
        raise UsageError("verify needs --suite (or --list)")
    if args.suite.startswith("lemma:"):
        report = run_lemma_suite(args.suite[len("lemma:"):], args.max_n, literal=args.literal)
    else:
        report = verify_theorem(args.suite, args.max_n, jobs=args.jobs)
    print(report.to_json() if args.report == "json" else report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dikernels", description="Kernels and critical kernel imperfect digraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="emit a family member as digraph6")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--jumps", type=_ints)
    g.add_argument("--sizes", type=_ints, help="part sizes for three-cycle-extension")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="evaluate a predicate on each input digraph")
    c.add_argument("--pred", required=True, help="predicate id, e.g. " + ", ".join(PREDICATE_NAMES[:3]))
    c.add_argument("input", nargs="?", default="-")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("kernel", help="print a kernel (or all kernels) or NONE")
    k.add_argument("--all", action="store_true")
    k.add_argument("input", nargs="?", default="-")
    k.set_defaults(func=cmd_kernel)

    ck = sub.add_parser("cki", help="critical kernel imperfect verdict")
    ck.add_argument("input", nargs="?", default="-")
    ck.set_defaults(func=cmd_cki)

    cl = sub.add_parser("classify4t", help="family label of a strong 4-transitive digraph as JSON")
    cl.add_argument("input", nargs="?", default="-")
    cl.set_defaults(func=cmd_classify4t)

    e = sub.add_parser("enum", help="stream one digraph6 line per isomorphism class")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--class", dest="cls", required=True, choices=[c.name.lower() for c in EnumClass])
    e.add_argument("--filter", default=None, help="comma-separated predicate ids")
    e.add_argument("--no-prune", action="store_true", help="apply filters only at the final order")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", help="run a theorem suite or a lemma suite (lemma:<id>)")
    v.add_argument("--suite")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--report", choices=("json", "text"), default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--literal", action="store_true", help="lemma suites: check clauses as literally stated")
    v.add_argument("--list", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, DigraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
