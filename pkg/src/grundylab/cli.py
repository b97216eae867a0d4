"""Grundy numbers, related invariants and inequality checks on small graphs.

Exit status: 0 when nothing was violated, 1 when a violation or
counterexample was found, 2 on usage or input errors.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import families
from .formats import read_graphs, to_graph6
from .graph import GraphError, complement
from .invariants import chromatic_number, invariant_report
from .limits import SolverLimitError
from .verify import (
    ALL_CHECKS,
    enumerated_corpus,
    rows_as_csv,
    run_suite,
    search_counterexample,
)


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args):
    graphs = read_graphs(args.input)
    rows = []
    for g in graphs:
        row = {"graph6": to_graph6(g)}
        row.update(invariant_report(g, grundy=not args.no_grundy).to_dict())
        rows.append(row)
    if args.format == "json":
        text = "".join(json.dumps(r) + "\n" for r in rows)
    else:
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.output)
    return 0


def cmd_generate(args):
    params = {k: getattr(args, k) for k in ("n", "k", "t", "a", "b")}
    g, fam = families.build(args.family, **params)
    meta = dict(fam.to_json(), graph6=to_graph6(g))
    status = 0
    if args.check:
        report = invariant_report(g).to_dict()
        if "chi_complement" in fam.expected:
            report["chi_complement"] = chromatic_number(complement(g))[0]
        computed = {key: report[key] for key in fam.expected}
        meta["computed"] = computed
        meta["matches"] = computed == fam.expected
        status = 0 if meta["matches"] else 1
    meta_text = json.dumps(meta, sort_keys=True)
    if args.output:
        _emit(meta["graph6"] + "\n", args.output)
        sidecar = os.path.splitext(args.output)[0] + ".json"
        _emit(meta_text + "\n", sidecar)
    else:
        sys.stdout.write(meta["graph6"] + "\n" + meta_text + "\n")
    return status


def _suite_ids(text):
    if text == "all":
        return list(ALL_CHECKS)
    ids = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [i for i in ids if i not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown check id(s): {', '.join(unknown)}")
    return ids


def cmd_verify(args):
    checks = _suite_ids(args.suite)
    if args.corpus:
        graphs = read_graphs(args.corpus)
        corpus = f"file:{os.path.basename(args.corpus)}"
    elif args.max_n is not None:
        graphs = enumerated_corpus(args.max_n, min_n=args.min_n, connected=args.connected)
        corpus = f"enumerate:n={args.min_n}..{args.max_n}" + (":connected" if args.connected else "")
    else:
        raise ValueError("verify needs --max-n or --corpus")
    report = run_suite(graphs, checks, corpus=corpus, jobs=args.jobs)
    if args.format == "json":
        text = json.dumps(report.to_json(timing=args.timing), indent=2) + "\n"
    else:
        text = rows_as_csv(report.results)
    _emit(text, args.output)
    print(
        f"{report.graphs} graphs x {len(checks)} checks: "
        f"{report.violation_count} violations ({report.elapsed:.2f}s)",
        file=sys.stderr,
    )
    return 1 if report.violation_count else 0


def cmd_search(args):
    found = search_counterexample(args.conjecture, args.max_n)
    if found is None:
        print(json.dumps({"conjecture": args.conjecture, "max_n": args.max_n, "witness": None}))
        return 0
    print(json.dumps({"conjecture": args.conjecture, "max_n": args.max_n, "witness": found.__dict__}))
    return 1


def build_parser():
    parser = argparse.ArgumentParser(prog="grundylab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report per input graph")
    p.add_argument("input", help="graph6 file, edge-list file, or - for stdin")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--no-grundy", action="store_true", help="skip the Grundy and achromatic numbers")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("generate", help="construct a family member")
    p.add_argument("--family", required=True, choices=sorted(families.FAMILIES))
    for name in ("n", "k", "t", "a", "b"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--check", action="store_true", help="compare computed invariants with expected ones")
    p.add_argument("-o", "--output", help="graph6 output; metadata goes to a .json sidecar")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    p.add_argument("--suite", default="all", help="'all' or comma-separated check ids")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--corpus", help="graph6 or edge-list file instead of enumeration")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in the JSON report")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive counterexample search")
    p.add_argument("--conjecture", required=True, choices=("conj1", "conj2"))
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, SolverLimitError, ValueError, OSError) as exc:
        print(f"grundylab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
