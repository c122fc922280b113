"""Command-line front end.

    absorb classify <ring-spec> [--phi LIST] [--powers LIST] [--json PATH] [--csv PATH]
    absorb verify   [<ring-spec> ...] [--default-corpus] [--theorem ID] [--jobs N] ...
    absorb search   <expr> [--zn-max N] [--include-products] [--json PATH]

Reports are deterministic: canonical orderings everywhere, no timestamps
(wall time goes to stderr with --timing).  Exit codes: 0 success / all
pass, 1 verification failure, 2 usage or parse error, 3 resource bound
exceeded.  ABSORB_JOBS overrides --jobs when set.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from absorb import __version__
from absorb.classify import classify_ideal, witness_replays
from absorb.errors import AbsorbError, SpecSyntaxError, TooLargeError
from absorb.ideals import enumerate_ideals
from absorb.phimaps import parse_phi_spec
from absorb.specparse import parse_predicate_expr, parse_ring_spec
from absorb.theorems import THEOREM_IDS, default_corpus, run_corpus

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

#: flags usable in search expressions
SEARCH_FLAGS = (
    "prime",
    "weakly_prime",
    "almost_prime",
    "two_absorbing",
    "weakly_two_absorbing",
    "one_absorbing",
    "one_absorbing_prime",
    "weakly_one_absorbing",
    "w_one_absorbing",
    "almost_one_absorbing",
)


def _emit(args, report: dict) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.json == "-" or (args.json is None and args.csv is None):
        sys.stdout.write(text)
    elif args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    if args.csv:
        rows = _csv_rows(report)
        if args.csv == "-":
            _write_csv(sys.stdout, rows)
        else:
            with open(args.csv, "w", newline="") as fh:
                _write_csv(fh, rows)


def _write_csv(fh, rows: list[dict]) -> None:
    if not rows:
        fh.write("")
        return
    writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)


def _csv_rows(report: dict) -> list[dict]:
    """Flattened projection: one row per (ideal, flag) plus one per verdict."""
    rows = []
    for ideal in report.get("ideals", ()):
        for flag, value in ideal["flags"].items():
            witness = ideal["witnesses"].get(flag)
            rows.append(
                {
                    "ring": report.get("ring", ""),
                    "ideal": " ".join(str(g) for g in ideal["gens"]),
                    "flag": flag,
                    "value": "" if value is None else str(value).lower(),
                    "witness": " ".join(str(e) for e in witness) if witness else "",
                }
            )
    for v in report.get("verdicts", ()):
        rows.append(
            {
                "ring": v["ring"],
                "ideal": "",
                "flag": v["theorem"],
                "value": v["status"],
                "witness": json.dumps(v["counterexample"]) if v["counterexample"] else "",
            }
        )
    return rows


def _ideal_rows(ring, phis, powers):
    rows = []
    for ideal in enumerate_ideals(ring):
        if not ideal.is_proper:
            continue
        rep = classify_ideal(ideal, phis, powers)
        rows.append(
            {
                "gens": sorted(ideal.generators),
                "elements": list(ideal.sorted_elements),
                "flags": dict(sorted(rep.flags.items())),
                "witnesses": {
                    k: list(w.elements) for k, w in sorted(rep.witnesses.items())
                },
            }
        )
    return rows


def cmd_classify(args) -> int:
    ring = parse_ring_spec(args.spec)
    phis = tuple(parse_phi_spec(p) for p in args.phi.split(",")) if args.phi else ()
    powers = tuple(int(m) for m in args.powers.split(",")) if args.powers else (2, 3)
    report = {
        "version": __version__,
        "ring": ring.spec_string(),
        "ideals": _ideal_rows(ring, phis, powers),
        "verdicts": [],
    }
    _emit(args, report)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.default_corpus:
        specs = default_corpus()
    elif args.specs:
        specs = [parse_ring_spec(s).spec_string() for s in args.specs]
    else:
        raise SpecSyntaxError("verify needs ring specs or --default-corpus")
    theorems = [args.theorem] if args.theorem else None
    jobs = int(os.environ.get("ABSORB_JOBS", args.jobs))
    verdicts = run_corpus(specs, theorems, jobs=jobs)
    report = {
        "version": __version__,
        "ring": specs[0] if len(specs) == 1 else f"corpus({len(specs)} rings)",
        "ideals": [],
        "verdicts": [v.as_dict() for v in verdicts],
    }
    _emit(args, report)
    failures = [v for v in verdicts if v.status == "fail"]
    if failures:
        for v in failures:
            print(
                f"FAIL {v.theorem} on {v.ring_spec}: {json.dumps(v.counterexample)}",
                file=sys.stderr,
            )
        return EXIT_FAIL
    return EXIT_OK


def _search_space(zn_max: int, include_products: bool):
    specs = [f"Zn:{n}" for n in range(2, zn_max + 1)]
    if include_products:
        specs += [s for s in default_corpus() if s.startswith("prod(")]
    rings = [parse_ring_spec(s) for s in specs]
    rings.sort(key=lambda r: (r.order, r.spec_string()))
    return rings


def cmd_search(args) -> int:
    predicate = parse_predicate_expr(args.expr, SEARCH_FLAGS)
    searched = 0
    for ring in _search_space(args.zn_max, args.include_products):
        try:
            ideals = enumerate_ideals(ring)
        except TooLargeError:
            continue
        for ideal in ideals:
            if not ideal.is_proper:
                continue
            rep = classify_ideal(ideal)
            flags = dict(rep.flags)
            flags["one_absorbing"] = flags["one_absorbing_prime"]
            searched += 1
            if predicate(flags):
                for name, wit in rep.witnesses.items():
                    if not witness_replays(ideal, wit):
                        raise AbsorbError(
                            f"witness for {name} failed to replay; refusing to report"
                        )
                report = {
                    "version": __version__,
                    "query": args.expr,
                    "searched": searched,
                    "match": {
                        "ring": ring.spec_string(),
                        "gens": sorted(ideal.generators),
                        "elements": list(ideal.sorted_elements),
                        "flags": dict(sorted(flags.items())),
                        "witnesses": {
                            k: list(w.elements)
                            for k, w in sorted(rep.witnesses.items())
                        },
                    },
                }
                _emit(args, report)
                return EXIT_OK
    report = {
        "version": __version__,
        "query": args.expr,
        "searched": searched,
        "match": None,
    }
    _emit(args, report)
    print(f"search exhausted after {searched} ideals", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="absorb",
        description="classify absorbing prime ideals of finite commutative rings",
    )
    parser.add_argument("--version", action="version", version=f"absorb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full predicate report for one ring")
    p.add_argument("spec", help="ring spec, e.g. Zn:18 or prod(Zn:2,Zn:3)")
    p.add_argument("--phi", default="empty,zero,pow:2,pow:3,omega",
                   help="comma-separated map specs (default: the standard five)")
    p.add_argument("--powers", default="2,3",
                   help="exponents for the n-almost flags (default 2,3)")
    _common_output(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run theorem verifiers")
    p.add_argument("specs", nargs="*", help="ring specs")
    p.add_argument("--default-corpus", action="store_true",
                   help="use the built-in ~90 ring corpus")
    p.add_argument("--theorem", choices=THEOREM_IDS, help="run a single verifier")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel worker processes (ABSORB_JOBS overrides)")
    _common_output(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="smallest ideal satisfying a flag expression")
    p.add_argument("expr", help="e.g. \"weakly_one_absorbing & !one_absorbing\"")
    p.add_argument("--zn-max", type=int, default=60, dest="zn_max",
                   help="largest residue-ring modulus to search (default 60)")
    p.add_argument("--include-products", action="store_true",
                   help="also search the corpus product rings")
    _common_output(p)
    p.set_defaults(func=cmd_search)
    return parser


def _common_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' = stdout)")
    p.add_argument("--csv", metavar="PATH", help="also write the flattened CSV projection")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse handles --help/--version (code 0) and usage errors (code 2)
        return EXIT_OK if not exc.code else EXIT_USAGE

    started = time.perf_counter()
    try:
        code = args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except AbsorbError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
