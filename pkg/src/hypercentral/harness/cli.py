"""Command line entry point: ``python3 -m hypercentral <command> ...``.

Exit status: 0 holds / success, 1 a failure or violation was found, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .. import __version__
from ..errors import RingError
from ..properties import PROPERTY_IDS, check_property, parse_property, replay_witness
from ..ring import DEFAULT_SIZE_CAP, cyclic_ring
from ..verdict import Status, Verdict
from .catalog import DEFAULT_CATALOG_CAP, build_catalog
from .examples import EXAMPLE_IDS, paper_example
from .report import Report, emit_report, make_report
from .specs import ring_from_spec
from .suite import SUITE_IDS, construction_findings, run_implication_suite, violations

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypercentral", description="Decide ring-class properties of finite rings.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="decide one property of one ring")
    c.add_argument("--ring", required=True, help="ring spec, e.g. Z6, Tn(GF(2),2), @ring.json")
    c.add_argument("--property", required=True, help=f"one of: {', '.join(PROPERTY_IDS)}")
    c.add_argument("--json", action="store_true", help="print the report as JSON")
    c.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP, help="size cap for constructions")

    cat = sub.add_parser("catalog", help="work with the ring catalog")
    catsub = cat.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = catsub.add_parser("run", help="run a suite over the catalog")
    run.add_argument("--suite", choices=("implications", "constructions", "all"), default="implications")
    run.add_argument("--out", default=None, help="write the JSON document here instead of stdout")
    run.add_argument("--format", choices=("json", "text"), default="json")
    run.add_argument("--cap", type=int, default=DEFAULT_CATALOG_CAP, help="catalog size cap")
    run.add_argument("--add", action="append", default=[], metavar="SPEC", help="extra ring spec (repeatable)")
    run.add_argument("--check", action="append", default=None, choices=SUITE_IDS, help="restrict to these checks")
    lst = catsub.add_parser("list", help="list catalog entries")
    lst.add_argument("--cap", type=int, default=DEFAULT_CATALOG_CAP)
    lst.add_argument("--add", action="append", default=[], metavar="SPEC")

    ex = sub.add_parser("paper", help="run a worked example")
    ex.add_argument("--example", required=True, choices=EXAMPLE_IDS)
    ex.add_argument("-N", type=int, default=16, help="exponent bound for the integer matrix example")
    ex.add_argument("--json", action="store_true")

    rp = sub.add_parser("replay", help="re-check every failing witness in a report file")
    rp.add_argument("--report", required=True)
    rp.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)
    return p


def cmd_check(args) -> int:
    try:
        pid, params = parse_property(args.property)
    except KeyError as exc:
        sys.stderr.write(f"error: {exc.args[0]}\n")
        return EXIT_USAGE
    R = ring_from_spec(args.ring, args.cap)
    t0 = time.perf_counter()
    v = check_property(R, pid, **params)
    rep = make_report(R, args.ring, args.property, pid, v, (time.perf_counter() - t0) * 1000)
    emit_report([rep], "json" if args.json else "text")
    return EXIT_FAIL if v.failed else EXIT_OK


def cmd_catalog(args) -> int:
    cat = build_catalog(args.cap, args.add)
    if args.action == "list":
        for e in cat:
            print(f"{e.name}\t{e.ring.size}\t{'unital' if e.ring.is_unital else 'non-unital'}")
        for name, why in cat.skipped:
            print(f"{name}\tskipped\t{why}")
        return EXIT_OK
    reports: list[Report] = []
    findings = []
    if args.suite in ("implications", "all"):
        reports = run_implication_suite(cat, args.check)
    if args.suite in ("constructions", "all"):
        _, found = construction_findings(cyclic_ring(4), (2, 3))
        findings = [f.to_dict() for f in found]
    extra = {
        "findings": findings,
        "skipped": [{"ring": n, "reason": why} for n, why in cat.skipped],
    }
    if args.format == "json":
        emit_report(reports, "json", args.out, extra=extra)
    else:
        emit_report(reports, "text", args.out)
    bad = violations(reports)
    for r in bad:
        sys.stderr.write(f"violation: {r.ring} {r.check}: {r.trace}\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_paper(args) -> int:
    rep = paper_example(args.example, N=args.N)
    if args.json:
        emit_report([rep], "json")
    else:
        print(f"{args.example}: {rep.verdict}  ({rep.trace})")
        for a in rep.detail.get("assertions", []):
            mark = "ok  " if a["passed"] else "FAIL"
            value = "" if a["value"] is None else f"  = {a['value']}"
            print(f"  {mark} {a['name']}{value}")
        for f in rep.detail.get("findings", []):
            print(f"  finding ({f['severity']}): {f['subject']}: {f['observed']}")
    return EXIT_OK if rep.verdict == Status.HOLDS.value else EXIT_FAIL


def _replay_target(rep: Report) -> str | None:
    """Property whose definition a failing report's witness violates."""
    if rep.check in PROPERTY_IDS or rep.check.startswith("armendariz_bounded"):
        return rep.check
    prop = rep.property or ""
    if prop.startswith("equiv:"):
        prop = rep.detail.get("failed", "")
    if prop in PROPERTY_IDS or prop.startswith("armendariz_bounded"):
        return prop
    return None


def replay_reports(reports: list[Report], cap: int = DEFAULT_SIZE_CAP) -> list[tuple[Report, bool | None]]:
    """(report, replayed) for each failing report; None when no definition applies."""
    rings = {}
    out = []
    for rep in reports:
        if rep.verdict != Status.FAILS.value:
            continue
        target = _replay_target(rep)
        if target is None or not rep.witness:
            out.append((rep, None))
            continue
        if rep.ring not in rings:
            rings[rep.ring] = ring_from_spec(rep.ring, cap)
        v = Verdict.fails([(w["role"], w["index"]) for w in rep.witness], rep.trace, **rep.detail)
        out.append((rep, replay_witness(rings[rep.ring], target, v)))
    return out


def cmd_replay(args) -> int:
    with open(args.report, encoding="utf-8") as fh:
        doc = json.load(fh)
    items = doc["reports"] if isinstance(doc, dict) else doc
    reports = [Report.from_dict(d) for d in items]
    results = replay_reports(reports, args.cap)
    ok = True
    for rep, replayed in results:
        if replayed is None:
            status = "no definitional replay"
        else:
            status = "replayed" if replayed else "DOES NOT REPLAY"
            ok &= replayed
        print(f"{rep.ring}  {rep.check}: {status}")
    print(f"{len(results)} failing reports, {sum(1 for _, r in results if r)} replayed")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"check": cmd_check, "catalog": cmd_catalog, "paper": cmd_paper, "replay": cmd_replay}
    try:
        return handlers[args.command](args)
    except (RingError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
