"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import centralizer_algebra
from .errors import ArtinLabError, ParseError
from .invariants import (
    Caps,
    compare_markdown,
    compare_profiles,
    report_markdown,
    report_statuses,
    stable_profile,
)
from .io import algebra_to_dict, parse_algebra_file, write_algebra_file
from .linalg import Field
from .suite import run_suite
from .surgery import remove_nodes, verify_surgery

EXIT_OK, EXIT_ERROR, EXIT_LOWER = 0, 1, 2


def _positive(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


def _field(s: str) -> Field:
    try:
        return Field.parse(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-resolution", type=_positive, default=64)
    common.add_argument("--cap-registry", type=_positive, default=512)
    common.add_argument("--cap-dim", type=_positive, default=256)
    common.add_argument("--cap-del", type=_positive, default=32)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "md"), default="json")
    common.add_argument("--field", type=_field, default=None, help="Q or Fp:<p>; overrides the file")

    p = argparse.ArgumentParser(prog="artinlab", description="Stable invariants of finite-dimensional algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("invariants", parents=[common], help="full invariant report")
    s.add_argument("path")
    s = sub.add_parser("remove-nodes", parents=[common], help="node-free triangular algebra")
    s.add_argument("path")
    s.add_argument("-o", "--out", help="write the result as a structure-constant file")
    s = sub.add_parser("compare", parents=[common], help="compare two stable profiles")
    s.add_argument("path1")
    s.add_argument("path2")
    s = sub.add_parser("centralizer", parents=[common], help="algebra of matrices commuting with C")
    s.add_argument("matrix", help="rows separated by ';', entries by ',' (e.g. '0,1;0,0')")
    s.add_argument("-o", "--out")
    sub.add_parser("paper-suite", parents=[common], help="golden checks on the bundled examples")
    return p


def _caps(args) -> Caps:
    return Caps(args.cap_resolution, args.cap_registry, args.cap_dim, args.cap_del)


def _emit(obj, md: str | None, fmt: str) -> None:
    if fmt == "md" and md is not None:
        sys.stdout.write(md)
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_invariants(args) -> int:
    a = parse_algebra_file(args.path, args.field, args.seed)
    report = stable_profile(a, _caps(args), args.seed, a.provenance)
    _emit(report, report_markdown(report), args.format)
    return EXIT_LOWER if any(s != "exact" for s in report_statuses(report)) else EXIT_OK


def cmd_remove_nodes(args) -> int:
    a = parse_algebra_file(args.path, args.field, args.seed)
    r = remove_nodes(a, args.seed)
    verify_surgery(r, _caps(args), args.seed)
    out = r.to_json()
    if not r.changed:
        out["notice"] = "no nodes; algebra unchanged"
    if args.out:
        write_algebra_file(r.result, args.out, f"{a.provenance}'" if r.changed else a.provenance)
        out["written"] = args.out
    md = None
    if args.format == "md":
        v = r.verification
        md = (f"nodes: {', '.join(out['nodes']) or 'none'}\n"
              f"dim A = {a.dim}, dim A' = {r.result.dim}\n"
              f"node-free: {v['node_free'] == 'pass'}\n")
        if "counts" in v:
            md += f"non-projective simples: {v['counts'][0]}={v['counts'][1]}\n"
    _emit(out, md, args.format)
    return EXIT_OK


def cmd_compare(args) -> int:
    caps = _caps(args)
    reports = []
    for path in (args.path1, args.path2):
        a = parse_algebra_file(path, args.field, args.seed)
        reports.append(stable_profile(a, caps, args.seed, a.provenance))
    rows = compare_profiles(*reports)
    _emit({"schema": 1, "left": reports[0]["algebra"], "right": reports[1]["algebra"], "rows": rows},
          compare_markdown(rows), args.format)
    statuses = report_statuses(reports[0]) + report_statuses(reports[1])
    return EXIT_LOWER if any(s != "exact" for s in statuses) else EXIT_OK


def _parse_matrix(text: str, F: Field):
    try:
        return [[F(x) for x in row.split(",")] for row in text.split(";")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix entry ({exc})", "matrix") from None


def cmd_centralizer(args) -> int:
    F = args.field or Field.parse("Q")
    m = _parse_matrix(args.matrix, F)
    a = centralizer_algebra(m, len(m), F, args.seed)
    out = {"dim": a.dim, "simples": len(a.class_representatives()), "basic": a.is_basic()}
    if args.out:
        write_algebra_file(a, args.out)
        out["written"] = args.out
    else:
        out["algebra"] = algebra_to_dict(a)
    _emit(out, None, args.format)
    return EXIT_OK


def cmd_paper_suite(args) -> int:
    start = time.perf_counter()
    checks = run_suite(args.field, _caps(args), args.seed)
    failed = [c for c in checks if not c.ok]
    if args.format == "md":
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)}/{len(checks)} passed in {time.perf_counter() - start:.1f}s")
    else:
        print(json.dumps({"passed": len(checks) - len(failed), "total": len(checks),
                          "failures": [c.line() for c in failed]}, indent=2))
    return EXIT_ERROR if failed else EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "remove-nodes": cmd_remove_nodes,
    "compare": cmd_compare,
    "centralizer": cmd_centralizer,
    "paper-suite": cmd_paper_suite,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ArtinLabError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
