"""Command line front end.

Exit codes: 0 on success (including the documented empty-spectrum error
document), 1 on input errors, 2 on usage errors, 3 when two provably
equal verdicts disagree, in which case a reproducer file is written.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import criteria, fixtures, report
from .dsl import SemigroupSpec, build_semigroup, format_spec, parse_spec
from .errors import EmptySpectrum, TheoremViolation, TightGroupoidError
from .semigroup import InverseSemigroup

CHECK_NAMES = {
    "hausdorff": "hausdorff",
    "esspr": "essentially_principal",
    "minimal": "minimal",
    "loccontr": "locally_contracting",
}


def spec_of_semigroup(sg: InverseSemigroup, name: str) -> SemigroupSpec:
    """Table-shaped spec reproducing the instance exactly."""
    return SemigroupSpec(name, "table", size=sg.size, zero=sg.zero,
                         rows=sg.table)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightgroupoid",
        description="Analyze finite inverse semigroups with zero: tight "
                    "spectrum, groupoid of germs, and the four structure "
                    "properties with agreeing verdict pairs.")
    sub = parser.add_subparsers(dest="command", required=True)
    an = sub.add_parser("analyze", help="analyze one instance or a random corpus")
    an.add_argument("file", nargs="?", help="path to an .isg input file")
    an.add_argument("--fixture", help="named instance: I2, B2, Z2z, E4, "
                                      "In(n), Bn(n), Cz(n), Pow(k)")
    an.add_argument("--json", dest="json_path", help="write the JSON report here")
    an.add_argument("--dot", dest="dot_path", help="write the groupoid as DOT here")
    an.add_argument("--check", choices=[*CHECK_NAMES, "all"], default="all")
    an.add_argument("--max-F", dest="max_family", type=int, default=None,
                    help="cap on the contraction family size")
    an.add_argument("--seed", type=int, default=0, help="corpus random seed")
    an.add_argument("--corpus", type=int, default=None, metavar="N",
                    help="analyze N seeded random instances instead of a file")
    an.add_argument("--jobs", type=int, default=1,
                    help="worker processes for corpus mode")
    an.add_argument("--timing", action="store_true",
                    help="include wall-clock timings in JSON output")
    return parser


def _max_family(args) -> int | None:
    if args.max_family is not None:
        return args.max_family
    env = os.environ.get("ISG_MAX_F")
    return int(env) if env else None


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_property(sg, name, pair) -> None:
    print(f"{name}: criterion={str(pair.criterion).lower()} "
          f"direct={str(pair.direct).lower()}")
    failures = pair.witness.get("failures")
    if failures:
        w = failures[0]
        parts = ", ".join(f"{k}={sg.name_of(v)}" for k, v in w.items())
        print(f"  witness: {parts}")
    crit = pair.witness.get("criterion", {})
    if isinstance(crit, dict) and "e" in crit:
        print(f"  refuted at e={sg.name_of(crit['e'])}")


def _violation_path(name: str) -> str:
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in name)
    return f"violation-{safe}.json"


def _dump_violation(sg: InverseSemigroup, name: str, exc: TheoremViolation) -> str:
    path = _violation_path(name)
    body = {
        "instance": name,
        "property": exc.property,
        "criterion": repr(exc.criterion),
        "direct": repr(exc.direct),
        "detail": exc.instance,
        "isg": format_spec(spec_of_semigroup(sg, name)),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(body, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def _analyze_single(args) -> int:
    if args.file and args.fixture:
        print("give either a file or --fixture, not both", file=sys.stderr)
        return 2
    if not args.file and not args.fixture:
        print("need an input file or --fixture", file=sys.stderr)
        return 2
    try:
        if args.fixture:
            name = args.fixture
            sg = fixtures.build_fixture(name)
        else:
            with open(args.file, encoding="utf-8") as fh:
                spec = parse_spec(fh.read())
            name = spec.name
            sg = build_semigroup(spec)
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 1
    except TightGroupoidError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1

    start = time.perf_counter()
    try:
        analysis = criteria.analyze(sg, _max_family(args), name)
    except EmptySpectrum as exc:
        payload = report.error_payload(name, "EmptySpectrum", str(exc),
                                       elements=sg.size,
                                       idempotents=len(sg.idempotents))
        doc = report.ReportDocument(payload, None)
        _write(args.json_path, report.emit_report(doc))
        print(f"{name}: EmptySpectrum: {exc}")
        return 0
    except TheoremViolation as exc:
        path = _dump_violation(sg, name, exc)
        print(f"verdict mismatch: {exc}\nreproducer written to {path}",
              file=sys.stderr)
        return 3
    timing = {"analyze_s": round(time.perf_counter() - start, 6)}
    doc = report.build_document(analysis, name, timing if args.timing else None)
    rep = analysis.report
    inst = doc.payload["instance"]
    print(f"{name}: |S|={inst['elements']} |E|={inst['idempotents']} "
          f"spectrum={inst['spectrum_size']} "
          f"arrows={inst['groupoid']['arrows']}")
    pairs = {
        "hausdorff": rep.hausdorff,
        "essentially_principal": rep.essentially_principal,
        "minimal": rep.minimal,
        "locally_contracting": rep.locally_contracting,
    }
    if args.check == "all":
        for pname, pair in pairs.items():
            _print_property(sg, pname, pair)
        flags = rep.cstar_flags
        print("flags: " + " ".join(f"({k})={str(v).lower()}"
                                   for k, v in sorted(flags.items())))
        for line in rep.conclusions:
            print(f"  {line}")
    else:
        pname = CHECK_NAMES[args.check]
        _print_property(sg, pname, pairs[pname])

    if args.json_path:
        _write(args.json_path, report.emit_report(doc, include_timing=args.timing))
    if args.dot_path:
        _write(args.dot_path, report.emit_dot(analysis.groupoid, name))
    return 0


def _corpus_worker(item):
    index, name, sg, max_family = item
    try:
        analysis, checks = criteria.verify_instance(sg, name, seed=index,
                                                    max_family=max_family)
        doc = report.build_document(analysis, name)
        return index, "ok", doc.payload, sorted(checks)
    except TheoremViolation as exc:
        return index, "violation", {
            "property": exc.property, "criterion": repr(exc.criterion),
            "direct": repr(exc.direct), "detail": exc.instance}, []


def _analyze_corpus(args) -> int:
    if args.file or args.fixture:
        print("--corpus excludes a file or --fixture", file=sys.stderr)
        return 2
    instances = fixtures.corpus(args.corpus, args.seed)
    work = [(i, name, sg, _max_family(args))
            for i, (name, sg) in enumerate(instances)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = sorted(pool.map(_corpus_worker, work))
    else:
        results = [_corpus_worker(item) for item in work]

    payloads = []
    for index, status, payload, checks in results:
        name, sg = instances[index]
        if status == "violation":
            exc = TheoremViolation(payload["property"], payload["criterion"],
                                   payload["direct"], payload["detail"])
            path = _dump_violation(sg, name, exc)
            print(f"verdict mismatch on {name}: {exc}\n"
                  f"reproducer written to {path}", file=sys.stderr)
            return 3
        inst = payload["instance"]
        flags = payload["cstar_flags"]
        print(f"[{index:3d}] {name}: |S|={inst['elements']} "
              f"|E|={inst['idempotents']} spectrum={inst['spectrum_size']} "
              f"arrows={inst['groupoid']['arrows']} "
              + " ".join(f"({k})={str(v).lower()}" for k, v in sorted(flags.items()))
              + f" identities={len(checks)} ok")
        payloads.append(payload)
    print(f"{len(payloads)}/{len(instances)} equivalence checks passed")
    if args.json_path:
        body = {
            "schema_version": report.SCHEMA_VERSION,
            "corpus": {"seed": args.seed, "count": args.corpus},
            "instances": payloads,
        }
        _write(args.json_path, json.dumps(body, indent=2, sort_keys=True) + "\n")
    return 0


def run_cli(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.corpus is not None:
        return _analyze_corpus(args)
    return _analyze_single(args)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
