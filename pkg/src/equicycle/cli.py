"""``equicycle`` command line: construct, verify, inspect and cache.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blowup
from .assembly import construct
from .budget import Budget
from .certificate import CertificateParseError, dumps, dumps_structured, read
from .core import INF, ParameterError, Rot, SearchBudgetExceeded
from .differences import audit_coverage
from .verifier import Expectations, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _expectations(system) -> Expectations:
    p = system.provenance
    return Expectations(class_sizes=p.get("expect_classes"), part_red=p.get("expect_part_red"))


def cmd_construct(args) -> int:
    try:
        system = construct(args.ell, args.v, seed=args.seed, budget=Budget.from_env())
    except SearchBudgetExceeded as exc:
        print(f"search budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParameterError as exc:
        print(f"unsupported parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = verify(system, _expectations(system))
    text = dumps_structured(system) if args.format == "structured" else dumps(system)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    red, blue = system.colouring.class_sizes
    summary = (
        f"route={system.route} cycles={len(system.cycles)} "
        f"classes=red:{red},blue:{blue} verdict={'PASS' if verdict else 'FAIL'}"
    )
    print(summary, file=sys.stderr if args.out == "-" else sys.stdout)
    return EXIT_OK if verdict else EXIT_FAIL


def _load(path):
    try:
        return read(path), None
    except CertificateParseError as exc:
        return None, f"parse error: {exc}"
    except OSError as exc:
        return None, f"cannot read {path}: {exc.strerror}"


def cmd_verify(args) -> int:
    system, err = _load(args.certificate)
    if err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    verdict = verify(system, _expectations(system))
    for rec in verdict.records():
        print(json.dumps(rec, sort_keys=True))
    print(json.dumps({"overall": "pass" if verdict else "fail", "failing": verdict.failing()}))
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_inspect(args) -> int:
    system, err = _load(args.certificate)
    if err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    if not args.differences:
        red, blue = system.colouring.class_sizes
        print(f"route={system.route} ell={system.ell} cycles={len(system.cycles)} red={red} blue={blue}")
        return EXIT_OK
    p = system.provenance
    bases = p.get("bases")
    rotational = all(v is INF or isinstance(v, Rot) for v in system.graph.vertices())
    if not bases or not rotational or "n" not in p:
        print("unsupported: difference ledger needs a rotational certificate with base cycles", file=sys.stderr)
        return EXIT_USAGE
    report = audit_coverage(bases, p["n"])
    ledger = report.ledger()
    width = max(len(name) for name, _ in bases)
    for name, _ in bases:
        classes = sorted(ledger.get(name, ()))
        print(f"{name:<{width}}  " + ", ".join(str(c) for c in classes))
    for e in report.problems():
        print(f"PROBLEM {e.cls}: {e.status} (suppliers {', '.join(e.suppliers) or 'none'})")
    print(f"coverage {'PASS' if report.passed else 'FAIL'}: {len(report.entries)} classes over Z_{p['n']}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_cache(args) -> int:
    if args.action == "clear":
        blowup.clear_cache()
        print(f"cleared {blowup.cache_file()}")
        return EXIT_OK
    if args.action == "warm":
        ells = args.ell or list(range(9, 33, 2))
        try:
            for ell in ells:
                blowup.warm_cache(ell, seed=args.seed, budget=Budget.from_env())
                print(f"C_5[{ell}] seed={args.seed} ready")
        except SearchBudgetExceeded as exc:
            print(f"search budget exhausted: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        except ParameterError as exc:
            print(f"unsupported parameters: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK
    entries = blowup.load_cache()
    print(f"{blowup.cache_file()}: {len(entries)} entries")
    for key in sorted(entries):
        print(f"  {key}  ({len(entries[key])} base cycles)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equicycle", description="Equitably 2-coloured l-cycle systems of K_v.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and verify a system, write its certificate")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="certificate path ('-' for standard output)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inspect", help="summarise a certificate")
    p.add_argument("certificate")
    p.add_argument("--differences", action="store_true", help="print the difference-coverage ledger")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("cache", help="manage searched C_5[l] base cycles")
    p.add_argument("action", choices=("list", "clear", "warm"))
    p.add_argument("--ell", type=int, action="append", help="l to warm (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
