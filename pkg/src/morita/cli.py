"""Command-line driver.

``morita <command> <file> [flags]`` loads an instance file and runs one
check family against it:

``validate``
    every declared entity against its validator;
``coherence``
    ambient structure isomorphisms and their equations;
``calculus``
    the equational law families on sampled tuples;
``nerve``
    degeneracies, triangle/tetrahedron validators, simplicial identities;
``axioms``
    horn filling, thinness and saturation (the full battery);
``oracle``
    every balanced product cross-checked against the independent
    quotient recomputation.

The machine-readable summary (versioned, no timing, byte-identical for a
fixed file/seed/budget) goes to stdout; the human rendering, including
timing, goes to stderr.  Exit status: 0 all checks passed, 1 at least one
failure, 2 the file or the invocation could not be used.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .errors import MoritaError, ParseError, UnknownCommand, ValidationError
from .fileio import InstanceFile, load_instance
from .nerve import validate_simplex2, validate_simplex3
from .bimodules import validate_bimodule, validate_bimodule_map, validate_monoid
from .reports import Report
from .verify import (verify_calculus, verify_coherence, verify_complicial,
                     verify_nerve, verify_oracle)

SUMMARY_FORMAT_VERSION = 1

COMMANDS = ("validate", "coherence", "calculus", "nerve", "axioms", "oracle")

_VALIDATORS = {
    "monoids": validate_monoid,
    "bimodules": validate_bimodule,
    "maps": validate_bimodule_map,
    "triangles": validate_simplex2,
    "tetrahedra": validate_simplex3,
}


def _validate_report(loaded: InstanceFile) -> Report:
    rep = Report(title=f"validate[{loaded.path}]")
    count = 0
    for section, name, value in loaded.entities():
        sub = _VALIDATORS[section](value)
        bad = sub.first_failure()
        rep.record(f"file.{section}", name, sub.ok,
                   detail="" if bad is None else f"{bad.law} / {bad.subject}")
        count += 1
    rep.record("file.load", f"{loaded.kind} instance, {count} entities", True)
    return rep


def _budget_for(loaded: InstanceFile, max_set_size: int, max_dim: int) -> int:
    # per-kind size notion; combinators get the joint conservative budget
    if loaded.kind == "finset_disjoint":
        return max_set_size
    if loaded.kind == "finvect":
        return max_dim
    return max(1, min(max_set_size, max_dim))


def run_suite(command: str, path: str, *, max_set_size: int = 2,
              max_dim: int = 2, witness_budget: int = 4,
              seed: int = 0) -> Report:
    """Run one check family against an instance file."""
    if command not in COMMANDS:
        raise UnknownCommand(f"unknown command {command!r}; choose from {COMMANDS}")
    loaded = load_instance(path)
    if command == "validate":
        return _validate_report(loaded)
    inst = loaded.instance
    size = _budget_for(loaded, max_set_size, max_dim)
    if command == "coherence":
        return verify_coherence(inst, max_size=size, seed=seed)
    if command == "calculus":
        return verify_calculus(inst, max_size=size, seed=seed)
    if command == "nerve":
        return verify_nerve(inst, max_size=size, seed=seed)
    if command == "axioms":
        return verify_complicial(inst, max_size=size,
                                 witness_budget=witness_budget, seed=seed)
    return verify_oracle(inst, max_size=size, seed=seed)


def _summary(command: str, path: str, args, rep: Report) -> str:
    passed, failed = rep.counts()
    doc = {
        "format_version": SUMMARY_FORMAT_VERSION,
        "command": command,
        "file": path,
        "seed": args.seed,
        "budgets": {
            "max_set_size": args.max_set_size,
            "max_dim": args.max_dim,
            "witness_budget": args.witness_budget,
        },
        "rows": [
            {"law": r.law, "subject": r.subject, "ok": r.ok, "detail": r.detail}
            for r in rep
        ],
        "passed": passed,
        "failed": failed,
        "ok": rep.ok,
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morita",
        description="verify monoids, bimodules and balanced products "
                    "declared in an instance file")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", help="instance file (JSON)")
    parser.add_argument("--max-set-size", type=int, default=2,
                        help="carrier budget for set-based instances")
    parser.add_argument("--max-dim", type=int, default=2,
                        help="dimension budget for linear instances")
    parser.add_argument("--witness-budget", type=int, default=4,
                        help="search bound for invertibility witnesses")
    parser.add_argument("--seed", type=int, default=0,
                        help="tuple sampling seed")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    started = time.perf_counter()
    try:
        rep = run_suite(args.command, args.file,
                        max_set_size=args.max_set_size, max_dim=args.max_dim,
                        witness_budget=args.witness_budget, seed=args.seed)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        # a file that loads but fails validation is a reported failure
        rep = Report(title=f"{args.command}[{args.file}]")
        bad = exc.report.first_failure()
        rep.record("file.invalid", exc.entity, False,
                   detail="" if bad is None else f"{bad.law} / {bad.subject}",
                   lhs=None if bad is None else bad.lhs,
                   rhs=None if bad is None else bad.rhs)
    except MoritaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - started
    print(_summary(args.command, args.file, args, rep))
    print(rep.render(), file=sys.stderr)
    print(f"({elapsed:.2f}s)", file=sys.stderr)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
