"""Command-line front end.

Subcommands:

    algebra check FILE [--family F] [--all-violations]
    run MACHINE WORD [--mode depth|width] [--max-steps N] [--no-prune] [--json]
    transform MACHINE --kind KIND [--cap N] -o OUT
    equiv M1 M2 [--mode depth|width] [--inputs FILE | --max-len L]
                [--max-steps N] [--encode]
    verify corpus [--max-steps N] [--report-dir DIR] [--no-figures]

Exit codes: 0 success / property holds, 1 property violated (witness
printed), 2 usage or load error, 3 inconclusive (budget exhausted).

Words on the command line are comma-separated symbol names; the comma split
ignores commas inside parentheses, so annotated pair symbols like "(a,0)"
pass through whole.  When every input symbol is a single character a bare
string like "abab" is also accepted.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .algebra import AlgebraError, FiniteAlgebra, NotLatticeError, check_axioms
from .harness import equiv_check, run_full_verification
from .machine import Machine, MachineError
from .semantics import Budget, eval_depth, eval_width
from .serialize import (
    LoadError,
    load_machine_file,
    load_machine_file_with_ref,
    load_transform_info,
    loads_algebra,
    loads_effect_table,
    resolve_algebra,
    save_machine,
    save_transform_info,
)
from .transforms import apply_transform

FAMILY_CHOICES = (
    "s", "mv", "qmv", "effect", "lattice", "quasilinear", "linear",
    "locally-finite", "distributive", "all",
)


def _split_top_level(text: str) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def parse_cli_word(text: str, machine: Machine) -> tuple[str, ...]:
    tokens = _split_top_level(text)
    if len(tokens) == 1:
        token = tokens[0]
        if token in machine.input_alphabet:
            return (token,)
        if all(len(s) == 1 for s in machine.input_alphabet):
            return tuple(token)
        return (token,)
    return tuple(tokens)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmvtm",
        description="Evaluate, transform and verify lattice-valued Turing machines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_algebra = sub.add_parser("algebra", help="algebra file utilities")
    alg_sub = p_algebra.add_subparsers(dest="algebra_command", required=True)
    p_check = alg_sub.add_parser("check", help="check axiom families on an algebra file")
    p_check.add_argument("target", help="algebra JSON file, effect-table JSON file, or builtin spec")
    p_check.add_argument("--family", default="all", choices=FAMILY_CHOICES)
    p_check.add_argument("--all-violations", action="store_true",
                         help="report every violating tuple, not just the first per axiom")

    p_run = sub.add_parser("run", help="evaluate a machine on one word")
    p_run.add_argument("machine")
    p_run.add_argument("word")
    p_run.add_argument("--mode", default="depth", choices=("depth", "width"))
    p_run.add_argument("--max-steps", type=int, default=200)
    p_run.add_argument("--no-prune", action="store_true")
    p_run.add_argument("--json", action="store_true", dest="as_json")

    p_tr = sub.add_parser("transform", help="apply a classicalization")
    p_tr.add_argument("machine")
    p_tr.add_argument("--kind", required=True,
                      choices=("initial", "final", "both", "transitions-width", "transitions-depth"))
    p_tr.add_argument("--cap", type=int, default=None)
    p_tr.add_argument("-o", "--output", required=True)

    p_eq = sub.add_parser("equiv", help="compare two machines on a set of inputs")
    p_eq.add_argument("machine1")
    p_eq.add_argument("machine2")
    p_eq.add_argument("--mode", default="depth", choices=("depth", "width"))
    p_eq.add_argument("--inputs", default=None, help="file with one word per line")
    p_eq.add_argument("--max-len", type=int, default=None,
                      help="compare on all words up to this length instead")
    p_eq.add_argument("--max-steps", type=int, default=200)
    p_eq.add_argument("--encode", action="store_true",
                      help="re-encode inputs for the second machine using its sidecar")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", choices=("corpus",))
    p_verify.add_argument("--max-steps", type=int, default=500)
    p_verify.add_argument("--report-dir", default=None)
    p_verify.add_argument("--no-figures", action="store_true")
    return parser


def _cmd_algebra_check(args) -> int:
    import os

    if os.path.isfile(args.target):
        with open(args.target) as f:
            text = f.read()
        raw = json.loads(text)
        target = loads_effect_table(text) if "oplus" in raw else loads_algebra(text)
    else:
        target = resolve_algebra(args.target)
    if isinstance(target, FiniteAlgebra):
        if args.family == "effect":
            print("EFFECT applies to partial effect tables, not total algebras", file=sys.stderr)
            return 2
        if args.family == "all":
            families = ["S", "MV", "QMV", "LATTICE", "QUASILINEAR", "LINEAR", "LOCALLY_FINITE"]
            if target.is_lattice:
                families.append("DISTRIBUTIVE")
        else:
            families = [args.family.upper().replace("-", "_")]
    else:
        if args.family not in ("effect", "all"):
            print("effect tables support only the EFFECT family", file=sys.stderr)
            return 2
        families = ["EFFECT"]
    all_passed = True
    for family in families:
        report = check_axioms(target, family, find_all=args.all_violations)
        print(report)
        all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def _cmd_run(args) -> int:
    machine = load_machine_file(args.machine)
    word = parse_cli_word(args.word, machine)
    budget = Budget(max_steps=args.max_steps, prune=not args.no_prune)
    evaluate = eval_depth if args.mode == "depth" else eval_width
    result = evaluate(machine, word, budget)
    if args.as_json:
        print(json.dumps(result.to_json_dict(), sort_keys=True))
    else:
        qualifier = "" if result.complete else " (incomplete: budget exhausted)"
        defined = "" if result.defined else " (no halting path: value undefined)"
        print(f"{result.value.name}{qualifier}{defined}")
    return 0 if result.complete else 3


def _cmd_transform(args) -> int:
    machine, algebra_ref = load_machine_file_with_ref(args.machine)
    transformed, info = apply_transform(machine, args.kind, cap=args.cap)
    save_machine(transformed, args.output, algebra_ref)
    sidecar = save_transform_info(info, args.output)
    print(f"wrote {args.output} and {sidecar}")
    return 0


def _read_words(path: str) -> list[str]:
    with open(path) as f:
        return [line.strip() for line in f if line.strip()]


def _cmd_equiv(args) -> int:
    m1 = load_machine_file(args.machine1)
    m2 = load_machine_file(args.machine2)
    if args.inputs is not None:
        words = [parse_cli_word(t, m1) for t in _read_words(args.inputs)]
    elif args.max_len is not None:
        symbols = sorted(m1.input_alphabet)
        words = [
            tuple(w)
            for n in range(1, args.max_len + 1)
            for w in itertools.product(symbols, repeat=n)
        ]
    else:
        print("equiv needs --inputs FILE or --max-len L", file=sys.stderr)
        return 2
    encode = None
    if args.encode:
        info = load_transform_info(args.machine2)
        if info is None or not info.input_encoding:
            print(f"no sidecar with an input encoding next to {args.machine2}", file=sys.stderr)
            return 2
        mapping = info.input_encoding
        encode = lambda w: tuple(mapping[s] for s in w)
    report = equiv_check(m1, m2, args.mode, words, Budget(max_steps=args.max_steps), encode=encode)
    print(report)
    return {"pass": 0, "fail": 1, "inconclusive": 3}[report.verdict]


def _cmd_verify(args) -> int:
    report = run_full_verification(Budget(max_steps=args.max_steps))
    print(report.summary_text())
    if args.report_dir:
        from .report import write_report_files

        written = write_report_files(report, args.report_dir, figures=not args.no_figures)
        for path in written:
            print(f"wrote {path}")
    return report.exit_status


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "algebra":
            return _cmd_algebra_check(args)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "transform":
            return _cmd_transform(args)
        if args.command == "equiv":
            return _cmd_equiv(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except (LoadError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (AlgebraError, MachineError, NotLatticeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
