"""Command-line front end.

Exit codes: 0 ok, 1 usage or I/O error, 2 parse/validation error,
3 analysis resource cap exceeded, 4 truncated run with ``--strict``,
5 differential test disagreement.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .analyzer import Analyzer, AnalyzerConfig, ResourceLimitError, render_derivation, check_derivation
from .deps import Mode
from .interp import ExecLimits, reachable_stores
from .nfa import is_universal, nfa_to_program, parse_nfa, random_nfa, render_nfa
from .parser import ParseError, parse_program, render

EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_TRUNCATED = 4
EXIT_DISAGREE = 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _config(args) -> AnalyzerConfig:
    return AnalyzerConfig(
        full_l2_fixpoint=args.full_l2_fixpoint,
        post_weakening=args.post_weakening,
        max_entries=args.max_entries,
        max_contexts_per_node=args.max_contexts,
    )


def build_report(program, mode: Mode, config: AnalyzerConfig, witness: bool = False,
                 var: int | None = None) -> dict:
    """Analyze ``program`` and collect verdicts and statistics as plain data."""
    t0 = time.perf_counter()
    an = Analyzer(program.n, mode, config)
    variables = [var] if var is not None else list(range(1, program.n + 1))
    verdicts = []
    for j in variables:
        v = an.verdict(program, j, witness=witness)
        item = {"variable": j, "bounded": v.bounded, "label": v.label}
        if v.witness is not None:
            check_derivation(v.witness, mode, program.n)
            item["witness"] = render_derivation(v.witness)
        verdicts.append(item)
    stats = dict(an.stats(), seconds=round(time.perf_counter() - t0, 6))
    return {"mode": mode.value, "n": program.n, "verdicts": verdicts, "stats": stats}


def cmd_analyze(args) -> int:
    program = parse_program(_read(args.file))
    if args.var is not None and not 1 <= args.var <= program.n:
        print(f"error: --var {args.var} outside 1..{program.n}", file=sys.stderr)
        return 1
    report = build_report(program, Mode(args.mode), _config(args), args.witness, args.var)
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return 0
    for item in report["verdicts"]:
        print(f"X{item['variable']}: {item['label']}")
        if "witness" in item:
            for line in item["witness"].splitlines():
                print(f"    {line}")
    s = report["stats"]
    print(f"# mode={report['mode']} n={report['n']} contexts={s['contexts']} "
          f"entries={s['entries']} memo_keys={s['memo_keys']} seconds={s['seconds']}")
    return 0


def cmd_run(args) -> int:
    program = parse_program(_read(args.file))
    inputs = [int(x) for x in args.inputs.split(",")] if args.inputs else []
    if len(inputs) != program.n:
        print(f"error: expected {program.n} inputs, got {len(inputs)}", file=sys.stderr)
        return 1
    res = reachable_stores(program.root, inputs, ExecLimits(args.max_stores, args.max_value))
    if args.format == "json":
        print(json.dumps({
            "stores": len(res.final_stores),
            "max": list(res.max_per_var),
            "max_step_count": res.max_step_count,
            "truncated": res.truncated,
        }, indent=2))
    else:
        print(f"stores: {len(res.final_stores)}")
        for j, m in enumerate(res.max_per_var, 1):
            print(f"max X{j} = {m}")
        print(f"max steps: {res.max_step_count}")
        print(f"truncated: {'yes' if res.truncated else 'no'}")
    if res.truncated and args.strict:
        return EXIT_TRUNCATED
    return 0


def _difftest(nfa, config: AnalyzerConfig) -> tuple[bool, bool]:
    program = nfa_to_program(nfa)
    v = Analyzer(program.n, Mode.LIN, config).verdict(program, program.n, witness=False)
    return v.bounded, is_universal(nfa)


def cmd_nfa(args) -> int:
    config = _config(args)
    if args.action == "random":
        rng = random.Random(args.seed)
        disagreements = 0
        for k in range(args.count):
            a = random_nfa(rng, rng.randint(args.min_states, args.max_states), rng.uniform(0.3, 0.9))
            lin, uni = _difftest(a, config)
            if lin != uni:
                disagreements += 1
                print(f"DISAGREE #{k}: Z {'LIN' if lin else 'NOT-LIN'}, oracle {uni}")
                print(render_nfa(a))
        print(f"{args.count - disagreements}/{args.count} AGREE (seed {args.seed})")
        return EXIT_DISAGREE if disagreements else 0
    if args.file is None:
        print("error: an NFA file is required", file=sys.stderr)
        return 1
    nfa = parse_nfa(_read(args.file))
    if args.action == "emit":
        print(render(nfa_to_program(nfa), header=True))
        return 0
    if args.action == "check":
        print("UNIVERSAL" if is_universal(nfa) else "NOT-UNIVERSAL")
        return 0
    lin, uni = _difftest(nfa, config)
    verdict = "AGREE" if lin == uni else "DISAGREE"
    print(f"{verdict} (Z {'LIN' if lin else 'NOT-LIN'}, oracle {str(uni).lower()})")
    return 0 if lin == uni else EXIT_DISAGREE


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--full-l2-fixpoint", action="store_true",
                   help="iterate L2 over the whole loop judgement set")
    p.add_argument("--post-weakening", action="store_true",
                   help="experimental: allow shrinking post-contexts")
    p.add_argument("--max-entries", type=int, default=AnalyzerConfig.max_entries)
    p.add_argument("--max-contexts", type=int, default=AnalyzerConfig.max_contexts_per_node)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify each variable as bounded or not")
    p.add_argument("file")
    p.add_argument("--mode", choices=["poly", "lin"], default="poly")
    p.add_argument("--witness", action="store_true", help="print derivation trees")
    p.add_argument("--var", type=int, help="only report this variable index")
    p.add_argument("--format", choices=["text", "json"], default="text")
    _add_engine_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("run", help="enumerate all executions from one input store")
    p.add_argument("file")
    p.add_argument("--inputs", default="", help="comma-separated initial values")
    p.add_argument("--max-stores", type=int, default=ExecLimits.max_stores)
    p.add_argument("--max-value", type=int, default=ExecLimits.max_value)
    p.add_argument("--strict", action="store_true", help="exit 4 when the run is truncated")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("nfa", help="NFA universality reduction")
    p.add_argument("action", choices=["emit", "check", "difftest", "random"])
    p.add_argument("file", nargs="?")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--min-states", type=int, default=3)
    p.add_argument("--max-states", type=int, default=4)
    _add_engine_flags(p)
    p.set_defaults(func=cmd_nfa)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
