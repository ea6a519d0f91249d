"""Compare restricted L2 (premises from L0/L1 only) with the full L2 fixpoint.

Runs both engines on the curated corpus plus seeded-random programs and
reports every loop node and pre-context where the judgement sets differ.

    python scripts/l2_equivalence.py --count 1000 --seed 3 --max-vars 5 --max-depth 4
"""
import argparse
import random
import sys
import time

from lrbound.analyzer import Analyzer, AnalyzerConfig
from lrbound.corpus import corpus, random_program
from lrbound.deps import Mode
from lrbound.lang import Loop, walk
from lrbound.parser import render_command


def compare(p, mode):
    a = Analyzer(p.n, mode)
    b = Analyzer(p.n, mode, AnalyzerConfig(full_l2_fixpoint=True))
    a.judgements(p.root)
    b.judgements(p.root)
    nodes = {id(x): x for x in walk(p.root) if isinstance(x, Loop)}
    diffs, checked = [], 0
    for (nid, P), js in a.loop_judgements().items():
        checked += 1
        full = b.judgements(nodes[nid], P)
        if full != js:
            diffs.append((nodes[nid], P, js ^ full))
    return checked, diffs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vars", type=int, default=5)
    ap.add_argument("--max-depth", type=int, default=4)
    ap.add_argument("--max-size", type=int, default=12)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    progs = list(corpus().items())
    progs += [(f"random{k}", random_program(rng, args.max_vars, args.max_depth, max_size=args.max_size))
              for k in range(args.count)]
    t0 = time.perf_counter()
    loops = bad = 0
    for name, p in progs:
        for mode in Mode:
            checked, diffs = compare(p, mode)
            loops += checked
            for node, P, delta in diffs:
                bad += 1
                print(f"DIFF {name} {mode.value} at {render_command_short(node)} P={sorted(P)}: {sorted(map(str, delta))}")
    secs = time.perf_counter() - t0
    print(f"{len(progs)} programs, {loops} loop judgements compared, {bad} differences, {secs:.1f}s")
    sys.exit(1 if bad else 0)


def render_command_short(node, width=60):
    text = render_command(node)
    return text if len(text) <= width else text[:width - 3] + "..."


if __name__ == "__main__":
    main()
