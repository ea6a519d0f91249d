"""Differential test of the Lin analysis against NFA universality.

Exhaustive over small automata, then seeded-random larger ones. Prints any
disagreement and a summary line; exits 1 if there was one.

    python scripts/nfa_difftest_sweep.py --exhaustive 2 --random 500 --states 3-5 --seed 1
"""
import argparse
import random
import sys
import time

from lrbound.analyzer import Analyzer
from lrbound.deps import Mode
from lrbound.nfa import Layout, all_nfas, is_universal, nfa_to_program, random_nfa, render_nfa


def lin_verdict(a):
    p = nfa_to_program(a)
    return Analyzer(p.n, Mode.LIN).verdict(p, Layout(a.n_states).z, witness=False).bounded


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive", type=int, default=2, help="all NFAs up to this many states")
    ap.add_argument("--random", type=int, default=200)
    ap.add_argument("--states", default="3-4", help="state range for random NFAs, e.g. 3-5")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.states.split("-"))
    rng = random.Random(args.seed)

    def batch():
        for k in range(1, args.exhaustive + 1):
            yield from all_nfas(k)
        for _ in range(args.random):
            yield random_nfa(rng, rng.randint(lo, hi), rng.uniform(0.3, 0.9))

    t0 = time.perf_counter()
    total = bad = universal = 0
    for a in batch():
        total += 1
        uni = is_universal(a)
        universal += uni
        if lin_verdict(a) != uni:
            bad += 1
            print(f"DISAGREE (oracle {uni}):\n{render_nfa(a)}")
    secs = time.perf_counter() - t0
    print(f"{total - bad}/{total} agree, {universal} universal, {secs:.1f}s (seed {args.seed})")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
