"""Print max-output tables for named corpus programs next to the analyzer verdicts.

    python scripts/growth_tables.py fib_choose doubling --values 1,2,3,4,5
"""
import argparse

from lrbound.analyzer import verdicts
from lrbound.corpus import PROGRAMS, program
from lrbound.deps import Mode
from lrbound.interp import ExecLimits, growth_probe


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", help="corpus programs (default: all)")
    ap.add_argument("--values", default="1,2,3,4")
    ap.add_argument("--max-stores", type=int, default=200_000)
    args = ap.parse_args()
    values = [int(v) for v in args.values.split(",")]
    limits = ExecLimits(max_stores=args.max_stores)
    for name in args.names or sorted(PROGRAMS):
        p = program(name)
        if p.n == 0:
            continue
        labels = [v.label for v in verdicts(Mode.POLY, p, witness=False)]
        lin = [v.label for v in verdicts(Mode.LIN, p, witness=False)]
        print(f"== {name}: {PROGRAMS[name]}")
        header = "   N " + "".join(f"{'X%d' % j:>18}" for j in range(1, p.n + 1))
        print(header)
        for N, row in growth_probe(p.root, values, n=p.n, limits=limits).items():
            mark = " (truncated)" if row.truncated else ""
            print(f"{N:>4} " + "".join(f"{m:>18}" for m in row.max_per_var) + mark)
        print("     " + "".join(f"{a + '/' + b:>18}" for a, b in zip(labels, lin)))
        print()


if __name__ == "__main__":
    main()
