"""The eight acceptance criteria, one test each.

A PASS/FAIL line per criterion is printed at the end of the pytest run
(see ``pytest_terminal_summary`` in conftest.py). Run just this file with::

    pytest tests/test_acceptance.py
"""
import random
import time
from itertools import product

import pytest

from lrbound.analyzer import Analyzer, AnalyzerConfig, analyze, verdicts
from lrbound.corpus import corpus, program, random_program
from lrbound.deps import DepType, Mode, T3, Unary, compose, enumerate_deps, join, loop_correct
from lrbound.interp import ExecLimits, growth_probe, reachable_stores
from lrbound.lang import Loop, Program, has_reset, walk
from lrbound.nfa import Layout, all_nfas, is_universal, nfa_to_program, random_nfa
from lrbound.parser import parse_command

from conftest import naive_max

pytestmark = pytest.mark.acceptance

E = frozenset()
POLY, LIN = Mode.POLY, Mode.LIN


def criterion(title):
    def wrap(fn):
        return pytest.mark.criterion(title)(fn)
    return wrap


class Clock:
    def __init__(self, limit):
        self.limit = limit
        self.t0 = time.perf_counter()

    def check(self):
        took = time.perf_counter() - self.t0
        assert took < self.limit, f"took {took:.2f}s, limit {self.limit}s"


def random_corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_program(rng, **kw) for _ in range(count)]


def l2_corpus():
    progs = dict(corpus())
    for k, p in enumerate(random_corpus(2024, 150, max_vars=5, max_depth=4)):
        progs[f"random{k}"] = p
    return progs


def full_corpus():
    """Curated examples, the L2 corpus, and a handful of generated NFA programs."""
    progs = l2_corpus()
    rng = random.Random(7)
    for k in range(10):
        progs[f"nfa{k}"] = nfa_to_program(random_nfa(rng, rng.randint(1, 3), 0.5))
    return progs


# ---------------------------------------------------------------------------


@criterion("AC1 worked-example verdicts")
def test_ac1_example_verdicts():
    clock = Clock(1.0)
    assert [v.label for v in verdicts(POLY, program("fib_choose"), witness=False)] == [
        "NOT-POLY", "NOT-POLY", "NOT-POLY", "POLY"]
    assert all(v.bounded for v in verdicts(POLY, program("fib_reset"), witness=False))

    loop_l = program("double_via_inner")
    assert (Unary(4, T3, 1), E) in analyze(POLY, loop_l.root, (), 4)
    reset = analyze(POLY, program("double_via_inner_reset").root, (), 4)
    assert (Unary(2, DepType.T2, 2), frozenset({3})) in reset
    assert not [d for d, _ in reset if isinstance(d, Unary) and d.typ == T3]

    sq = Program(3, parse_command("X3 := X2 * X2 ; X1 := X1 + X3"))
    assert verdicts(LIN, sq, witness=False)[0].label == "NOT-LIN"
    assert verdicts(LIN, program("add"), witness=False)[0].label == "LIN"
    clock.check()


@criterion("AC2 NFA differential suite")
def test_ac2_nfa_differential():
    clock = Clock(120.0)
    nfas = [a for k in (1, 2) for a in all_nfas(k)]
    assert len(nfas) == 1540
    rng = random.Random(20240601)
    nfas += [random_nfa(rng, rng.randint(3, 4), rng.uniform(0.3, 0.9)) for _ in range(200)]
    bad = []
    for a in nfas:
        p = nfa_to_program(a)
        lin = Analyzer(p.n, LIN).verdict(p, Layout(a.n_states).z, witness=False).bounded
        if lin != is_universal(a):
            bad.append(a)
    assert bad == []
    clock.check()


@criterion("AC3 restricted L2 equals full L2 fixpoint")
def test_ac3_l2_equivalence():
    clock = Clock(120.0)
    progs = l2_corpus()
    assert len(progs) >= 50
    assert "reset_then_square_loop" in progs and "reset_then_square_loop_swapped" in progs
    loops_checked = 0
    for name, p in progs.items():
        for mode in Mode:
            a = Analyzer(p.n, mode)
            b = Analyzer(p.n, mode, AnalyzerConfig(full_l2_fixpoint=True))
            a.judgements(p.root)
            b.judgements(p.root)
            nodes = {id(x): x for x in walk(p.root) if isinstance(x, Loop)}
            for (nid, P), js in a.loop_judgements().items():
                assert b.judgements(nodes[nid], P) == js, (name, mode, P)
                loops_checked += 1
    assert loops_checked > 100
    clock.check()


@criterion("AC4 LIN-bounded implies POLY-bounded")
def test_ac4_mode_consistency():
    bad = []
    for name, p in full_corpus().items():
        vp = verdicts(POLY, p, witness=False)
        vl = verdicts(LIN, p, witness=False)
        bad += [(name, a.variable) for a, b in zip(vp, vl) if b.bounded and not a.bounded]
    assert bad == []


@criterion("AC5 dependence algebra laws")
def test_ac5_algebra():
    clock = Clock(10.0)
    ts = list(DepType)
    for a, b, c in product(ts, repeat=3):
        assert join(a, b) == join(b, a)
        assert join(join(a, b), c) == join(a, join(b, c))
        assert join(a, a) == a
        assert join(DepType.T1, a) == a
    deps = enumerate_deps(3, ordered=True)
    pairs = {(a, b): compose(a, b) for a in deps for b in deps}
    violations = compared = 0
    for (a, b), ab in pairs.items():
        if ab is None:
            continue
        for c in deps:
            left = compose(ab, c)
            if left is None:
                continue
            bc = pairs[b, c]
            right = compose(a, bc) if bc is not None else None
            if right is not None:
                compared += 1
                violations += left != right
    assert violations == 0
    assert compared == 13284  # every triple where both sides are defined
    for d in enumerate_deps(3):
        p, q = loop_correct(POLY, 1, d), loop_correct(LIN, 1, d)
        if p is not None and q is not None:
            assert p.typ <= q.typ
    clock.check()


def fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


CLOSED_FORMS = {
    # name: (closed form of max outputs at all-N inputs, exponential variables)
    "identity": (lambda N: (N,), set()),
    "doubling": (lambda N: (N * 2 ** N, N), {1}),
    "additive": (lambda N: (N + N * N, N, N), set()),
    "fib_choose": (lambda N: (N * fib(N + 2),) * 3 + (N,), {1, 2, 3}),
    "fib_reset": (lambda N: (N * (N + 1), N, N * (N + 1), N), set()),
}


@criterion("AC6 interpreter matches closed forms")
def test_ac6_closed_forms():
    clock = Clock(60.0)
    for name, (form, exp_vars) in CLOSED_FORMS.items():
        p = program(name)
        table = growth_probe(p.root, [1, 2, 3, 4], n=p.n)
        for N, row in table.items():
            assert not row.truncated
            assert row.max_per_var == form(N), (name, N)
            assert naive_max(p.root, (N,) * p.n) == form(N), (name, N)
        unbounded = {v.variable for v in verdicts(POLY, p, witness=False) if not v.bounded}
        assert unbounded == exp_vars, name
    clock.check()


@criterion("AC7 monotone in inputs")
def test_ac7_monotonicity():
    clock = Clock(60.0)
    rng = random.Random(77)
    limits = ExecLimits(max_stores=20_000, max_value=10**9)
    checked = 0
    while checked < 100:
        p = random_program(rng, max_vars=4, max_depth=3)
        s = tuple(rng.randint(0, 3) for _ in range(p.n))
        s2 = tuple(x + rng.randint(0, 2) for x in s)
        lo, hi = reachable_stores(p.root, s, limits), reachable_stores(p.root, s2, limits)
        if lo.truncated or hi.truncated:
            continue
        assert all(a <= b for a, b in zip(lo.max_per_var, hi.max_per_var)), (p, s, s2)
        checked += 1
    clock.check()


@criterion("AC8 reset-free programs use one context")
def test_ac8_reset_free():
    seen = 0
    for name, p in full_corpus().items():
        if has_reset(p.root):
            continue
        for mode in Mode:
            an = Analyzer(p.n, mode)
            an.judgements(p.root)
            assert an.stats()["contexts"] == 1, name
        seen += 1
    assert seen >= 10


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
