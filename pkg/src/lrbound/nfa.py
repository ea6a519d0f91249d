"""Binary-alphabet NFAs, a universality oracle, and the program generator.

The generated program keeps ``Xq`` at zero exactly when state ``q`` is
reachable on the word chosen so far, and zeroes ``Z`` at the end exactly when
an accepting state was reached. ``Z`` is linearly bounded iff the automaton
accepts every word.

File format, one directive per line (``#`` comments)::

    states 3
    start 1
    accept 2 3
    trans 1 0 2
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import product

from .lang import Assign, Choose, Command, Loop, Mul, Program, Var, Zero, seq_of
from .parser import ParseError


@dataclass(frozen=True)
class Nfa:
    n_states: int
    start: int
    accepting: frozenset[int]
    transitions: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        n = self.n_states
        if n < 1:
            raise ValueError("an NFA needs at least one state")
        if not 1 <= self.start <= n:
            raise ValueError(f"start state {self.start} out of range 1..{n}")
        if not self.accepting:
            raise ValueError("the accepting set must be nonempty")
        bad = [q for q in self.accepting if not 1 <= q <= n]
        if bad:
            raise ValueError(f"accepting states out of range: {sorted(bad)}")
        for q, a, q2 in self.transitions:
            if not (1 <= q <= n and 1 <= q2 <= n) or a not in (0, 1):
                raise ValueError(f"bad transition {(q, a, q2)}")

    def predecessors(self, q: int, a: int) -> list[int]:
        return sorted(p for p, b, p2 in self.transitions if b == a and p2 == q)

    def step(self, states: frozenset[int], a: int) -> frozenset[int]:
        return frozenset(q2 for q, b, q2 in self.transitions if b == a and q in states)

    def accepts(self, word) -> bool:
        cur = frozenset([self.start])
        for a in word:
            cur = self.step(cur, a)
        return bool(cur & self.accepting)


def parse_nfa(text: str) -> Nfa:
    n = start = None
    accepting: set[int] = set()
    seen_accept = False
    trans: set[tuple[int, int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        col = raw.index(head) + 1
        try:
            nums = [int(x) for x in args]
        except ValueError:
            raise ParseError(lineno, col, f"non-integer argument in {line!r}") from None
        if head == "states" and len(nums) == 1:
            n = nums[0]
        elif head == "start" and len(nums) == 1:
            start = nums[0]
        elif head == "accept":
            seen_accept = True
            accepting.update(nums)
        elif head == "trans" and len(nums) == 3:
            trans.add((nums[0], nums[1], nums[2]))
        else:
            raise ParseError(lineno, col, f"bad directive {line!r}")
    last = max(len(text.splitlines()), 1)
    if n is None:
        raise ParseError(last, 1, "missing 'states' directive")
    if start is None:
        raise ParseError(last, 1, "missing 'start' directive")
    if not seen_accept or not accepting:
        raise ParseError(last, 1, "the accepting set must be nonempty")
    try:
        return Nfa(n, start, frozenset(accepting), frozenset(trans))
    except ValueError as exc:
        raise ParseError(last, 1, str(exc)) from None


def render_nfa(a: Nfa) -> str:
    lines = [f"states {a.n_states}", f"start {a.start}",
             "accept " + " ".join(str(q) for q in sorted(a.accepting))]
    lines += [f"trans {q} {s} {q2}" for q, s, q2 in sorted(a.transitions)]
    return "\n".join(lines) + "\n"


def is_universal(a: Nfa) -> bool:
    """Breadth-first search over reachable state subsets (the empty set included)."""
    init = frozenset([a.start])
    seen = {init}
    queue = deque([init])
    while queue:
        cur = queue.popleft()
        if not cur & a.accepting:
            return False
        for sym in (0, 1):
            nxt = a.step(cur, sym)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Layout:
    """Variable indices of the generated program for an ``n``-state NFA."""

    n: int

    def x(self, q: int) -> int:
        return q

    def xp(self, q: int) -> int:
        return self.n + q

    @property
    def y(self) -> int:
        return 2 * self.n + 1

    @property
    def z(self) -> int:
        return 2 * self.n + 2

    @property
    def n_vars(self) -> int:
        return 2 * self.n + 2


def _product_into(target: int, factors: list[int]) -> list[Command]:
    return [Assign(target, Mul(target, f)) for f in factors]


def nfa_to_program(a: Nfa) -> Program:
    lay = Layout(a.n_states)
    z = lay.z

    def letter(sym: int) -> Command:
        cmds: list[Command] = []
        for q in range(1, a.n_states + 1):
            xq = lay.xp(q)
            cmds.append(Assign(xq, Var(z)))
            cmds += _product_into(xq, [lay.x(p) for p in a.predecessors(q, sym)])
        cmds += [Assign(lay.x(q), Var(lay.xp(q))) for q in range(1, a.n_states + 1)]
        return seq_of(*cmds)

    fin = _product_into(z, [lay.x(q) for q in sorted(a.accepting)])
    root = seq_of(
        Assign(lay.x(a.start), Zero()),
        Loop(lay.y, Choose(letter(0), letter(1))),
        *fin,
    )
    return Program(lay.n_vars, root)


def all_nfas(n_states: int):
    """Every NFA with ``n_states`` states: transitions x accepting sets x starts."""
    states = range(1, n_states + 1)
    edges = [(q, s, q2) for q in states for s in (0, 1) for q2 in states]
    acc_sets = [frozenset(q for q, bit in zip(states, bits) if bit)
                for bits in product((0, 1), repeat=n_states)]
    acc_sets = [s for s in acc_sets if s]
    for mask in range(1 << len(edges)):
        trans = frozenset(e for k, e in enumerate(edges) if mask >> k & 1)
        for acc in acc_sets:
            for start in states:
                yield Nfa(n_states, start, acc, trans)


def random_nfa(rng: random.Random, n_states: int, density: float = 0.35) -> Nfa:
    states = range(1, n_states + 1)
    trans = frozenset((q, s, q2) for q in states for s in (0, 1) for q2 in states
                      if rng.random() < density)
    acc = frozenset(q for q in states if rng.random() < 0.5) or frozenset([rng.choice(states)])
    return Nfa(n_states, rng.choice(states), acc, trans)
