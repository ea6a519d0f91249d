"""Judgement engine: which dependences a command can realize, per context.

For a command ``c`` and a pre-context ``P`` (variables presumed zero) the
engine computes every pair ``(D, Q)`` such that ``c, P |- D, Q`` is derivable,
where ``Q`` is the post-context (variables guaranteed zero afterwards).
An output ``Xj`` is unbounded (not polynomial, or not linear in lin mode)
exactly when some ``Unary(i, T3, j)`` is derivable from the empty context.

Contexts are held internally as bitmasks (bit ``i`` set = ``Xi`` is zero);
the public functions take and return ``frozenset`` contexts.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .deps import (
    T1, T1PLUS, T2, T3, Dependence, Mode, Unary, binary, compose_all,
    loop_correct, partner_keys, source_key,
)
from .lang import (
    SKIP, Add, Assign, Choose, Command, Loop, Mul, Program, Seq, Skip, Var, Zero,
)

Entry = tuple  # (Dependence, context mask)
JudgementSet = frozenset  # of (Dependence, frozenset[int])


class ResourceLimitError(RuntimeError):
    """The search outgrew its configured caps; no answer is given."""

    def __init__(self, message: str, node: Command | None = None):
        super().__init__(message)
        self.node = node


class ReplayError(AssertionError):
    """A derivation failed to re-check. Always an engine bug."""


@dataclass
class AnalyzerConfig:
    full_l2_fixpoint: bool = False
    post_weakening: bool = False
    max_entries: int = 1 << 20
    max_contexts_per_node: int = 1 << 16


# ---------------------------------------------------------------------------
# context helpers


def to_mask(ctx: Iterable[int]) -> int:
    m = 0
    for i in ctx:
        m |= 1 << i
    return m


def to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _public(entries: Iterable[Entry]) -> JudgementSet:
    return frozenset((d, to_set(q)) for d, q in entries)


def _index(entries: Iterable[Entry]) -> dict:
    idx = defaultdict(list)
    for e in entries:
        idx[source_key(e[0])].append(e)
    return idx


# ---------------------------------------------------------------------------
# assignments and skip


def atomic_unary(mode: Mode, c: Command, P: int, n: int) -> tuple[list[tuple[Unary, str]], int]:
    """Unary facts (with the rule that produced each) and the post-context."""
    ids = [i for i in range(1, n + 1) if not P >> i & 1]
    if isinstance(c, Skip):
        return [(Unary(i, T1, i), "skip") for i in ids], P
    if not isinstance(c, Assign):
        raise TypeError(f"not an atomic command: {c!r}")
    l, e = c.l, c.e
    bl = 1 << l
    facts = [(Unary(i, T1, i), "frame") for i in ids if i != l]
    if isinstance(e, Zero):
        return facts, P | bl
    r = e.r
    r_zero = bool(P >> r & 1)
    if isinstance(e, Var):
        Q = (P & ~bl) | (bl if r_zero else 0)
        if not r_zero:
            facts.append((Unary(r, T1, l), "copy"))
        return facts, Q
    s = e.s
    s_zero = bool(P >> s & 1)
    if isinstance(e, Mul):
        Q = (P & ~bl) | (bl if r_zero or s_zero else 0)
        if not (r_zero or s_zero):
            t = T2 if mode is Mode.POLY else T3
            for src in sorted({r, s}):
                facts.append((Unary(src, t, l), "mul"))
        return facts, Q
    if isinstance(e, Add):
        if r == s:
            # X + X is 2*X: a multiplicative fact, linear in one step.
            Q = (P & ~bl) | (bl if r_zero else 0)
            if not r_zero:
                facts.append((Unary(r, T2, l), "double"))
            return facts, Q
        Q = (P & ~bl) | (bl if r_zero and s_zero else 0)
        if not r_zero and s_zero:
            facts.append((Unary(r, T1, l), "add"))
        elif r_zero and not s_zero:
            facts.append((Unary(s, T1, l), "add"))
        elif not r_zero and not s_zero:
            facts.append((Unary(r, T1PLUS, l), "add"))
            facts.append((Unary(s, T1PLUS, l), "add"))
        return facts, Q
    raise TypeError(f"not an expression: {e!r}")


def _binary_pairs(unary: list[Unary], P: int, Q: int):
    near = [u for u in unary
            if u.typ <= T1PLUS and not P >> u.src & 1 and not Q >> u.dst & 1]
    for a, b in itertools.combinations(near, 2):
        if (a.src, a.dst) != (b.src, b.dst):
            yield binary(a.src, b.src, a.dst, b.dst), a, b


def atomic_judgements(mode: Mode, c: Command, P: Iterable[int], n: int) -> JudgementSet:
    """All judgements of an assignment or ``skip``, binary facts included."""
    Pm = to_mask(P)
    facts, Q = atomic_unary(mode, c, Pm, n)
    unary = [u for u, _ in facts]
    out = {(u, Q) for u in unary}
    out.update((b, Q) for b, _, _ in _binary_pairs(unary, Pm, Q))
    return _public(out)


# ---------------------------------------------------------------------------
# loops


class _LoopSolver:
    """Closure of one loop node under rules L0, L1 and L2.

    ``body(P)`` and ``skip(P)`` return judgement sets (mask contexts) of the
    loop body and of ``skip``. Results, intermediate sets and the first
    derivation of every entry are kept for reuse and witness extraction.
    """

    def __init__(self, mode: Mode, l: int, body, skip, full_l2_fixpoint: bool = False,
                 charge: Callable[[int, int, Iterable[Entry]], None] | None = None):
        self.mode = mode
        self.l = l
        self.body = body
        self.skip = skip
        self.full = full_l2_fixpoint
        self.charge = charge or (lambda P, size, entries: None)
        self._body_idx: dict[int, dict] = {}
        self._base: dict[int, frozenset] = {}
        self._base_idx: dict[int, dict] = {}
        self.results: dict[int, frozenset] = {}
        # (P, D, Q) -> "L0" | "L1"
        self.base_prov: dict[tuple, str] = {}
        # (P0, D, Q) -> (previous chain entry or None, body entry (Pb, Db, Qb))
        self.chain_prov: dict[tuple, tuple] = {}
        # (P0, D, Q) -> ((P0, D1, P1), (P1, D2, P1), (P1, D3, P3))
        self.l2_prov: dict[tuple, tuple] = {}

    def _bidx(self, Q: int) -> dict:
        idx = self._body_idx.get(Q)
        if idx is None:
            idx = self._body_idx[Q] = _index(self.body(Q))
        return idx

    def _chains(self, P0: int) -> set:
        """L1: every left-folded chain ``D1 . ... . Dm`` with ``m >= 1``."""
        T: set = set()
        work = []
        for D, Q in self.body(P0):
            e = (D, Q)
            if e not in T:
                T.add(e)
                self.chain_prov[(P0, D, Q)] = (None, (P0, D, Q))
                work.append(e)
        while work:
            D, Q = work.pop()
            idx = self._bidx(Q)
            for key in partner_keys(D):
                for D2, R in idx.get(key, ()):
                    for Dr in compose_all(D, D2):
                        e = (Dr, R)
                        if e not in T:
                            T.add(e)
                            self.chain_prov[(P0, Dr, R)] = ((D, Q), (Q, D2, R))
                            work.append(e)
        return T

    def base(self, P: int) -> frozenset:
        """Loop judgements at ``P`` derivable by L0 or L1 alone."""
        got = self._base.get(P)
        if got is not None:
            return got
        out = set()
        for D, Q in self.skip(P):
            if Q == P:
                out.add((D, Q))
                self.base_prov.setdefault((P, D, Q), "L0")
        if not P >> self.l & 1:
            for D, Q in self._chains(P):
                if (D, Q) not in out:
                    out.add((D, Q))
                    self.base_prov.setdefault((P, D, Q), "L1")
        got = self._base[P] = frozenset(out)
        self.charge(P, len(got), got)
        return got

    def _bsidx(self, P: int) -> dict:
        idx = self._base_idx.get(P)
        if idx is None:
            idx = self._base_idx[P] = _index(self.base(P))
        return idx

    def _l2_step(self, P0: int, J0: Iterable[Entry], J1_of, idx1_of, add) -> None:
        """One round of L2 with preambles from ``J0`` and the rest from ``J1_of(P1)``."""
        by_p1 = defaultdict(list)
        for D1, P1 in J0:
            by_p1[P1].append(D1)
        for P1, d1s in by_p1.items():
            J1 = J1_of(P1)
            iterative = []
            for D2, Q2 in J1:
                if Q2 == P1:
                    lc = loop_correct(self.mode, self.l, D2)
                    if lc is not None:
                        iterative.append((D2, lc))
            if not iterative:
                continue
            idx1 = idx1_of(P1)
            for D1 in d1s:
                for D2, lc in iterative:
                    for X in compose_all(D1, lc):
                        for key in partner_keys(X):
                            for D3, P3 in idx1.get(key, ()):
                                for Dr in compose_all(X, D3):
                                    add(Dr, P3, ((P0, D1, P1), (P1, D2, P1), (P1, D3, P3)))

    def solve(self, P0: int) -> frozenset:
        got = self.results.get(P0)
        if got is not None:
            return got
        if self.full and not P0 >> self.l & 1:
            self._solve_full(P0)
            return self.results[P0]
        base0 = self.base(P0)
        out = set(base0)
        if not P0 >> self.l & 1:
            def add(D, Q, why):
                if (D, Q) not in out:
                    out.add((D, Q))
                    self.l2_prov.setdefault((P0, D, Q), why)
            # Premises come from L0/L1 only; the one-shot pass is complete.
            self._l2_step(P0, base0, self.base, self._bsidx, add)
        got = self.results[P0] = frozenset(out)
        return got

    def _solve_full(self, P0: int) -> None:
        family = [P0]
        seen = {P0}
        for P in family:
            for _, Q in self.base(P):
                if Q not in seen:
                    seen.add(Q)
                    family.append(Q)
        J = {P: set(self.base(P)) for P in family}
        changed = True
        while changed:
            changed = False
            idxs = {P: _index(J[P]) for P in family}
            for P in family:
                new = []

                def add(D, Q, why, P=P, new=new):
                    if (D, Q) not in J[P]:
                        new.append((D, Q, why))
                self._l2_step(P, list(J[P]), lambda p: J[p], lambda p: idxs[p], add)
                for D, Q, why in new:
                    if (D, Q) not in J[P]:
                        J[P].add((D, Q))
                        self.l2_prov.setdefault((P, D, Q), why)
                        changed = True
        for P in family:
            self.results.setdefault(P, frozenset(J[P]))


def loop_closure(mode: Mode, l: int, body_analyze: Callable[[frozenset[int]], Iterable],
                 P0: Iterable[int], n: int, full_l2_fixpoint: bool = False) -> JudgementSet:
    """Loop judgements of ``loop Xl { body }`` at ``P0``.

    ``body_analyze`` maps a pre-context to the body's judgement set (pairs
    of dependence and post-context, as returned by :func:`analyze`).
    """
    cache: dict[int, frozenset] = {}

    def body(P: int) -> frozenset:
        if P not in cache:
            cache[P] = frozenset((d, to_mask(q)) for d, q in body_analyze(to_set(P)))
        return cache[P]

    def skip(P: int) -> frozenset:
        return frozenset((d, to_mask(q)) for d, q in atomic_judgements(mode, SKIP, to_set(P), n))

    solver = _LoopSolver(mode, l, body, skip, full_l2_fixpoint)
    return _public(solver.solve(to_mask(P0)))


# ---------------------------------------------------------------------------
# derivations


@dataclass(frozen=True, eq=False)
class Derivation:
    """One rule application; ``premises`` are the sub-derivations it uses."""

    rule: str
    command: Command
    pre: frozenset[int]
    dep: Dependence
    post: frozenset[int]
    premises: tuple[Derivation, ...] = ()

    def conclusion(self) -> tuple:
        return (self.pre, self.dep, self.post)


def _ctx_str(ctx: frozenset[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(ctx)) + "}"


def _short(c: Command, width: int = 48) -> str:
    from .parser import render_command
    text = render_command(c)
    return text if len(text) <= width else text[: width - 3] + "..."


def render_derivation(d: Derivation) -> str:
    """Plain text, one rule application per line, indented by depth."""
    lines = []
    stack = [(d, 0)]
    while stack:
        node, depth = stack.pop()
        lines.append(f"{'  ' * depth}[{node.rule}] {_short(node.command)}, "
                     f"{_ctx_str(node.pre)} |- {node.dep}, {_ctx_str(node.post)}")
        for p in reversed(node.premises):
            stack.append((p, depth + 1))
    return "\n".join(lines)


ATOMIC_RULES = {"skip", "frame", "copy", "mul", "add", "double"}


def check_derivation(d: Derivation, mode: Mode, n: int) -> None:
    """Re-apply every rule in ``d``; raise :class:`ReplayError` on a mismatch."""
    done: set[int] = set()

    def fail(node: Derivation, why: str):
        raise ReplayError(f"[{node.rule}] {_short(node.command)}: {why}")

    def check(node: Derivation) -> None:
        if id(node) in done:
            return
        for p in node.premises:
            check(p)
        c, P, D, Q, ps = node.command, node.pre, node.dep, node.post, node.premises
        rule = node.rule
        if rule in ATOMIC_RULES:
            facts, Qm = atomic_unary(mode, c, to_mask(P), n)
            if ps or to_mask(Q) != Qm or (D, rule) not in facts:
                fail(node, "not an instance of the assignment rules")
        elif rule == "binary":
            if len(ps) != 2 or any(p.rule not in ATOMIC_RULES or p.command is not c
                                   or p.pre != P or p.post != Q for p in ps):
                fail(node, "binary rule needs two unary facts of the same command")
            a, b = ps[0].dep, ps[1].dep
            if not (a.typ <= T1PLUS and b.typ <= T1PLUS):
                fail(node, "binary rule on non-near-identity facts")
            if a.src in P or b.src in P or a.dst in Q or b.dst in Q:
                fail(node, "binary rule side condition on contexts")
            if (a.src, a.dst) == (b.src, b.dst) or D != binary(a.src, b.src, a.dst, b.dst):
                fail(node, "binary rule conclusion mismatch")
        elif rule == "C":
            if not isinstance(c, Choose) or len(ps) != 1:
                fail(node, "choice rule shape")
            p = ps[0]
            if (p.command is not c.c1 and p.command is not c.c2) or p.conclusion() != node.conclusion():
                fail(node, "choice premise mismatch")
        elif rule == "S":
            if not isinstance(c, Seq) or len(ps) != 2:
                fail(node, "sequence rule shape")
            p1, p2 = ps
            if p1.command is not c.c1 or p2.command is not c.c2:
                fail(node, "sequence premises on wrong commands")
            if p1.pre != P or p1.post != p2.pre or p2.post != Q:
                fail(node, "sequence contexts do not chain")
            if D not in compose_all(p1.dep, p2.dep):
                fail(node, "sequence composition mismatch")
        elif rule == "W":
            if len(ps) != 1 or ps[0].command is not c or ps[0].pre != P or ps[0].dep != D \
                    or not Q <= ps[0].post:
                fail(node, "weakening premise mismatch")
        elif rule == "L0":
            if not isinstance(c, Loop) or len(ps) != 1:
                fail(node, "L0 shape")
            p = ps[0]
            if not isinstance(p.command, Skip) or p.pre != P or p.post != P or Q != P or p.dep != D:
                fail(node, "L0 premise mismatch")
        elif rule == "L1":
            if not isinstance(c, Loop) or not ps or c.l in P:
                fail(node, "L1 shape or loop variable in pre-context")
            if any(p.command is not c.body for p in ps):
                fail(node, "L1 premises must be about the loop body")
            if ps[0].pre != P or ps[-1].post != Q:
                fail(node, "L1 end contexts")
            for a, b in zip(ps, ps[1:]):
                if a.post != b.pre:
                    fail(node, "L1 contexts do not chain")
            acc = [ps[0].dep]
            for p in ps[1:]:
                acc = [r for x in acc for r in compose_all(x, p.dep)]
            if D not in acc:
                fail(node, "L1 composition mismatch")
        elif rule == "L2":
            if not isinstance(c, Loop) or len(ps) != 3 or c.l in P:
                fail(node, "L2 shape or loop variable in pre-context")
            p1, p2, p3 = ps
            if any(p.command is not c for p in ps):
                fail(node, "L2 premises must be about the same loop")
            P1 = p1.post
            if p1.pre != P or p2.pre != P1 or p2.post != P1 or p3.pre != P1 or p3.post != Q:
                fail(node, "L2 contexts")
            lc = loop_correct(mode, c.l, p2.dep)
            if lc is None:
                fail(node, "loop correction undefined on the iterated fact")
            acc = [r for x in compose_all(p1.dep, lc) for r in compose_all(x, p3.dep)]
            if D not in acc:
                fail(node, "L2 composition mismatch")
        else:
            fail(node, f"unknown rule {rule!r}")
        done.add(id(node))

    check(d)


# ---------------------------------------------------------------------------
# the engine


class Analyzer:
    """Memoized judgement search for one variable count and mode.

    Memo tables are keyed by node identity, so an instance should be used
    with one program (or with trees that are kept alive).
    """

    def __init__(self, n: int, mode: Mode = Mode.POLY, config: AnalyzerConfig | None = None):
        self.n = n
        self.mode = mode
        self.config = config or AnalyzerConfig()
        self._memo: dict[tuple[int, int], frozenset] = {}
        self._idx: dict[tuple[int, int], dict] = {}
        self._prov: dict[tuple, tuple] = {}
        self._nodes: dict[int, Command] = {id(SKIP): SKIP}
        self._loops: dict[int, _LoopSolver] = {}
        self._node_contexts: dict[int, set[int]] = defaultdict(set)
        self._contexts: set[int] = set()
        self.entries = 0

    # -- bookkeeping -------------------------------------------------------

    def _charge(self, c: Command, P: int, size: int, entries: Iterable[Entry]) -> None:
        self.entries += size
        self._contexts.add(P)
        self._contexts.update(q for _, q in entries)
        ctxs = self._node_contexts[id(c)]
        ctxs.add(P)
        if self.entries > self.config.max_entries:
            raise ResourceLimitError(
                f"judgement budget of {self.config.max_entries} entries exceeded "
                f"at {_short(c)}", c)
        if len(ctxs) > self.config.max_contexts_per_node:
            raise ResourceLimitError(
                f"more than {self.config.max_contexts_per_node} contexts explored "
                f"at {_short(c)}", c)

    def stats(self) -> dict:
        return {
            "contexts": len(self._contexts),
            "entries": self.entries,
            "memo_keys": len(self._memo),
        }

    # -- public ------------------------------------------------------------

    def judgements(self, c: Command, P: Iterable[int] = ()) -> JudgementSet:
        return _public(self._analyze(c, to_mask(P)))

    def loop_judgements(self) -> dict[tuple[int, frozenset[int]], JudgementSet]:
        """Every memoized loop result, keyed by (node id, pre-context)."""
        return {(nid, to_set(P)): _public(v) for (nid, P), v in self._memo.items()
                if isinstance(self._nodes[nid], Loop)}

    def unbounded_entries(self, root: Command, j: int) -> list[tuple[Unary, frozenset[int]]]:
        hits = [(d, q) for d, q in self._analyze(root, 0)
                if type(d) is Unary and d.typ == T3 and d.dst == j]
        hits.sort(key=lambda e: (e[0].src, bin(e[1]).count("1"), e[1]))
        return [(d, to_set(q)) for d, q in hits]

    # -- search ------------------------------------------------------------

    def _analyze(self, c: Command, P: int) -> frozenset:
        key = (id(c), P)
        got = self._memo.get(key)
        if got is not None:
            return got
        self._nodes[id(c)] = c
        if isinstance(c, (Skip, Assign)):
            out = self._atomic(c, P)
        elif isinstance(c, Choose):
            out = {}
            for child in (c.c1, c.c2):
                for D, Q in self._analyze(child, P):
                    if (D, Q) not in out:
                        out[(D, Q)] = None
                        self._prov.setdefault((id(c), P, D, Q), ("C", ((id(child), P, D, Q),)))
            out = set(out)
        elif isinstance(c, Seq):
            out = set()
            for D1, Q in self._analyze(c.c1, P):
                idx = self._index(c.c2, Q)
                for key2 in partner_keys(D1):
                    for D2, R in idx.get(key2, ()):
                        for D in compose_all(D1, D2):
                            if (D, R) not in out:
                                out.add((D, R))
                                self._prov.setdefault(
                                    (id(c), P, D, R),
                                    ("S", ((id(c.c1), P, D1, Q), (id(c.c2), Q, D2, R))))
        elif isinstance(c, Loop):
            out = set(self._solver(c).solve(P))
        else:
            raise TypeError(f"not a command: {c!r}")
        if self.config.post_weakening:
            for D, Q in list(out):
                for Qw in _submasks(Q):
                    if (D, Qw) not in out:
                        out.add((D, Qw))
                        self._prov.setdefault((id(c), P, D, Qw), ("W", ((id(c), P, D, Q),)))
        result = frozenset(out)
        self._charge(c, P, len(result), result)
        self._memo[key] = result
        return result

    def _index(self, c: Command, P: int) -> dict:
        key = (id(c), P)
        idx = self._idx.get(key)
        if idx is None:
            idx = self._idx[key] = _index(self._analyze(c, P))
        return idx

    def _atomic(self, c: Command, P: int) -> set:
        facts, Q = atomic_unary(self.mode, c, P, self.n)
        nid = id(c)
        out = set()
        for u, rule in facts:
            out.add((u, Q))
            self._prov.setdefault((nid, P, u, Q), (rule, ()))
        for b, u1, u2 in _binary_pairs([u for u, _ in facts], P, Q):
            if (b, Q) not in out:
                out.add((b, Q))
                self._prov[(nid, P, b, Q)] = ("binary", ((nid, P, u1, Q), (nid, P, u2, Q)))
        return out

    def _solver(self, c: Loop) -> _LoopSolver:
        s = self._loops.get(id(c))
        if s is None:
            s = _LoopSolver(
                self.mode, c.l,
                body=lambda P: self._analyze(c.body, P),
                skip=lambda P: self._analyze(SKIP, P),
                full_l2_fixpoint=self.config.full_l2_fixpoint,
                charge=lambda P, size, entries: self._charge(c, P, size, entries),
            )
            self._loops[id(c)] = s
        return s

    # -- witnesses ---------------------------------------------------------

    def derivation(self, c: Command, P: Iterable[int], D: Dependence, Q: Iterable[int]) -> Derivation:
        """Rebuild the first recorded derivation of ``c, P |- D, Q``."""
        cache: dict[tuple, Derivation] = {}
        return self._derive(id(c), to_mask(P), D, to_mask(Q), cache)

    def _derive(self, nid: int, P: int, D, Q: int, cache: dict) -> Derivation:
        key = (nid, P, D, Q)
        if key in cache:
            return cache[key]
        c = self._nodes[nid]
        if isinstance(c, Loop) and key not in self._prov:
            out = self._derive_loop(c, P, D, Q, cache)
        else:
            rule, prem = self._prov[key]
            out = Derivation(rule, c, to_set(P), D, to_set(Q),
                             tuple(self._derive(*k, cache) for k in prem))
        cache[key] = out
        return out

    def _derive_loop(self, c: Loop, P: int, D, Q: int, cache: dict) -> Derivation:
        s = self._loops[id(c)]
        k = (P, D, Q)
        how = s.base_prov.get(k)
        if how == "L0":
            prem = (self._derive(id(SKIP), P, D, P, cache),)
        elif how == "L1":
            steps = []
            cur = (D, Q)
            while cur is not None:
                prev, body_entry = s.chain_prov[(P,) + cur]
                steps.append(body_entry)
                cur = prev
            prem = tuple(self._derive(id(c.body), *b, cache) for b in reversed(steps))
        else:
            how = "L2"
            prem = tuple(self._derive(id(c), *k3, cache) for k3 in s.l2_prov[k])
        return Derivation(how, c, to_set(P), D, to_set(Q), prem)

    # -- verdicts ----------------------------------------------------------

    def verdict(self, p: Program, j: int, witness: bool = True) -> Verdict:
        hits = self.unbounded_entries(p.root, j)
        if not hits:
            return Verdict(j, True, self.mode, None)
        w = None
        if witness:
            d, q = hits[0]
            w = self.derivation(p.root, (), d, q)
        return Verdict(j, False, self.mode, w)


@dataclass(frozen=True)
class Verdict:
    variable: int
    bounded: bool
    mode: Mode
    witness: Derivation | None = field(default=None, compare=False)

    @property
    def label(self) -> str:
        base = "POLY" if self.mode is Mode.POLY else "LIN"
        return base if self.bounded else f"NOT-{base}"


# ---------------------------------------------------------------------------
# functional front end


def analyze(mode: Mode, c: Command, P: Iterable[int] = (), n: int | None = None,
            config: AnalyzerConfig | None = None) -> JudgementSet:
    from .lang import max_var
    n = max_var(c) if n is None else n
    return Analyzer(n, mode, config).judgements(c, P)


def verdict(mode: Mode, p: Program, j: int, config: AnalyzerConfig | None = None) -> Verdict:
    return Analyzer(p.n, mode, config).verdict(p, j)


def verdicts(mode: Mode, p: Program, config: AnalyzerConfig | None = None,
             witness: bool = True) -> list[Verdict]:
    a = Analyzer(p.n, mode, config)
    return [a.verdict(p, j, witness) for j in range(1, p.n + 1)]


def witness_derivation(w: Derivation, mode: Mode, n: int) -> tuple[str, bool]:
    """Render ``w`` and replay it; a failed replay raises :class:`ReplayError`."""
    check_derivation(w, mode, n)
    return render_derivation(w), True
