"""Exhaustive concrete semantics.

Runs a command from one initial store and collects every final store the
nondeterministic semantics allows. Each reachable store is paired with the
largest step count of any execution reaching it; that is enough to recover
the maximum step count of the whole relation, because the steps taken after
a store is reached do not depend on how it was reached.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lang import Add, Assign, Choose, Command, Loop, Mul, Seq, Skip, Var, Zero, max_var

Store = tuple[int, ...]


@dataclass(frozen=True)
class ExecLimits:
    max_stores: int = 10**6
    max_value: int = 10**12

    def __post_init__(self):
        if self.max_stores <= 0 or self.max_value <= 0:
            raise ValueError("execution limits must be positive")


@dataclass(frozen=True)
class ExecResult:
    final_stores: frozenset[Store]
    max_per_var: tuple[int, ...]
    max_step_count: int
    truncated: bool


class _Runner:
    def __init__(self, limits: ExecLimits):
        self.limits = limits
        self.truncated = False

    def _merge(self, into: dict[Store, int], store: Store, steps: int) -> None:
        old = into.get(store)
        if old is None:
            if len(into) >= self.limits.max_stores:
                self.truncated = True
                return
            into[store] = steps
        elif steps > old:
            into[store] = steps

    def run(self, c: Command, states: dict[Store, int]) -> dict[Store, int]:
        if not states:
            return states
        if isinstance(c, Skip):
            return {s: t + 1 for s, t in states.items()}
        if isinstance(c, Assign):
            return self._assign(c, states)
        if isinstance(c, Seq):
            return self.run(c.c2, self.run(c.c1, states))
        if isinstance(c, Choose):
            out = dict(self.run(c.c1, states))
            for s, t in self.run(c.c2, states).items():
                self._merge(out, s, t)
            return out
        if isinstance(c, Loop):
            return self._loop(c, states)
        raise TypeError(f"not a command: {c!r}")

    def _assign(self, c: Assign, states: dict[Store, int]) -> dict[Store, int]:
        e, idx = c.e, c.l - 1
        out: dict[Store, int] = {}
        for s, t in states.items():
            if isinstance(e, Zero):
                v = 0
            elif isinstance(e, Var):
                v = s[e.r - 1]
            elif isinstance(e, Add):
                v = s[e.r - 1] + s[e.s - 1]
            elif isinstance(e, Mul):
                v = s[e.r - 1] * s[e.s - 1]
            else:
                raise TypeError(f"not an expression: {e!r}")
            if v > self.limits.max_value:
                self.truncated = True
                continue
            self._merge(out, s[:idx] + (v,) + s[idx + 1:], t + 1)
        return out

    def _loop(self, c: Loop, states: dict[Store, int]) -> dict[Store, int]:
        # The loop variable is never assigned in the body, so every store
        # descending from s keeps the iteration bound s[l]. Stores with
        # different bounds never meet, so each bound is iterated on its own.
        idx = c.l - 1
        groups: dict[int, dict[Store, int]] = {}
        for s, t in states.items():
            groups.setdefault(s[idx], {})[s] = t
        out = dict(states)
        for bound, frontier in sorted(groups.items()):
            prev: dict[Store, int] | None = None
            i = 0
            while frontier and i < bound:
                i += 1
                if prev is not None:
                    frontier, i = self._accelerate(prev, frontier, i, bound)
                prev = frontier
                frontier = self.run(c.body, frontier)
                for s, t in frontier.items():
                    self._merge(out, s, t)
        return out

    @staticmethod
    def _accelerate(prev, cur, i, bound):
        """Skip iterations whose input is the previous one with steps shifted.

        The body commutes with adding a constant to every step count, so if
        iteration i sees the same stores as iteration i-1 with steps raised by
        d, so does every later one. The outputs of skipped iterations are
        dominated by the output of the last one.
        """
        if i >= bound or cur.keys() != prev.keys():
            return cur, i
        deltas = {t - prev[s] for s, t in cur.items()}
        if len(deltas) != 1:
            return cur, i
        d = deltas.pop()
        if d < 0:
            return cur, i
        return {s: t + (bound - i) * d for s, t in cur.items()}, bound


def _check_store(s0: Sequence[int], c: Command) -> Store:
    s0 = tuple(s0)
    if any(v < 0 for v in s0):
        raise ValueError(f"store entries must be nonnegative: {s0}")
    if max_var(c) > len(s0):
        raise ValueError(f"store of length {len(s0)} too short for X{max_var(c)}")
    return s0


def reachable_stores(c: Command, s0: Sequence[int], limits: ExecLimits | None = None) -> ExecResult:
    s0 = _check_store(s0, c)
    runner = _Runner(limits or ExecLimits())
    finals = runner.run(c, {s0: 0})
    if finals:
        maxima = tuple(max(col) for col in zip(*finals))
    else:
        maxima = tuple(0 for _ in s0)
    return ExecResult(
        final_stores=frozenset(finals),
        max_per_var=maxima,
        max_step_count=max(finals.values(), default=0),
        truncated=runner.truncated,
    )


def max_outputs(c: Command, s0: Sequence[int], limits: ExecLimits | None = None) -> tuple[int, ...]:
    return reachable_stores(c, s0, limits).max_per_var


def growth_probe(
    c: Command,
    probe_values: Iterable[int],
    n: int | None = None,
    limits: ExecLimits | None = None,
) -> dict[int, ExecResult]:
    """Run ``c`` at each uniform input ``(N, ..., N)``.

    ``n`` defaults to the largest variable index in ``c``. Each row keeps its
    own ``truncated`` flag; read ``row.max_per_var`` for the maxima.
    """
    n = max_var(c) if n is None else n
    return {N: reachable_stores(c, (N,) * n, limits) for N in probe_values}
