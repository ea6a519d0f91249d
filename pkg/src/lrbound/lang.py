"""Abstract syntax of the core language and structural helpers.

Variables are identified by their 1-based index; ``X3`` is ``3``.
Expressions are unnested: operands are always variables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

VarId = int


# ---------------------------------------------------------------------------
# Expressions


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Var:
    r: VarId


@dataclass(frozen=True)
class Add:
    r: VarId
    s: VarId


@dataclass(frozen=True)
class Mul:
    r: VarId
    s: VarId


Expr = Union[Zero, Var, Add, Mul]


# ---------------------------------------------------------------------------
# Commands


@dataclass(frozen=True)
class Skip:
    pass


@dataclass(frozen=True)
class Assign:
    l: VarId
    e: Expr


@dataclass(frozen=True)
class Seq:
    c1: Command
    c2: Command


@dataclass(frozen=True)
class Loop:
    l: VarId
    body: Command


@dataclass(frozen=True)
class Choose:
    c1: Command
    c2: Command


Command = Union[Skip, Assign, Seq, Loop, Choose]

ATOMIC = (Skip, Assign)

#: Shared skip node; used where the proof system talks about ``skip`` without
#: a corresponding node in the program (rule L0).
SKIP = Skip()


@dataclass(frozen=True)
class Program:
    n: int
    root: Command

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"variable count must be nonnegative, got {self.n}")


@dataclass(frozen=True)
class Violation:
    """A well-formedness problem found by :func:`validate`."""

    path: tuple[str, ...]
    message: str
    node: Command

    def __str__(self) -> str:
        where = "/".join(self.path) or "<root>"
        return f"{where}: {self.message}"


# ---------------------------------------------------------------------------


def expr_vars(e: Expr) -> tuple[VarId, ...]:
    if isinstance(e, Zero):
        return ()
    if isinstance(e, Var):
        return (e.r,)
    return (e.r, e.s)


def children(c: Command) -> tuple[tuple[str, Command], ...]:
    if isinstance(c, (Seq, Choose)):
        return (("c1", c.c1), ("c2", c.c2))
    if isinstance(c, Loop):
        return (("body", c.body),)
    return ()


def walk(c: Command) -> Iterator[Command]:
    """Pre-order traversal (iterative, so deep sequences are fine)."""
    stack = [c]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(child for _, child in reversed(children(node)))


def vars_of(c: Command) -> set[VarId]:
    out: set[VarId] = set()
    for node in walk(c):
        if isinstance(node, Assign):
            out.add(node.l)
            out.update(expr_vars(node.e))
        elif isinstance(node, Loop):
            out.add(node.l)
    return out


def assigned_vars(c: Command) -> set[VarId]:
    return {node.l for node in walk(c) if isinstance(node, Assign)}


def max_var(c: Command) -> int:
    return max(vars_of(c), default=0)


def has_reset(c: Command) -> bool:
    return any(isinstance(node, Assign) and isinstance(node.e, Zero) for node in walk(c))


def validate(root: Command, n: int) -> list[Violation]:
    """Return every well-formedness violation in ``root`` (empty list = valid).

    Two kinds are reported: a loop variable assigned somewhere inside its own
    body, and a variable index outside ``1..n``.
    """
    violations: list[Violation] = []
    # (node, path, enclosing loop variables)
    stack: list[tuple[Command, tuple[str, ...], frozenset[int]]] = [(root, (), frozenset())]
    while stack:
        node, path, guarded = stack.pop()
        used: tuple[int, ...] = ()
        if isinstance(node, Assign):
            used = (node.l,) + expr_vars(node.e)
            if node.l in guarded:
                violations.append(Violation(
                    path, f"X{node.l} assigned inside loop X{node.l}", node))
        elif isinstance(node, Loop):
            used = (node.l,)
        for v in used:
            if not 1 <= v <= n:
                violations.append(Violation(
                    path, f"variable X{v} out of range 1..{n}", node))
        inner = guarded | {node.l} if isinstance(node, Loop) else guarded
        for name, child in reversed(children(node)):
            stack.append((child, path + (name,), inner))
    return violations


def seq_of(*cmds: Command) -> Command:
    """Right-nested sequence of ``cmds`` (``skip`` if empty)."""
    if not cmds:
        return Skip()
    out = cmds[-1]
    for c in reversed(cmds[:-1]):
        out = Seq(c, out)
    return out


def flatten_seq(c: Command) -> list[Command]:
    out: list[Command] = []
    stack = [c]
    while stack:
        node = stack.pop()
        if isinstance(node, Seq):
            stack.append(node.c2)
            stack.append(node.c1)
        else:
            out.append(node)
    return out


def normalize(c: Command) -> Command:
    """Re-associate every sequence to the right, the shape the parser builds."""
    if isinstance(c, Seq):
        return seq_of(*(normalize(x) for x in flatten_seq(c)))
    if isinstance(c, Loop):
        return Loop(c.l, normalize(c.body))
    if isinstance(c, Choose):
        return Choose(normalize(c.c1), normalize(c.c2))
    return c
