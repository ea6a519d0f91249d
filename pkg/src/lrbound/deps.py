"""Dependence facts and their algebra.

A unary fact ``Unary(i, t, j)`` says the final value of ``Xj`` can depend on
the initial ``Xi`` with growth type ``t``. A binary fact ``Binary(i, i2, j, j2)``
says that ``i -> j`` and ``i2 -> j2`` hold at the same time, both with a
near-identity type. Binary facts are unordered conjunctions, so they are
stored with ``(i, j) <= (i2, j2)``; use :func:`binary` to build one.

Composition of binary facts can match the two halves either way round, so
the engine works with :func:`compose_all`, which returns every result.
:func:`compose` is the operation on ordered operands.
"""
from __future__ import annotations

from enum import Enum, IntEnum
from itertools import combinations
from typing import NamedTuple, Union


class DepType(IntEnum):
    T1 = 0       # identity
    T1PLUS = 1   # additive
    T2 = 2       # multiplicative
    T3 = 3       # exponential (poly mode) / non-linear (lin mode)

    def __str__(self) -> str:
        return _TYPE_NAMES[self]


_TYPE_NAMES = {DepType.T1: "1", DepType.T1PLUS: "1+", DepType.T2: "2", DepType.T3: "3"}

T1, T1PLUS, T2, T3 = DepType.T1, DepType.T1PLUS, DepType.T2, DepType.T3


class Mode(Enum):
    POLY = "poly"
    LIN = "lin"


def near_identity(t: DepType) -> bool:
    return t <= T1PLUS


def join(a: DepType, b: DepType) -> DepType:
    return a if a >= b else b


class Unary(NamedTuple):
    src: int
    typ: DepType
    dst: int

    def __str__(self) -> str:
        return f"{self.src} -{self.typ}-> {self.dst}"


class Binary(NamedTuple):
    i: int
    i2: int
    j: int
    j2: int

    def __str__(self) -> str:
        return f"({self.i},{self.i2}) => ({self.j},{self.j2})"


Dependence = Union[Unary, Binary]


def binary(i: int, i2: int, j: int, j2: int) -> Binary:
    """Canonical binary fact for the pair ``i -> j``, ``i2 -> j2``."""
    if (i, j) > (i2, j2):
        return Binary(i2, i, j2, j)
    return Binary(i, i2, j, j2)


def canonical(d: Dependence) -> Dependence:
    return binary(*d) if isinstance(d, Binary) else d


def _bb(i: int, i2: int, k: int, k2: int) -> Dependence:
    if i == i2 and k == k2:
        return Unary(i, T2, k)
    return binary(i, i2, k, k2)


def compose_all(a: Dependence, b: Dependence) -> list[Dependence]:
    """All results of ``a . b`` over both orientations of binary operands.

    Empty when no composition rule applies. At most two results, and two
    only when ``a``'s targets and ``b``'s sources are one repeated index.
    """
    if type(a) is Unary:
        if type(b) is Unary:
            if a.dst == b.src:
                return [Unary(a.src, a.typ if a.typ >= b.typ else b.typ, b.dst)]
            return []
        if b.i == b.i2 == a.dst and a.typ <= T1PLUS:
            return [Binary(a.src, a.src, b.j, b.j2)]
        return []
    if type(b) is Unary:
        if a.j == a.j2 == b.src and b.typ <= T1PLUS:
            return [Binary(a.i, a.i2, b.dst, b.dst)]
        return []
    out = []
    if a.j == b.i and a.j2 == b.i2:
        out.append(_bb(a.i, a.i2, b.j, b.j2))
    if a.j == b.i2 and a.j2 == b.i:
        r = _bb(a.i, a.i2, b.j2, b.j)
        if not out or out[0] != r:
            out.append(r)
    return out


def compose(a: Dependence, b: Dependence) -> Dependence | None:
    """``a . b`` with binary operands taken in the order given, or ``None``.

    The middle indices must agree exactly as written; the result is not
    canonicalized. The engine uses :func:`compose_all` instead.
    """
    if type(a) is Unary:
        if type(b) is Unary:
            return Unary(a.src, join(a.typ, b.typ), b.dst) if a.dst == b.src else None
        if b.i == b.i2 == a.dst and near_identity(a.typ):
            return Binary(a.src, a.src, b.j, b.j2)
        return None
    if type(b) is Unary:
        if a.j == a.j2 == b.src and near_identity(b.typ):
            return Binary(a.i, a.i2, b.dst, b.dst)
        return None
    if (a.j, a.j2) != (b.i, b.i2):
        return None
    if a.i == a.i2 and b.j == b.j2:
        return Unary(a.i, T2, b.j)
    return Binary(a.i, a.i2, b.j, b.j2)


def loop_correct(mode: Mode, l: int, d: Dependence) -> Unary | None:
    """Loop correction for loop variable ``l``; ``None`` outside its domain."""
    if type(d) is not Unary or d.src != d.dst:
        return None
    if d.typ == T1PLUS:
        return Unary(l, T2 if mode is Mode.POLY else T3, d.dst)
    if d.typ == T2:
        return Unary(l, T3, d.dst)
    return None


def enumerate_deps(n: int, ordered: bool = False) -> list[Dependence]:
    """Every unary fact and every canonical binary fact over ``1..n``.

    With ``ordered`` both orientations of each binary fact are listed.
    """
    idx = range(1, n + 1)
    unary = [Unary(i, t, j) for i in idx for t in DepType for j in idx]
    pairs = [(i, j) for i in idx for j in idx]
    binaries = [Binary(p[0], q[0], p[1], q[1]) for p, q in combinations(pairs, 2)]
    if ordered:
        binaries += [Binary(q[0], p[0], q[1], p[1]) for p, q in combinations(pairs, 2)]
    return unary + binaries


def sources(d: Dependence) -> tuple[int, ...]:
    return (d.src,) if type(d) is Unary else (d.i, d.i2)


def targets(d: Dependence) -> tuple[int, ...]:
    return (d.dst,) if type(d) is Unary else (d.j, d.j2)


def source_key(d: Dependence) -> tuple[int, ...]:
    """Index key used to find right-hand composition partners."""
    return (d.src,) if type(d) is Unary else (d.i, d.i2) if d.i <= d.i2 else (d.i2, d.i)


def partner_keys(d: Dependence) -> tuple[tuple[int, ...], ...]:
    """Source keys of every ``b`` for which ``d . b`` may be defined."""
    if type(d) is Unary:
        return ((d.dst,), (d.dst, d.dst))
    if d.j == d.j2:
        return ((d.j,), (d.j, d.j))
    return ((d.j, d.j2) if d.j < d.j2 else (d.j2, d.j),)
