"""Named example programs and a seeded random program generator."""
from __future__ import annotations

import random

from .lang import Add, Assign, Choose, Command, Loop, Mul, Program, Seq, Skip, Var, Zero
from .parser import parse_program

# Compound right-hand sides are written already unfolded through a temporary.
PROGRAMS: dict[str, str] = {
    # growth through alternating copies
    "fib_choose": "loop X4 { X3 := X1 + X2 ; choose { X1 := X3 } or { X2 := X3 } }",
    # the same loop with one branch resetting instead of copying
    "fib_reset": "loop X4 { X3 := X1 + X2 ; choose { X1 := X3 } or { X2 := 0 } }",
    "double_via_inner": "loop X4 { loop X3 { X1 := X2 } ; X2 := X1 + X2 }",
    "double_via_inner_reset": "loop X4 { loop X3 { X1 := X2 } ; X2 := X1 + X2 ; X3 := 0 }",
    "bounded_add_loop": "loop X3 { X1 := X2 + X3 }",
    "reset_then_square_loop": "X2 := 0 ; loop X3 { X1 := X2 * X1 ; X2 := X1 }",
    "reset_then_square_loop_swapped": "X2 := 0 ; loop X3 { X2 := X1 ; X1 := X2 * X1 }",
    "add_square": "X3 := X2 * X2 ; X1 := X1 + X3",
    "add_twice": "X3 := X2 + X2 ; X1 := X1 + X3",
    "add": "X1 := X1 + X2",
    "identity": "vars 1\nskip",
    "doubling": "loop X2 { X1 := X1 + X1 }",
    "additive": "loop X3 { X1 := X1 + X2 }",
    "square": "X1 := X2 * X3",
    "multiply_loop": "loop X2 { X1 := X1 * X3 }",
    "nested_additive": "loop X1 { loop X2 { X3 := X3 + X4 } }",
    "counter_square": "loop X1 { X2 := X2 + X1 } ; loop X2 { X3 := X3 + X1 }",
    "reset_kills_product": "X2 := 0 ; loop X3 { X1 := X1 * X2 }",
    "reset_inside_loop": "loop X3 { X1 := 0 ; X1 := X1 + X2 }",
    "swap_accumulate": "loop X4 { X3 := X1 ; X1 := X2 ; X2 := X3 + X2 }",
    "choose_mul_or_skip": "loop X3 { choose { X1 := X1 * X2 } or { skip } }",
    "guarded_by_reset": "X3 := 0 ; loop X3 { X1 := X1 + X1 }",
    "reset_then_recover": "X2 := 0 ; loop X3 { X2 := X1 ; X1 := X1 + X2 }",
    "two_phase": "loop X5 { X4 := 0 ; loop X3 { X4 := X4 + X1 } ; X2 := X2 + X4 }",
}


def program(name: str) -> Program:
    return parse_program(PROGRAMS[name])


def corpus() -> dict[str, Program]:
    return {name: parse_program(text) for name, text in PROGRAMS.items()}


# ---------------------------------------------------------------------------


def _random_assign(rng: random.Random, n: int, free: list[int], reset_prob: float) -> Command:
    l = rng.choice(free)
    roll = rng.random()
    r, s = rng.randint(1, n), rng.randint(1, n)
    if roll < reset_prob:
        e = Zero()
    elif roll < 0.4:
        e = Var(r)
    elif roll < 0.75:
        e = Add(r, s)
    else:
        e = Mul(r, s)
    return Assign(l, e)


def random_command(rng: random.Random, n: int, depth: int, protected: frozenset[int] = frozenset(),
                   reset_prob: float = 0.15, size: int = 8) -> Command:
    """A random valid command over ``X1..Xn``.

    ``depth`` bounds loop nesting, ``size`` roughly bounds the number of
    leaves, and ``protected`` holds enclosing loop variables (never assigned).
    """
    free = [v for v in range(1, n + 1) if v not in protected]
    kinds = ["leaf"]
    if size > 1:
        kinds += ["seq", "seq", "choose"]
        if depth > 0:
            kinds += ["loop", "loop"]
    kind = rng.choice(kinds)
    if kind == "leaf":
        if free and rng.random() < 0.85:
            return _random_assign(rng, n, free, reset_prob)
        return Skip()
    if kind == "loop":
        l = rng.randint(1, n)
        return Loop(l, random_command(rng, n, depth - 1, protected | {l}, reset_prob, size - 1))
    k = rng.randint(1, size - 1)
    a = random_command(rng, n, depth, protected, reset_prob, k)
    b = random_command(rng, n, depth, protected, reset_prob, size - k)
    return Seq(a, b) if kind == "seq" else Choose(a, b)


def random_program(rng: random.Random, max_vars: int = 5, max_depth: int = 4,
                   reset_prob: float = 0.15, max_size: int = 12) -> Program:
    """A random program with at most ``max_vars`` variables and loop nesting <= ``max_depth``."""
    n = rng.randint(1, max_vars)
    return Program(n, random_command(rng, n, max_depth, reset_prob=reset_prob,
                                     size=rng.randint(2, max_size)))
