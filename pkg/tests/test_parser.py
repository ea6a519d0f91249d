import re

import pytest
from hypothesis import given, strategies as st

from lrbound.lang import Add, Assign, Choose, Loop, Mul, Program, Seq, Skip, Var, Zero, normalize, validate
from lrbound.parser import ParseError, parse_program, render, render_command, tokenize

from conftest import commands

FIB = Loop(4, Seq(Assign(3, Add(1, 2)), Choose(Assign(1, Var(3)), Assign(2, Var(3)))))
FIB_RESET = Loop(4, Seq(Assign(3, Add(1, 2)), Choose(Assign(1, Var(3)), Assign(2, Zero()))))

# multi-line layout with trailing semicolons
FIB_RESET_LISTING = """
loop X4 {
   X3 := X1+X2;
   choose { X1 := X3 } or { X2 := 0 };
 }
"""


def test_parse_copy_choice_loop():
    p = parse_program("loop X4 { X3 := X1 + X2 ; choose { X1 := X3 } or { X2 := X3 } }")
    assert p == Program(4, FIB)


def test_parse_skip():
    assert parse_program("skip") == Program(0, Skip())
    assert parse_program("vars 3\nskip") == Program(3, Skip())


def test_loop_variable_assignment_rejected():
    with pytest.raises(ParseError) as exc:
        parse_program("loop X1 { X1 := 0 }")
    assert "X1 assigned inside loop X1" in exc.value.message
    assert (exc.value.line, exc.value.column) == (1, 11)


def test_listing_with_trailing_semicolons():
    assert parse_program(FIB_RESET_LISTING) == Program(4, FIB_RESET)


def test_comments_and_whitespace():
    text = "# header\nvars 5 # five\nX1 := X2 * X3   # product\n;\n"
    assert parse_program(text) == Program(5, Assign(1, Mul(2, 3)))


@pytest.mark.parametrize("text, line, col", [
    ("X1 := 1", 1, 7),                     # only the constant 0
    ("X1 := X2 -", 1, 10),
    ("loop X1 X2 := 0", 1, 9),             # braces are mandatory
    ("choose { skip }", 1, 16),            # missing 'or'
    ("choose { skip } or skip", 1, 20),
    ("X0 := X1", 1, 1),
    ("skip skip", 1, 6),
    ("", 1, 1),
    ("loop X2 { }", 1, 11),
    ("\n\n  X1 := X2 + X3 + X4", 3, 17),
    ("vars 2\nX3 := 0", 2, 1),              # out of declared range
    ("skip ;; skip", 1, 7),
])
def test_errors_point_into_text(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_program(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_render_examples():
    assert render(Program(2, Assign(1, Var(2)))) == "X1 := X2"
    assert render_command(Seq(Skip(), Skip())) == "skip ; skip"
    # n larger than the indices used needs the header to round-trip
    assert render(Program(2, Seq(Skip(), Skip()))) == "vars 2\nskip ; skip"
    assert render(Program(1, Skip()), header=False) == "skip"


def _squash(text):
    text = re.sub(r"\s+", "", text)
    return text.replace(";}", "}")


def test_render_matches_listing():
    assert _squash(render(Program(4, FIB_RESET))) == _squash(FIB_RESET_LISTING)


def test_tokenize_positions():
    toks = tokenize("X1 :=\n  X2")
    assert [(t.kind, t.line, t.col) for t in toks] == [
        ("var", 1, 1), ("sym", 1, 4), ("var", 2, 3), ("eof", 2, 5)]


@given(commands(4), st.integers(4, 6))
def test_round_trip(c, n):
    p = Program(n, c)
    assert parse_program(render(p)) == Program(n, normalize(c))


@given(commands(3))
def test_parse_render_is_identity_on_normal_form(c):
    p = Program(3, normalize(c))
    assert parse_program(render(p)) == p
    assert render(parse_program(render(p))) == render(p)


@given(st.text(alphabet="X123 :=+*;{}loopchoseskipr0#\n", max_size=40))
def test_accepted_text_is_valid(text):
    try:
        p = parse_program(text)
    except ParseError as exc:
        assert exc.line >= 1 and exc.column >= 1
        return
    assert validate(p.root, p.n) == []
