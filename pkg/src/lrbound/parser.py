"""Text format for core-language programs (``.lr`` files).

Grammar::

    program ::= ["vars" N] cmd
    cmd     ::= "skip" | var ":=" rhs | cmd ";" cmd
              | "loop" var "{" cmd "}"
              | "choose" "{" cmd "}" "or" "{" cmd "}"
    rhs     ::= "0" | var | var "+" var | var "*" var
    var     ::= "X" digits

``#`` starts a comment, whitespace is insignificant, and a trailing ``;``
before ``}`` or end of input is tolerated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .lang import (
    Add, Assign, Choose, Command, Expr, Loop, Mul, Program, Seq, Skip, Var,
    Zero, max_var, seq_of, validate,
)


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class Token:
    kind: str   # 'kw', 'var', 'num', 'sym', 'eof'
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<var>X[0-9]+)
  | (?P<kw>skip|loop|choose|or|vars)\b
  | (?P<num>[0-9]+)
  | (?P<sym>:=|[;{}+*])
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(line, col, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.positions: dict[int, tuple[int, int]] = {}

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(tok.line, tok.col, msg)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            self.fail(f"expected {want}, got {got}")
        self.i += 1
        return tok

    def at(self, kind: str, text: str | None = None) -> bool:
        tok = self.tok
        return tok.kind == kind and (text is None or tok.text == text)

    def var(self) -> int:
        tok = self.expect("var")
        idx = int(tok.text[1:])
        if idx < 1:
            self.fail("variable indices start at 1", tok)
        return idx

    def program(self) -> tuple[int | None, Command]:
        declared = None
        if self.at("kw", "vars"):
            self.i += 1
            tok = self.expect("num")
            declared = int(tok.text)
        cmd = self.seq()
        if not self.at("eof"):
            self.fail(f"unexpected {self.tok.text!r}")
        return declared, cmd

    def seq(self) -> Command:
        cmds = [self.cmd()]
        while self.at("sym", ";"):
            self.i += 1
            if self.at("sym", "}") or self.at("eof"):
                break
            cmds.append(self.cmd())
        return seq_of(*cmds)

    def block(self) -> Command:
        self.expect("sym", "{")
        body = self.seq()
        self.expect("sym", "}")
        return body

    def cmd(self) -> Command:
        tok = self.tok
        if self.at("kw", "skip"):
            self.i += 1
            node: Command = Skip()
        elif self.at("kw", "loop"):
            self.i += 1
            lvar = self.var()
            node = Loop(lvar, self.block())
        elif self.at("kw", "choose"):
            self.i += 1
            c1 = self.block()
            self.expect("kw", "or")
            node = Choose(c1, self.block())
        elif self.at("var"):
            lhs = self.var()
            self.expect("sym", ":=")
            node = Assign(lhs, self.rhs())
        else:
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            self.fail(f"expected a command, got {got}")
        self.positions.setdefault(id(node), (tok.line, tok.col))
        return node

    def rhs(self) -> Expr:
        if self.at("num"):
            tok = self.expect("num")
            if tok.text != "0":
                self.fail(f"only the constant 0 is allowed, got {tok.text}", tok)
            return Zero()
        r = self.var()
        if self.at("sym", "+"):
            self.i += 1
            return Add(r, self.var())
        if self.at("sym", "*"):
            self.i += 1
            return Mul(r, self.var())
        return Var(r)


def parse_program(text: str) -> Program:
    """Parse and validate a program; raise :class:`ParseError` on any fault."""
    p = _Parser(text)
    declared, root = p.program()
    n = declared if declared is not None else max_var(root)
    problems = validate(root, n)
    if problems:
        first = problems[0]
        line, col = p.positions.get(id(first.node), (1, 1))
        raise ParseError(line, col, first.message)
    return Program(n, root)


def parse_command(text: str) -> Command:
    return parse_program(text).root


# ---------------------------------------------------------------------------


def render_expr(e: Expr) -> str:
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, Var):
        return f"X{e.r}"
    op = "+" if isinstance(e, Add) else "*"
    return f"X{e.r} {op} X{e.s}"


def render_command(c: Command) -> str:
    if isinstance(c, Skip):
        return "skip"
    if isinstance(c, Assign):
        return f"X{c.l} := {render_expr(c.e)}"
    if isinstance(c, Seq):
        # A left-nested sequence has no textual form of its own; it prints
        # like its right-nested normal form.
        return f"{render_command(c.c1)} ; {render_command(c.c2)}"
    if isinstance(c, Loop):
        return f"loop X{c.l} {{ {render_command(c.body)} }}"
    if isinstance(c, Choose):
        return f"choose {{ {render_command(c.c1)} }} or {{ {render_command(c.c2)} }}"
    raise TypeError(f"not a command: {c!r}")


def render(p: Program, header: bool | None = None) -> str:
    """Canonical text for ``p``.

    The ``vars`` header is written when ``header`` is true, or (by default)
    only when ``n`` differs from the largest index used in the program.
    """
    if header is None:
        header = p.n != max_var(p.root)
    body = render_command(p.root)
    return f"vars {p.n}\n{body}" if header else body
